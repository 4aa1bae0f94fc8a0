// Copyright 2026 The gadepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gadepth/calibration.hpp"
#include "gadepth/circuit.hpp"
#include "gadepth/depth.hpp"
#include "gadepth/error.hpp"
#include "gadepth/parallel.hpp"
#include "gadepth/runtime.hpp"
#include "gadepth/stats.hpp"

// Accuracy of depth metrics as predictors of runtime, measured across
// compiled versions of the same base circuit.

namespace gadepth {

/// Metric values closer than this (relative) are tied for the minimum.
inline constexpr double kMetricTieRelative = 1e-9;
/// Runtimes closer than this many seconds are tied for the minimum.
inline constexpr double kRuntimeTieSeconds = 1e-12;

/// (a - b) / b, or nothing when b is zero.
inline std::optional<double> relative_difference(double a, double b) {
  if (b == 0.0) return std::nullopt;
  return (a - b) / b;
}

/// Error of a predicted relative change `predicted` against the true change
/// `actual`, in percent. Undefined when the true change is zero.
inline std::optional<double> percent_relative_error(double predicted,
                                                    double actual) {
  if (actual == 0.0) return std::nullopt;
  return std::abs(predicted - actual) / std::abs(actual) * 100.0;
}

struct VersionRecord {
  std::string base;
  std::string compiler;
  std::map<std::string, double> metric_values;
  double runtime_s = 0.0;

  double metric(std::string_view name) const {
    auto it = metric_values.find(std::string(name));
    if (it == metric_values.end()) {
      throw ConfigError("version '" + compiler + "' of '" + base +
                        "' has no value for metric '" + std::string(name) + "'");
    }
    return it->second;
  }
};

enum PairFlag : unsigned {
  kPairOk = 0,
  kMetricDenominatorZero = 1u << 0,  // metric of C2 is zero
  kRuntimeDenominatorZero = 1u << 1,  // runtime of C2 is zero
  kRuntimeUnchanged = 1u << 2,  // delta runtime is zero, %RE undefined
};

inline std::string pair_flags_string(unsigned flags) {
  std::string out;
  auto add = [&](unsigned bit, const char* name) {
    if ((flags & bit) == 0) return;
    if (!out.empty()) out += '|';
    out += name;
  };
  add(kMetricDenominatorZero, "metric_zero");
  add(kRuntimeDenominatorZero, "runtime_zero");
  add(kRuntimeUnchanged, "runtime_unchanged");
  return out;
}

/// One ordered comparison between two versions of a base circuit.
/// `compiler_a` is C1 (numerator side) and `compiler_b` is C2, the reference
/// whose values form the denominators. C2 is always the lexicographically
/// smaller compiler id.
struct PairComparison {
  std::string base;
  std::string compiler_a;
  std::string compiler_b;
  std::string metric;
  std::optional<double> delta_metric;
  std::optional<double> delta_runtime;
  std::optional<double> percent_re;
  unsigned flags = kPairOk;

  bool usable() const noexcept { return percent_re.has_value(); }
};

namespace detail {

/// Records grouped by base circuit, bases in first-appearance order and
/// versions sorted by compiler id.
inline std::vector<std::vector<const VersionRecord*>> group_by_base(
    std::span<const VersionRecord> records) {
  std::vector<std::vector<const VersionRecord*>> groups;
  std::map<std::string, std::size_t> slot;
  for (const auto& r : records) {
    auto [it, inserted] = slot.try_emplace(r.base, groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(&r);
  }
  for (auto& g : groups) {
    std::sort(g.begin(), g.end(), [](const VersionRecord* a, const VersionRecord* b) {
      return a->compiler < b->compiler;
    });
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (g[i]->compiler == g[i - 1]->compiler) {
        throw ConfigError("base '" + g[i]->base + "' has two versions from '" +
                          g[i]->compiler + "'");
      }
    }
  }
  return groups;
}

}  // namespace detail

inline PairComparison compare_pair(const VersionRecord& c1, const VersionRecord& c2,
                                   std::string_view metric) {
  PairComparison p{c1.base, c1.compiler, c2.compiler, std::string(metric),
                   std::nullopt, std::nullopt, std::nullopt, kPairOk};
  p.delta_metric = relative_difference(c1.metric(metric), c2.metric(metric));
  if (!p.delta_metric) p.flags |= kMetricDenominatorZero;
  p.delta_runtime = relative_difference(c1.runtime_s, c2.runtime_s);
  if (!p.delta_runtime) p.flags |= kRuntimeDenominatorZero;
  if (p.delta_runtime && *p.delta_runtime == 0.0) p.flags |= kRuntimeUnchanged;
  if (p.delta_metric && p.delta_runtime) {
    p.percent_re = percent_relative_error(*p.delta_metric, *p.delta_runtime);
  }
  return p;
}

/// Every unordered pair of versions within each base circuit: k(k-1)/2
/// comparisons for a base with k versions.
inline std::vector<PairComparison> all_pairs(std::span<const VersionRecord> records,
                                             std::string_view metric) {
  std::vector<PairComparison> out;
  for (const auto& group : detail::group_by_base(records)) {
    for (std::size_t j = 0; j < group.size(); ++j) {
      for (std::size_t i = j + 1; i < group.size(); ++i) {
        out.push_back(compare_pair(*group[i], *group[j], metric));
      }
    }
  }
  return out;
}

/// %RE values of the usable pairs, in pair order.
inline std::vector<double> usable_errors(std::span<const PairComparison> pairs) {
  std::vector<double> out;
  for (const auto& p : pairs) {
    if (p.usable()) out.push_back(*p.percent_re);
  }
  return out;
}

struct Identification {
  std::string base;
  bool correct = false;
  std::vector<std::string> metric_argmin;   // compiler ids, sorted
  std::vector<std::string> runtime_argmin;  // compiler ids, sorted
};

/// Checks whether the versions minimizing `metric` are exactly the versions
/// minimizing runtime. A tie for the lowest metric value that includes a
/// non-optimal version counts as incorrect.
inline Identification identify_optimal(std::span<const VersionRecord> versions,
                                       std::string_view metric) {
  Identification out;
  if (versions.empty()) return out;
  out.base = versions.front().base;

  double best_metric = versions.front().metric(metric);
  double best_runtime = versions.front().runtime_s;
  for (const auto& v : versions) {
    best_metric = std::min(best_metric, v.metric(metric));
    best_runtime = std::min(best_runtime, v.runtime_s);
  }
  for (const auto& v : versions) {
    const double m = v.metric(metric);
    const double scale = std::max(std::abs(m), std::abs(best_metric));
    if (m - best_metric <= kMetricTieRelative * scale) {
      out.metric_argmin.push_back(v.compiler);
    }
    if (v.runtime_s - best_runtime <= kRuntimeTieSeconds) {
      out.runtime_argmin.push_back(v.compiler);
    }
  }
  std::sort(out.metric_argmin.begin(), out.metric_argmin.end());
  std::sort(out.runtime_argmin.begin(), out.runtime_argmin.end());
  out.correct = out.metric_argmin == out.runtime_argmin;
  return out;
}

/// One identification per base circuit, in first-appearance order.
inline std::vector<Identification> identify_all(std::span<const VersionRecord> records,
                                                std::string_view metric) {
  std::vector<Identification> out;
  for (const auto& group : detail::group_by_base(records)) {
    std::vector<VersionRecord> versions;
    for (const auto* r : group) versions.push_back(*r);
    out.push_back(identify_optimal(versions, metric));
  }
  return out;
}

/// Percentage of correct identifications; nothing for an empty list.
inline std::optional<double> identification_accuracy(
    std::span<const Identification> ids) {
  if (ids.empty()) return std::nullopt;
  const auto correct = std::count_if(ids.begin(), ids.end(),
                                     [](const Identification& i) { return i.correct; });
  return 100.0 * static_cast<double>(correct) / static_cast<double>(ids.size());
}

// ---------------------------------------------------------------------------
// Corpus of compiled versions and full reports

struct CircuitVersion {
  std::string compiler;
  Circuit circuit;
  std::string file;  // informational
};

struct BaseCircuit {
  std::string name;
  std::vector<CircuitVersion> versions;
};

using Corpus = std::vector<BaseCircuit>;

/// Evaluates `metrics` and the runtime on `device` for every version.
inline std::vector<VersionRecord> build_records(const Corpus& corpus,
                                                std::span<const Metric> metrics,
                                                const DurationTable& device,
                                                const WeightMap* weights,
                                                BarrierMode barriers = BarrierMode::skip) {
  std::vector<std::pair<const BaseCircuit*, const CircuitVersion*>> jobs;
  for (const auto& base : corpus) {
    for (const auto& v : base.versions) jobs.emplace_back(&base, &v);
  }
  return parallel_map(jobs.size(), [&](std::size_t i) {
    const auto& [base, v] = jobs[i];
    VersionRecord r{base->name, v->compiler, {}, 0.0};
    for (Metric m : metrics) {
      r.metric_values[metric_name(m)] = evaluate_metric(m, v->circuit, weights, barriers);
    }
    r.runtime_s = estimate_runtime(v->circuit, device, barriers);
    return r;
  });
}

struct MetricReport {
  Metric metric = Metric::traditional;
  std::vector<PairComparison> pairs;
  std::optional<DistributionSummary> distribution;  // over usable pairs
  std::size_t excluded_pairs = 0;
  std::vector<Identification> identifications;
  std::optional<double> accuracy_percent;
};

struct ComparisonReport {
  std::string device;
  std::vector<VersionRecord> records;
  std::vector<MetricReport> metrics;
};

inline ComparisonReport compare_versions(std::vector<VersionRecord> records,
                                         std::span<const Metric> metrics,
                                         std::string device = "") {
  ComparisonReport report{std::move(device), std::move(records), {}};
  for (Metric m : metrics) {
    MetricReport mr;
    mr.metric = m;
    mr.pairs = all_pairs(report.records, metric_name(m));
    const auto errors = usable_errors(mr.pairs);
    mr.excluded_pairs = mr.pairs.size() - errors.size();
    if (!errors.empty()) mr.distribution = summarize_distribution(errors);
    mr.identifications = identify_all(report.records, metric_name(m));
    mr.accuracy_percent = identification_accuracy(mr.identifications);
    report.metrics.push_back(std::move(mr));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Weight sweep

/// Weight map family parameterized by one single-qubit weight w_s: names in
/// `swept` get w_s, everything else keeps its fixed value.
struct SweepTemplate {
  std::map<std::string, double> fixed;
  std::set<std::string> swept;

  WeightMap at(double ws) const {
    WeightMap w;
    for (const auto& [name, value] : fixed) w.set(name, value);
    for (const auto& name : swept) w.set(name, ws);
    return w;
  }
};

/// Derives the sweep family from the corpus and calibration data.
/// Multi-qubit gates get 1, gates whose average time is zero get 0, other
/// single-qubit unitaries are swept. Measurements keep their average time
/// relative to the slowest multi-qubit gate.
inline SweepTemplate derive_sweep_template(const Corpus& corpus,
                                           std::span<const DurationTable> devices) {
  std::map<std::string, GateKind> kinds;
  std::set<std::string> multi;
  for (const auto& base : corpus) {
    for (const auto& v : base.versions) {
      for (const Gate& g : v.circuit) {
        if (is_directive(g)) continue;
        kinds.emplace(g.name, g.kind);
        if (is_multi_qubit(g)) multi.insert(g.name);
      }
    }
  }

  // Cross-device mean time per gate.
  std::map<std::string, std::pair<double, std::size_t>> acc;
  for (const auto& t : devices) {
    for (const auto& [gate, s] : summarize(t)) {
      acc[gate].first += s.mean;
      acc[gate].second += 1;
    }
  }
  auto mean_time = [&](const std::string& gate) -> std::optional<double> {
    auto it = acc.find(gate);
    if (it == acc.end()) return std::nullopt;
    return it->second.first / static_cast<double>(it->second.second);
  };

  double anchor = 0.0;
  for (const auto& name : multi) anchor = std::max(anchor, mean_time(name).value_or(0.0));

  SweepTemplate out;
  for (const auto& [name, kind] : kinds) {
    const auto t = mean_time(name);
    if (multi.count(name) != 0) {
      out.fixed[name] = 1.0;
    } else if (t && *t == 0.0) {
      out.fixed[name] = 0.0;
    } else if (kind == GateKind::unitary) {
      out.swept.insert(name);
    } else {
      if (!t || !(anchor > 0.0)) {
        throw ResolutionError("cannot weight '" + name +
                              "' for the sweep: no calibration data");
      }
      out.fixed[name] = *t / anchor;
    }
  }
  return out;
}

/// Grid of `start`, `start + step`, ... up to `stop` inclusive. Points are
/// rounded to 12 decimals so 0.07 is the double nearest 0.07.
inline std::vector<double> make_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start) ||
      !std::isfinite(stop) || stop < start) {
    throw ConfigError("grid needs finite start <= stop and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

/// Parses "start:stop:step".
inline std::vector<double> parse_grid(std::string_view spec) {
  std::vector<double> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = spec.find(':', begin);
    const std::string piece(spec.substr(begin, end == std::string_view::npos ? end : end - begin));
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) {
      throw ConfigError("malformed grid '" + std::string(spec) + "' (expected start:stop:step)");
    }
    parts.push_back(v);
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  if (parts.size() != 3) {
    throw ConfigError("malformed grid '" + std::string(spec) + "' (expected start:stop:step)");
  }
  return make_grid(parts[0], parts[1], parts[2]);
}

struct SweepResult {
  std::vector<std::string> devices;
  std::vector<double> grid;
  /// medians[g][d]: median gate-aware %RE at grid[g] on devices[d]; empty
  /// when no pair had a usable %RE.
  std::vector<std::vector<std::optional<double>>> medians;
  /// Per device, the grid value with the lowest median (first on ties).
  std::vector<std::optional<double>> argmin;
};

/// Re-runs the gate-aware %RE analysis for every w_s in `grid`. Runtimes do
/// not depend on w_s and are computed once per device.
inline SweepResult sweep_weights(const Corpus& corpus,
                                 std::span<const DurationTable> devices,
                                 std::span<const double> grid,
                                 const SweepTemplate& family,
                                 BarrierMode barriers = BarrierMode::skip) {
  for (double ws : grid) {
    if (!(ws >= 0.0 && ws <= 1.0)) throw ConfigError("grid values must lie in [0,1]");
  }
  SweepResult out;
  out.grid.assign(grid.begin(), grid.end());
  for (const auto& d : devices) out.devices.push_back(d.device());

  const char* metric = metric_name(Metric::gateaware);
  std::vector<std::vector<VersionRecord>> per_device;
  for (const auto& device : devices) {
    std::vector<VersionRecord> records;
    for (const auto& base : corpus) {
      for (const auto& v : base.versions) {
        records.push_back({base.name, v.compiler, {},
                           estimate_runtime(v.circuit, device, barriers)});
      }
    }
    per_device.push_back(std::move(records));
  }

  for (double ws : grid) {
    const WeightMap weights = family.at(ws);
    std::vector<double> depths;
    for (const auto& base : corpus) {
      for (const auto& v : base.versions) {
        depths.push_back(gate_aware_depth(v.circuit, weights, barriers));
      }
    }
    std::vector<std::optional<double>> row;
    for (auto& records : per_device) {
      for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].metric_values[metric] = depths[i];
      }
      const auto errors = usable_errors(all_pairs(records, metric));
      row.push_back(errors.empty()
                        ? std::nullopt
                        : std::optional<double>(summarize_distribution(errors).median));
    }
    out.medians.push_back(std::move(row));
  }

  for (std::size_t d = 0; d < devices.size(); ++d) {
    std::optional<double> best_ws;
    std::optional<double> best;
    for (std::size_t g = 0; g < out.grid.size(); ++g) {
      const auto& m = out.medians[g][d];
      if (m && (!best || *m < *best)) {
        best = m;
        best_ws = out.grid[g];
      }
    }
    out.argmin.push_back(best_ws);
  }
  return out;
}

}  // namespace gadepth
