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
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gadepth/calibration.hpp"
#include "gadepth/compare.hpp"
#include "gadepth/depth.hpp"
#include "gadepth/error.hpp"
#include "gadepth/parallel.hpp"
#include "gadepth/format.hpp"
#include "gadepth/manifest.hpp"
#include "gadepth/qasm.hpp"
#include "gadepth/report.hpp"
#include "gadepth/runtime.hpp"

// Command implementations behind the gadepth executable. Each returns the
// process exit code; reports go to `out`, diagnostics to `err`.

namespace gadepth::cli {

enum ExitCode : int {
  kOk = 0,
  kParseFailure = 2,
  kResolutionFailure = 3,
  kConfigFailure = 4,
  kManifestFailure = 5,
};

struct DepthOptions {
  std::vector<std::string> files;
  std::vector<std::string> metrics;
  std::optional<std::string> weights;
  std::string barrier = "skip";
};

struct WeightsOptions {
  std::vector<std::string> tables;
  std::optional<std::string> out;
  bool pooled = false;
};

struct EstimateOptions {
  std::vector<std::string> files;
  std::string durations;
  std::string barrier = "skip";
};

struct CompareOptions {
  std::string manifest;
  std::vector<std::string> metrics;
  std::string durations;
  std::optional<std::string> weights;
  std::optional<std::string> out;
  std::string barrier = "skip";
};

struct SweepOptions {
  std::string manifest;
  std::vector<std::string> durations;
  std::string grid = "0:1:0.01";
  std::optional<std::string> out;
  std::string barrier = "skip";
};

namespace detail {

/// Requested metrics in first-mention order. Without a request: traditional
/// and multi-qubit depth, plus gate-aware depth when weights are available.
inline std::vector<Metric> resolve_metrics(const std::vector<std::string>& names,
                                           bool have_weights) {
  std::vector<Metric> out;
  for (const auto& list : names) {
    std::size_t begin = 0;
    while (begin <= list.size()) {
      const std::size_t end = std::min(list.find(',', begin), list.size());
      const std::string name = list.substr(begin, end - begin);
      if (!name.empty()) {
        const Metric m = parse_metric(name);
        if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
      }
      begin = end + 1;
    }
  }
  if (out.empty()) {
    out = {Metric::traditional, Metric::multiqubit};
    if (have_weights) out.push_back(Metric::gateaware);
  }
  return out;
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write '" + path.string() + "'");
  os << text;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseFailure;
  } catch (const ResolutionError& e) {
    err << "error: " << e.what() << '\n';
    return kResolutionFailure;
  } catch (const ManifestError& e) {
    err << "error: " << e.what() << '\n';
    return kManifestFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kConfigFailure;
  }
}

}  // namespace detail

/// One JSON object per file with the requested depth values.
inline int cmd_depth(const DepthOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const BarrierMode barriers = parse_barrier_mode(opt.barrier);
    const auto metrics = detail::resolve_metrics(opt.metrics, opt.weights.has_value());
    const bool needs_weights =
        std::find(metrics.begin(), metrics.end(), Metric::gateaware) != metrics.end();
    if (needs_weights && !opt.weights) {
      throw ResolutionError("--metric gateaware needs --weights");
    }
    std::optional<WeightMap> weights;
    if (opt.weights) weights = load_weight_map(*opt.weights);

    auto lines = parallel_slots(opt.files.size(), [&](std::size_t i) {
      const Circuit c = load_qasm(opt.files[i]);
      Json line{{"file", opt.files[i]}};
      for (Metric m : metrics) {
        switch (m) {
          case Metric::traditional:
            line[metric_field(m)] = traditional_depth(c, barriers);
            break;
          case Metric::multiqubit:
            line[metric_field(m)] = multiqubit_depth(c, barriers);
            break;
          case Metric::gateaware:
            line[metric_field(m)] = gate_aware_depth(c, *weights, barriers);
            break;
        }
      }
      return dump_json(line);
    });
    for (auto& line : lines) out << std::move(line).get() << '\n';
    return static_cast<int>(kOk);
  });
}

/// Two-column listing of a weight map.
inline std::string weights_table(const WeightMap& w) {
  std::ostringstream os;
  os << "architecture " << w.architecture().value_or("(unnamed)") << '\n';
  for (const auto& [gate, value] : w.weights()) {
    char line[128];
    std::snprintf(line, sizeof line, "  %-10s %s\n", gate.c_str(),
                  format_double(value, kSummaryDigits).c_str());
    os << line;
  }
  return os.str();
}

/// Configures a weight map from device duration tables. Writes the JSON to
/// --out (and the listing to `out`), or the JSON to `out` and the listing to
/// `err` when no file is given.
inline int cmd_weights(const WeightsOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    if (opt.tables.empty()) throw ConfigError("no duration tables given");
    std::vector<DurationTable> tables;
    for (const auto& path : opt.tables) tables.push_back(load_duration_table(path));
    const WeightMap w = configure_weights(
        tables, opt.pooled ? Averaging::pooled : Averaging::hierarchical);
    const std::string doc = dump_json(to_json(w), 2) + "\n";
    if (opt.out) {
      detail::write_file(*opt.out, doc);
      out << weights_table(w);
    } else {
      out << doc;
      err << weights_table(w);
    }
    return static_cast<int>(kOk);
  });
}

inline int cmd_estimate(const EstimateOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const BarrierMode barriers = parse_barrier_mode(opt.barrier);
    const DurationTable table = load_duration_table(opt.durations);
    auto lines = parallel_slots(opt.files.size(), [&](std::size_t i) {
      const double runtime = estimate_runtime(load_qasm(opt.files[i]), table, barriers);
      return dump_json(Json{{"file", opt.files[i]}, {"runtime_s", runtime}});
    });
    for (auto& line : lines) out << std::move(line).get() << '\n';
    return static_cast<int>(kOk);
  });
}

/// Writes pairs.csv, report.json and summary.json into --out and prints a
/// text summary; without --out prints summary JSON.
inline int cmd_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const BarrierMode barriers = parse_barrier_mode(opt.barrier);
    const auto metrics = detail::resolve_metrics(opt.metrics, opt.weights.has_value());
    const bool needs_weights =
        std::find(metrics.begin(), metrics.end(), Metric::gateaware) != metrics.end();
    if (needs_weights && !opt.weights) {
      throw ResolutionError("metric gateaware needs --weights");
    }
    std::optional<WeightMap> weights;
    if (opt.weights) weights = load_weight_map(*opt.weights);
    const DurationTable device = load_duration_table(opt.durations);
    const Corpus corpus = load_corpus(load_manifest(opt.manifest));

    const ComparisonReport report = compare_versions(
        build_records(corpus, metrics, device, weights ? &*weights : nullptr, barriers),
        metrics, device.device());

    if (opt.out) {
      const std::filesystem::path dir = *opt.out;
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw ConfigError("cannot create '" + dir.string() + "': " + ec.message());
      detail::write_file(dir / "pairs.csv", pairs_csv(report));
      detail::write_file(dir / "report.json", dump_json(report_json(report), 2) + "\n");
      detail::write_file(dir / "summary.json", dump_json(summary_json(report), 2) + "\n");
      out << summary_text(report);
    } else {
      out << dump_json(summary_json(report), 2) << '\n';
    }
    return static_cast<int>(kOk);
  });
}

/// Median gate-aware %RE over a grid of single-qubit weights, per device.
inline int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const BarrierMode barriers = parse_barrier_mode(opt.barrier);
    if (opt.durations.empty()) throw ConfigError("sweep needs at least one --durations table");
    const auto grid = parse_grid(opt.grid);
    std::vector<DurationTable> devices;
    for (const auto& path : opt.durations) devices.push_back(load_duration_table(path));
    const Corpus corpus = load_corpus(load_manifest(opt.manifest));

    const SweepTemplate family = derive_sweep_template(corpus, devices);
    const SweepResult result = sweep_weights(corpus, devices, grid, family, barriers);
    const std::string summary = dump_json(sweep_summary_json(result), 2) + "\n";
    if (opt.out) {
      detail::write_file(*opt.out, sweep_csv(result));
      out << summary;
    } else {
      out << sweep_csv(result);
      err << summary;
    }
    return static_cast<int>(kOk);
  });
}

/// Full command line entry point.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Depth metrics and runtime estimation for compiled quantum circuits",
               "gadepth"};
  app.require_subcommand(1);

  DepthOptions depth;
  auto* depth_cmd = app.add_subcommand("depth", "traditional, multi-qubit and gate-aware depth");
  depth_cmd->add_option("files", depth.files, ".qasm files")->required();
  depth_cmd->add_option("--metric", depth.metrics,
                        "traditional, multiqubit or gateaware (repeatable, comma lists ok)");
  depth_cmd->add_option("--weights", depth.weights, "weight map JSON");
  depth_cmd->add_option("--barrier", depth.barrier, "skip or sync")
      ->check(CLI::IsMember({"skip", "sync"}));

  WeightsOptions weights;
  auto* weights_cmd = app.add_subcommand("weights", "configure a weight map from duration tables");
  weights_cmd->add_option("tables", weights.tables, "duration table JSON files")->required();
  weights_cmd->add_option("--out", weights.out, "write the weight map here");
  weights_cmd->add_flag("--pooled", weights.pooled, "average over all entries at once");

  EstimateOptions estimate;
  auto* estimate_cmd = app.add_subcommand("estimate", "runtime from exact gate durations");
  estimate_cmd->add_option("files", estimate.files, ".qasm files")->required();
  estimate_cmd->add_option("--durations", estimate.durations, "duration table JSON")->required();
  estimate_cmd->add_option("--barrier", estimate.barrier, "skip or sync")
      ->check(CLI::IsMember({"skip", "sync"}));

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand("compare", "metric accuracy across compiled versions");
  compare_cmd->add_option("manifest", compare.manifest, "manifest JSON")->required();
  compare_cmd->add_option("--metrics", compare.metrics, "comma-separated metric names");
  compare_cmd->add_option("--durations", compare.durations, "duration table JSON")->required();
  compare_cmd->add_option("--weights", compare.weights, "weight map JSON");
  compare_cmd->add_option("--out", compare.out, "report directory");
  compare_cmd->add_option("--barrier", compare.barrier, "skip or sync")
      ->check(CLI::IsMember({"skip", "sync"}));

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "median gate-aware %RE over single-qubit weights");
  sweep_cmd->add_option("manifest", sweep.manifest, "manifest JSON")->required();
  sweep_cmd->add_option("--durations", sweep.durations, "duration table JSON (one per device)")
      ->required();
  sweep_cmd->add_option("--grid", sweep.grid, "start:stop:step");
  sweep_cmd->add_option("--out", sweep.out, "sweep CSV path");
  sweep_cmd->add_option("--barrier", sweep.barrier, "skip or sync")
      ->check(CLI::IsMember({"skip", "sync"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigFailure;
  }

  if (depth_cmd->parsed()) return cmd_depth(depth, out, err);
  if (weights_cmd->parsed()) return cmd_weights(weights, out, err);
  if (estimate_cmd->parsed()) return cmd_estimate(estimate, out, err);
  if (compare_cmd->parsed()) return cmd_compare(compare, out, err);
  return cmd_sweep(sweep, out, err);
}

}  // namespace gadepth::cli
