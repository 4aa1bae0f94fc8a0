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

#include <optional>
#include <sstream>
#include <string>

#include "gadepth/compare.hpp"
#include "gadepth/format.hpp"
#include "gadepth/stats.hpp"

// Serialized forms of comparison and sweep results. Floating-point values in
// JSON and CSV carry 17 significant digits; text summaries carry 6.

namespace gadepth {

namespace detail {

inline Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline std::string csv_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

inline std::string text_number(const std::optional<double>& v) {
  return v ? format_double(*v, kSummaryDigits) : std::string("n/a");
}

}  // namespace detail

inline Json to_json(const DistributionSummary& s) {
  Json outliers = Json::array();
  for (double v : s.outliers) outliers.push_back(v);
  return Json{{"n", s.n},
              {"median", s.median},
              {"q1", s.q1},
              {"q3", s.q3},
              {"iqr", s.iqr},
              {"lower_fence", s.lower_fence},
              {"upper_fence", s.upper_fence},
              {"outliers", std::move(outliers)}};
}

inline Json to_json(const PairComparison& p) {
  return Json{{"base", p.base},
              {"compiler_a", p.compiler_a},
              {"compiler_b", p.compiler_b},
              {"metric", p.metric},
              {"delta_metric", detail::optional_number(p.delta_metric)},
              {"delta_runtime", detail::optional_number(p.delta_runtime)},
              {"percent_re", detail::optional_number(p.percent_re)},
              {"flags", pair_flags_string(p.flags)}};
}

inline Json to_json(const Identification& id) {
  return Json{{"base", id.base},
              {"correct", id.correct},
              {"metric_argmin", id.metric_argmin},
              {"runtime_argmin", id.runtime_argmin}};
}

inline Json report_metadata(const ComparisonReport& r) {
  return Json{{"device", r.device},
              {"quartile_method", kQuartileMethod},
              {"orientation", "delta = (compiler_a - compiler_b) / compiler_b; "
                              "compiler_b is the lexicographically smaller id"},
              {"tie_tolerance", Json{{"metric_relative", kMetricTieRelative},
                                     {"runtime_seconds", kRuntimeTieSeconds}}}};
}

/// Full report: every version record, pair and identification.
inline Json report_json(const ComparisonReport& r) {
  Json doc = report_metadata(r);
  Json records = Json::array();
  for (const auto& rec : r.records) {
    Json values = Json::object();
    for (const auto& [name, v] : rec.metric_values) values[name] = v;
    records.push_back(Json{{"base", rec.base},
                           {"compiler", rec.compiler},
                           {"metrics", std::move(values)},
                           {"runtime_s", rec.runtime_s}});
  }
  doc["records"] = std::move(records);
  Json metrics = Json::object();
  for (const auto& m : r.metrics) {
    Json pairs = Json::array();
    for (const auto& p : m.pairs) pairs.push_back(to_json(p));
    Json ids = Json::array();
    for (const auto& id : m.identifications) ids.push_back(to_json(id));
    metrics[metric_name(m.metric)] = Json{{"pairs", std::move(pairs)},
                                          {"identifications", std::move(ids)}};
  }
  doc["metrics"] = std::move(metrics);
  return doc;
}

/// Per-metric %RE distribution and identification accuracy.
inline Json summary_json(const ComparisonReport& r) {
  Json doc = report_metadata(r);
  Json metrics = Json::object();
  for (const auto& m : r.metrics) {
    std::size_t correct = 0;
    for (const auto& id : m.identifications) correct += id.correct ? 1 : 0;
    metrics[metric_name(m.metric)] = Json{
        {"pairs", m.pairs.size()},
        {"excluded_pairs", m.excluded_pairs},
        {"percent_re", m.distribution ? to_json(*m.distribution) : Json(nullptr)},
        {"identification_accuracy_percent", detail::optional_number(m.accuracy_percent)},
        {"identifications_correct", correct},
        {"identifications_total", m.identifications.size()}};
  }
  doc["metrics"] = std::move(metrics);
  return doc;
}

inline std::string pairs_csv(const ComparisonReport& r) {
  std::ostringstream os;
  os << "base,compiler_a,compiler_b,metric,delta_metric,delta_runtime,percent_re,flags\n";
  for (const auto& m : r.metrics) {
    for (const auto& p : m.pairs) {
      os << csv_field(p.base) << ',' << csv_field(p.compiler_a) << ','
         << csv_field(p.compiler_b) << ',' << p.metric << ','
         << detail::csv_number(p.delta_metric) << ','
         << detail::csv_number(p.delta_runtime) << ','
         << detail::csv_number(p.percent_re) << ',' << pair_flags_string(p.flags) << '\n';
    }
  }
  return os.str();
}

inline std::string summary_text(const ComparisonReport& r) {
  std::ostringstream os;
  if (!r.device.empty()) os << "device " << r.device << '\n';
  os << "metric        pairs  excluded  median %RE  q1 %RE      q3 %RE      identified\n";
  for (const auto& m : r.metrics) {
    const auto& d = m.distribution;
    char line[256];
    std::snprintf(line, sizeof line, "%-12s  %5zu  %8zu  %-10s  %-10s  %-10s  %s%%\n",
                  metric_name(m.metric), m.pairs.size(), m.excluded_pairs,
                  detail::text_number(d ? std::optional(d->median) : std::nullopt).c_str(),
                  detail::text_number(d ? std::optional(d->q1) : std::nullopt).c_str(),
                  detail::text_number(d ? std::optional(d->q3) : std::nullopt).c_str(),
                  detail::text_number(m.accuracy_percent).c_str());
    os << line;
  }
  return os.str();
}

inline std::string sweep_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "w_s,device,median_percent_re\n";
  for (std::size_t g = 0; g < s.grid.size(); ++g) {
    for (std::size_t d = 0; d < s.devices.size(); ++d) {
      os << format_double(s.grid[g]) << ',' << csv_field(s.devices[d]) << ','
         << detail::csv_number(s.medians[g][d]) << '\n';
    }
  }
  return os.str();
}

inline Json sweep_summary_json(const SweepResult& s) {
  Json devices = Json::array();
  for (std::size_t d = 0; d < s.devices.size(); ++d) {
    std::optional<double> best;
    for (std::size_t g = 0; g < s.grid.size(); ++g) {
      if (s.argmin[d] && s.grid[g] == *s.argmin[d]) best = s.medians[g][d];
    }
    devices.push_back(Json{{"device", s.devices[d]},
                           {"argmin_w_s", detail::optional_number(s.argmin[d])},
                           {"median_percent_re", detail::optional_number(best)}});
  }
  return Json{{"grid_points", s.grid.size()}, {"devices", std::move(devices)}};
}

}  // namespace gadepth
