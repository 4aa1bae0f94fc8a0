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
#include <compare>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gadepth/circuit.hpp"
#include "gadepth/depth.hpp"
#include "gadepth/error.hpp"
#include "gadepth/format.hpp"

namespace gadepth {

/// (gate name, ordered qubit tuple). Direction matters: ecr on [0,1] and ecr
/// on [1,0] are different locations.
struct LocationKey {
  std::string gate;
  std::vector<QubitIndex> qubits;

  auto operator<=>(const LocationKey&) const = default;
  bool operator==(const LocationKey&) const = default;
};

inline std::string to_string(const LocationKey& key) {
  std::string out = "(" + key.gate + ",[";
  for (std::size_t i = 0; i < key.qubits.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(key.qubits[i]);
  }
  return out + "])";
}

/// Exact gate times of one device, in seconds.
class DurationTable {
 public:
  DurationTable() = default;
  DurationTable(std::string device, std::string architecture)
      : device_(std::move(device)), architecture_(std::move(architecture)) {}

  /// Throws ConfigError on a repeated location or an invalid duration.
  void add_entry(std::string gate, std::vector<QubitIndex> qubits,
                 double seconds) {
    check_duration(gate, seconds);
    LocationKey key{std::move(gate), std::move(qubits)};
    if (entries_.count(key) != 0) {
      throw ConfigError("duplicate duration entry " + to_string(key));
    }
    entries_.emplace(std::move(key), seconds);
  }

  /// Fallback duration for `gate` on locations without an entry.
  void set_default(const std::string& gate, double seconds) {
    check_duration(gate, seconds);
    defaults_[gate] = seconds;
  }

  /// Exact location first, then the gate default.
  std::optional<double> lookup(const std::string& gate,
                               std::span<const QubitIndex> qubits) const {
    LocationKey key{gate, {qubits.begin(), qubits.end()}};
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
    if (auto it = defaults_.find(gate); it != defaults_.end()) return it->second;
    return std::nullopt;
  }

  const std::string& device() const noexcept { return device_; }
  const std::string& architecture() const noexcept { return architecture_; }
  const std::map<LocationKey, double>& entries() const noexcept {
    return entries_;
  }
  const std::map<std::string, double>& defaults() const noexcept {
    return defaults_;
  }

  /// Copy with every duration multiplied by `factor`.
  DurationTable scaled(double factor) const {
    DurationTable out(device_, architecture_);
    for (const auto& [key, d] : entries_) out.entries_.emplace(key, d * factor);
    for (const auto& [gate, d] : defaults_) out.defaults_.emplace(gate, d * factor);
    return out;
  }

  bool operator==(const DurationTable&) const = default;

 private:
  static void check_duration(const std::string& gate, double seconds) {
    if (!std::isfinite(seconds) || seconds < 0.0) {
      throw ConfigError("duration for '" + gate +
                        "' must be finite and non-negative");
    }
  }

  std::string device_;
  std::string architecture_;
  std::map<LocationKey, double> entries_;
  std::map<std::string, double> defaults_;
};

namespace detail {

inline std::string pointer_join(const std::string& base, const std::string& key) {
  std::string escaped;
  for (char ch : key) {
    if (ch == '~') escaped += "~0";
    else if (ch == '/') escaped += "~1";
    else escaped += ch;
  }
  return base + "/" + escaped;
}

inline std::string pointer_join(const std::string& base, std::size_t index) {
  return base + "/" + std::to_string(index);
}

inline const nlohmann::json& require_member(const nlohmann::json& obj,
                                            const std::string& where,
                                            const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError(where, "missing required member '" + key + "'");
  }
  return *it;
}

inline std::string require_string(const nlohmann::json& v,
                                  const std::string& where) {
  if (!v.is_string()) throw SchemaError(where, "expected a string");
  return v.get<std::string>();
}

inline double require_duration(const nlohmann::json& v,
                               const std::string& where) {
  if (!v.is_number()) throw SchemaError(where, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d) || d < 0.0) {
    throw SchemaError(where, "duration must be finite and non-negative");
  }
  return d;
}

inline void require_gate_name(const std::string& name, const std::string& where) {
  if (name.empty()) throw SchemaError(where, "gate name is empty");
  for (char ch : name) {
    if (ch >= 'A' && ch <= 'Z') {
      throw SchemaError(where, "gate names are lowercase, got '" + name + "'");
    }
  }
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

/// Validates `doc` against the duration-table schema:
/// {"device": str, "architecture": str,
///  "entries": [{"gate": str, "qubits": [int...], "duration_s": number}...],
///  "defaults": {str: number}?}
inline DurationTable duration_table_from_json(const nlohmann::json& doc) {
  using detail::pointer_join;
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  DurationTable table(
      detail::require_string(detail::require_member(doc, "", "device"),
                             "/device"),
      detail::require_string(detail::require_member(doc, "", "architecture"),
                             "/architecture"));

  const auto& entries = detail::require_member(doc, "", "entries");
  if (!entries.is_array()) throw SchemaError("/entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = pointer_join("/entries", i);
    const auto& e = entries[i];
    if (!e.is_object()) throw SchemaError(where, "expected an object");
    std::string gate = detail::require_string(
        detail::require_member(e, where, "gate"), pointer_join(where, "gate"));
    detail::require_gate_name(gate, pointer_join(where, "gate"));

    const std::string qwhere = pointer_join(where, "qubits");
    const auto& qs = detail::require_member(e, where, "qubits");
    if (!qs.is_array() || qs.empty()) {
      throw SchemaError(qwhere, "expected a non-empty array of qubit indices");
    }
    std::vector<QubitIndex> qubits;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      if (!qs[k].is_number_integer() || qs[k].get<long long>() < 0) {
        throw SchemaError(pointer_join(qwhere, k),
                          "expected a non-negative integer");
      }
      qubits.push_back(qs[k].get<QubitIndex>());
    }
    const double d = detail::require_duration(
        detail::require_member(e, where, "duration_s"),
        pointer_join(where, "duration_s"));

    LocationKey key{gate, qubits};
    if (table.entries().count(key) != 0) {
      throw SchemaError(where, "duplicate entry for " + to_string(key));
    }
    table.add_entry(std::move(gate), std::move(qubits), d);
  }

  if (auto it = doc.find("defaults"); it != doc.end()) {
    if (!it->is_object()) throw SchemaError("/defaults", "expected an object");
    for (const auto& [gate, value] : it->items()) {
      const std::string where = pointer_join("/defaults", gate);
      detail::require_gate_name(gate, where);
      table.set_default(gate, detail::require_duration(value, where));
    }
  }
  return table;
}

inline nlohmann::json to_json(const DurationTable& table) {
  nlohmann::json doc;
  doc["device"] = table.device();
  doc["architecture"] = table.architecture();
  doc["entries"] = nlohmann::json::array();
  for (const auto& [key, d] : table.entries()) {
    doc["entries"].push_back(
        {{"gate", key.gate}, {"qubits", key.qubits}, {"duration_s", d}});
  }
  if (!table.defaults().empty()) {
    doc["defaults"] = nlohmann::json::object();
    for (const auto& [gate, d] : table.defaults()) doc["defaults"][gate] = d;
  }
  return doc;
}

inline DurationTable load_duration_table(const std::string& path) {
  try {
    return duration_table_from_json(detail::read_json_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(e.pointer(), path + ": " + e.detail());
  }
}

struct GateTimeStats {
  double mean = 0.0;
  std::size_t count = 0;
  double min = 0.0;
  double max = 0.0;
  bool from_default = false;  // no location entries; the gate default was used

  bool operator==(const GateTimeStats&) const = default;
};

using GateTimeSummary = std::map<std::string, GateTimeStats>;

/// Per-gate statistics over all location entries of `table`. Gates that only
/// have a default report that default as a single sample.
inline GateTimeSummary summarize(const DurationTable& table) {
  GateTimeSummary out;
  std::map<std::string, double> sums;
  for (const auto& [key, d] : table.entries()) {
    auto [it, inserted] = out.try_emplace(key.gate, GateTimeStats{0.0, 0, d, d});
    GateTimeStats& s = it->second;
    s.count += 1;
    s.min = std::min(s.min, d);
    s.max = std::max(s.max, d);
    sums[key.gate] += d;
  }
  for (auto& [gate, s] : out) {
    s.mean = std::clamp(sums[gate] / static_cast<double>(s.count), s.min, s.max);
  }
  for (const auto& [gate, d] : table.defaults()) {
    if (out.count(gate) == 0) out.emplace(gate, GateTimeStats{d, 1, d, d, true});
  }
  return out;
}

enum class Averaging {
  hierarchical,  // mean of per-device means
  pooled,        // mean over every entry of every device
};

/// Builds an architecture weight map from the calibration data of one or more
/// devices: each gate's average time divided by the largest average time.
/// Throws ConfigError when `tables` is empty, mixes architectures, or has no
/// gate with a positive average time.
inline WeightMap configure_weights(std::span<const DurationTable> tables,
                                   Averaging averaging = Averaging::hierarchical) {
  if (tables.empty()) throw ConfigError("no duration tables given");
  const std::string& arch = tables.front().architecture();
  for (const auto& t : tables) {
    if (t.architecture() != arch) {
      throw ConfigError("mixed architectures: '" + arch + "' and '" +
                        t.architecture() + "'");
    }
  }

  // Per gate: running (sum, count) of the samples being averaged.
  std::map<std::string, std::pair<double, std::size_t>> acc;
  for (const auto& t : tables) {
    if (averaging == Averaging::hierarchical) {
      for (const auto& [gate, s] : summarize(t)) {
        acc[gate].first += s.mean;
        acc[gate].second += 1;
      }
    } else {
      std::map<std::string, bool> has_entry;
      for (const auto& [key, d] : t.entries()) {
        acc[key.gate].first += d;
        acc[key.gate].second += 1;
        has_entry[key.gate] = true;
      }
      for (const auto& [gate, d] : t.defaults()) {
        if (!has_entry[gate]) {
          acc[gate].first += d;
          acc[gate].second += 1;
        }
      }
    }
  }

  std::map<std::string, double> means;
  double anchor = 0.0;
  for (const auto& [gate, sc] : acc) {
    const double m = sc.first / static_cast<double>(sc.second);
    means[gate] = m;
    anchor = std::max(anchor, m);
  }
  if (!(anchor > 0.0)) {
    throw ConfigError("every average gate time is zero; nothing to normalize by");
  }

  WeightMap out;
  out.set_architecture(arch);
  for (const auto& [gate, m] : means) out.set(gate, m / anchor);
  return out;
}

/// {"architecture": str, "weights": {str: number}}; architecture may be
/// omitted.
inline WeightMap weight_map_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw SchemaError("", "expected an object");
  WeightMap out;
  if (auto it = doc.find("architecture"); it != doc.end()) {
    out.set_architecture(detail::require_string(*it, "/architecture"));
  }
  const auto& weights = detail::require_member(doc, "", "weights");
  if (!weights.is_object()) throw SchemaError("/weights", "expected an object");
  for (const auto& [gate, value] : weights.items()) {
    const std::string where = detail::pointer_join("/weights", gate);
    detail::require_gate_name(gate, where);
    if (!value.is_number()) throw SchemaError(where, "expected a number");
    const double w = value.get<double>();
    if (!std::isfinite(w) || w < 0.0) {
      throw SchemaError(where, "weight must be finite and non-negative");
    }
    out.set(gate, w);
  }
  return out;
}

inline Json to_json(const WeightMap& w) {
  Json doc = Json::object();
  if (w.architecture()) doc["architecture"] = *w.architecture();
  doc["weights"] = Json::object();
  for (const auto& [gate, value] : w.weights()) doc["weights"][gate] = value;
  return doc;
}

inline WeightMap load_weight_map(const std::string& path) {
  try {
    return weight_map_from_json(detail::read_json_file(path));
  } catch (const SchemaError& e) {
    throw SchemaError(e.pointer(), path + ": " + e.detail());
  }
}

}  // namespace gadepth
