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
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gadepth/circuit.hpp"
#include "gadepth/error.hpp"

namespace gadepth {

/// How barriers take part in a sweep. `skip` ignores them entirely; `sync`
/// aligns every operand to the latest of them without adding time.
enum class BarrierMode { skip, sync };

inline BarrierMode parse_barrier_mode(std::string_view s) {
  if (s == "skip") return BarrierMode::skip;
  if (s == "sync") return BarrierMode::sync;
  throw ConfigError("unknown barrier mode '" + std::string(s) +
                    "' (expected skip or sync)");
}

/// Running depth of every qubit during a sweep. Values only grow.
template <class T>
class QubitDepthState {
 public:
  explicit QubitDepthState(std::size_t num_qubits) : depths_(num_qubits, T{}) {}

  /// Earliest point at which all of `qubits` are free.
  T front(std::span<const QubitIndex> qubits) const {
    T out{};
    for (QubitIndex q : qubits) out = std::max(out, depths_[q]);
    return out;
  }

  /// Occupies `qubits` jointly for `increment` after their common front.
  void place(std::span<const QubitIndex> qubits, T increment) {
    const T next = front(qubits) + increment;
    for (QubitIndex q : qubits) depths_[q] = next;
  }

  void sync(std::span<const QubitIndex> qubits) { place(qubits, T{}); }

  /// Advances each of `qubits` independently.
  void advance(std::span<const QubitIndex> qubits, T increment) {
    for (QubitIndex q : qubits) depths_[q] += increment;
  }

  T max() const {
    T out{};
    for (const T& d : depths_) out = std::max(out, d);
    return out;
  }

  std::span<const T> values() const noexcept { return depths_; }

 private:
  std::vector<T> depths_;
};

/// ASAP sweep over `c`. `cost(gate, position)` gives the increment for every
/// unitary, measure and delay gate. Delays advance each operand on its own;
/// all other counted gates start when their last operand becomes free.
/// Returns the largest final qubit depth.
template <class T, class Cost>
T critical_path_length(const Circuit& c, Cost&& cost,
                       BarrierMode barriers = BarrierMode::skip) {
  QubitDepthState<T> state(c.num_qubits());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    switch (g.kind) {
      case GateKind::barrier:
        if (barriers == BarrierMode::sync) state.sync(g.qubits);
        break;
      case GateKind::delay:
        state.advance(g.qubits, cost(g, i));
        break;
      case GateKind::unitary:
      case GateKind::measure:
        state.place(g.qubits, cost(g, i));
        break;
    }
  }
  return state.max();
}

/// Gate name to dimensionless weight, optionally tagged with the hardware
/// architecture it was configured for.
class WeightMap {
 public:
  WeightMap() = default;

  explicit WeightMap(std::map<std::string, double> weights,
                     std::optional<std::string> architecture = std::nullopt)
      : architecture_(std::move(architecture)) {
    for (auto& [name, value] : weights) set(name, value);
  }

  void set(const std::string& name, double value) {
    if (!std::isfinite(value) || value < 0.0) {
      throw std::invalid_argument("weight for '" + name +
                                  "' must be finite and non-negative");
    }
    weights_[name] = value;
  }

  std::optional<double> find(const std::string& name) const {
    auto it = weights_.find(name);
    if (it == weights_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const std::string& name) const {
    return weights_.count(name) != 0;
  }

  const std::map<std::string, double>& weights() const noexcept {
    return weights_;
  }
  std::size_t size() const noexcept { return weights_.size(); }
  bool empty() const noexcept { return weights_.empty(); }

  const std::optional<std::string>& architecture() const noexcept {
    return architecture_;
  }
  void set_architecture(std::optional<std::string> arch) {
    architecture_ = std::move(arch);
  }

  bool operator==(const WeightMap&) const = default;

 private:
  std::map<std::string, double> weights_;
  std::optional<std::string> architecture_;
};

/// Number of layers on the longest chain of dependent gates. Measurements
/// count; barriers and delays do not.
inline std::size_t traditional_depth(const Circuit& c,
                                     BarrierMode barriers = BarrierMode::skip) {
  return critical_path_length<std::size_t>(
      c,
      [](const Gate& g, std::size_t) -> std::size_t {
        return is_directive(g) ? 0 : 1;
      },
      barriers);
}

/// Like traditional_depth but only multi-qubit unitaries add to a path.
inline std::size_t multiqubit_depth(const Circuit& c,
                                    BarrierMode barriers = BarrierMode::skip) {
  return critical_path_length<std::size_t>(
      c,
      [](const Gate& g, std::size_t) -> std::size_t {
        return is_multi_qubit(g) ? 1 : 0;
      },
      barriers);
}

/// Weighted critical path where each gate adds its architecture weight.
/// Throws MissingWeightError for the first counted gate whose name is not in
/// `weights`.
inline double gate_aware_depth(const Circuit& c, const WeightMap& weights,
                               BarrierMode barriers = BarrierMode::skip) {
  return critical_path_length<double>(
      c,
      [&weights](const Gate& g, std::size_t pos) -> double {
        if (is_directive(g)) return 0.0;
        auto w = weights.find(g.name);
        if (!w) throw MissingWeightError(g.name, pos);
        return *w;
      },
      barriers);
}

enum class Metric { traditional, multiqubit, gateaware };

inline constexpr Metric kAllMetrics[] = {Metric::traditional,
                                         Metric::multiqubit, Metric::gateaware};

inline const char* metric_name(Metric m) {
  switch (m) {
    case Metric::traditional: return "traditional";
    case Metric::multiqubit: return "multiqubit";
    case Metric::gateaware: return "gateaware";
  }
  return "unknown";
}

/// Key used for the metric in JSON depth reports.
inline const char* metric_field(Metric m) {
  switch (m) {
    case Metric::traditional: return "traditional_depth";
    case Metric::multiqubit: return "multiqubit_depth";
    case Metric::gateaware: return "gate_aware_depth";
  }
  return "unknown";
}

inline Metric parse_metric(std::string_view s) {
  for (Metric m : kAllMetrics) {
    if (s == metric_name(m)) return m;
  }
  throw ConfigError("unknown metric '" + std::string(s) +
                    "' (expected traditional, multiqubit or gateaware)");
}

/// Dispatches to one of the three metrics. `weights` is required for
/// gate-aware depth only.
inline double evaluate_metric(Metric m, const Circuit& c,
                              const WeightMap* weights,
                              BarrierMode barriers = BarrierMode::skip) {
  switch (m) {
    case Metric::traditional:
      return static_cast<double>(traditional_depth(c, barriers));
    case Metric::multiqubit:
      return static_cast<double>(multiqubit_depth(c, barriers));
    case Metric::gateaware:
      if (weights == nullptr) {
        throw ResolutionError("gate-aware depth needs a weight map");
      }
      return gate_aware_depth(c, *weights, barriers);
  }
  return 0.0;
}

}  // namespace gadepth
