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
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gadepth {

using QubitIndex = std::size_t;

enum class GateKind { unitary, measure, barrier, delay };

inline const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::unitary: return "unitary";
    case GateKind::measure: return "measure";
    case GateKind::barrier: return "barrier";
    case GateKind::delay: return "delay";
  }
  return "unknown";
}

/// One instruction of a circuit. Identity is the name string; two gates with
/// different names are different gates even if they implement the same unitary.
struct Gate {
  std::string name;
  std::vector<QubitIndex> qubits;
  std::vector<double> params;
  GateKind kind = GateKind::unitary;

  static Gate unitary(std::string name, std::vector<QubitIndex> qubits,
                      std::vector<double> params = {}) {
    return Gate{std::move(name), std::move(qubits), std::move(params),
                GateKind::unitary};
  }
  static Gate measure(QubitIndex qubit) {
    return Gate{"measure", {qubit}, {}, GateKind::measure};
  }
  static Gate barrier(std::vector<QubitIndex> qubits) {
    return Gate{"barrier", std::move(qubits), {}, GateKind::barrier};
  }
  /// Idle `qubit` for `seconds`.
  static Gate delay(QubitIndex qubit, double seconds) {
    return Gate{"delay", {qubit}, {seconds}, GateKind::delay};
  }

  bool operator==(const Gate&) const = default;
};

/// True for unitary gates on two or more qubits. Directives and measurements
/// never count as multi-qubit.
inline bool is_multi_qubit(const Gate& g) {
  return g.kind == GateKind::unitary && g.qubits.size() >= 2;
}

/// Barriers and delays: kept in the IR but excluded from gate counting.
inline bool is_directive(const Gate& g) {
  return g.kind == GateKind::barrier || g.kind == GateKind::delay;
}

/// Ordered gate list over a register of `num_qubits` qubits. List order is the
/// execution order on every qubit.
class Circuit {
 public:
  using const_iterator = std::vector<Gate>::const_iterator;

  explicit Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
      throw std::invalid_argument("circuit needs at least one qubit");
    }
  }

  Circuit(std::size_t num_qubits, std::vector<Gate> gates)
      : Circuit(num_qubits) {
    gates_ = std::move(gates);
  }

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  const_iterator begin() const noexcept { return gates_.begin(); }
  const_iterator end() const noexcept { return gates_.end(); }

  Circuit& append(Gate g) {
    gates_.push_back(std::move(g));
    return *this;
  }

  /// Appends every gate of `other`; registers are aligned by index.
  Circuit& extend(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) num_qubits_ = other.num_qubits_;
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
  }

  bool operator==(const Circuit&) const = default;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

struct Violation {
  enum class Kind {
    no_operands,
    qubit_out_of_range,
    duplicate_operand,
    barrier_with_params,
    measure_arity,
  };

  std::size_t gate_index;
  Kind kind;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Collects every structural problem in `c`. An empty result means every
/// metric in depth.hpp is defined on `c`.
inline std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    auto add = [&](Violation::Kind kind, std::string msg) {
      out.push_back({i, kind, "gate " + std::to_string(i) + " '" + g.name +
                                  "': " + std::move(msg)});
    };
    if (g.qubits.empty()) add(Violation::Kind::no_operands, "no qubit operands");
    for (std::size_t k = 0; k < g.qubits.size(); ++k) {
      if (g.qubits[k] >= c.num_qubits()) {
        add(Violation::Kind::qubit_out_of_range,
            "qubit " + std::to_string(g.qubits[k]) + " outside register of " +
                std::to_string(c.num_qubits()));
      }
      if (std::find(g.qubits.begin(), g.qubits.begin() + k, g.qubits[k]) !=
          g.qubits.begin() + k) {
        add(Violation::Kind::duplicate_operand,
            "qubit " + std::to_string(g.qubits[k]) + " used twice");
      }
    }
    if (g.kind == GateKind::barrier && !g.params.empty()) {
      add(Violation::Kind::barrier_with_params, "barrier takes no parameters");
    }
    if (g.kind == GateKind::measure && g.qubits.size() != 1) {
      add(Violation::Kind::measure_arity, "measure acts on exactly one qubit");
    }
  }
  return out;
}

}  // namespace gadepth
