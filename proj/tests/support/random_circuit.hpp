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
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gadepth/calibration.hpp"
#include "gadepth/circuit.hpp"
#include "gadepth/depth.hpp"

namespace gadepth::testing {

inline const std::vector<std::string> kSingleQubitNames = {"x", "sx", "rz", "h"};
inline const std::vector<std::string> kTwoQubitNames = {"cz", "ecr", "cx"};

struct RandomCircuitOptions {
  std::size_t max_qubits = 8;
  std::size_t max_gates = 30;
  bool measures = true;
  bool barriers = true;
  bool delays = false;
};

inline std::vector<QubitIndex> distinct_qubits(std::mt19937_64& rng, std::size_t n,
                                               std::size_t k) {
  std::vector<QubitIndex> all(n);
  std::iota(all.begin(), all.end(), QubitIndex{0});
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return all;
}

inline Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& opt = {}) {
  std::uniform_int_distribution<std::size_t> nq(1, opt.max_qubits);
  const std::size_t n = nq(rng);
  std::uniform_int_distribution<std::size_t> ng(0, opt.max_gates);
  const std::size_t count = ng(rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Circuit c(n);
  for (std::size_t i = 0; i < count; ++i) {
    const double roll = unit(rng);
    if (roll < 0.45 || n == 1) {
      if (opt.measures && n > 0 && unit(rng) < 0.08) {
        c.append(Gate::measure(distinct_qubits(rng, n, 1)[0]));
      } else if (opt.delays && unit(rng) < 0.1) {
        c.append(Gate::delay(distinct_qubits(rng, n, 1)[0], unit(rng) * 1e-7));
      } else {
        const auto& name = kSingleQubitNames[rng() % kSingleQubitNames.size()];
        std::vector<double> params;
        if (name == "rz") params.push_back(unit(rng) * 6.28);
        c.append(Gate::unitary(name, distinct_qubits(rng, n, 1), params));
      }
    } else if (roll < 0.9 || n < 3) {
      const auto& name = kTwoQubitNames[rng() % kTwoQubitNames.size()];
      c.append(Gate::unitary(name, distinct_qubits(rng, n, 2)));
    } else if (opt.barriers && roll < 0.96) {
      std::uniform_int_distribution<std::size_t> width(1, n);
      c.append(Gate::barrier(distinct_qubits(rng, n, width(rng))));
    } else {
      c.append(Gate::unitary("ccx", distinct_qubits(rng, n, 3)));
    }
  }
  return c;
}

/// Counted gate names used by random_circuit.
inline std::vector<std::string> random_gate_names() {
  std::vector<std::string> out = kSingleQubitNames;
  out.insert(out.end(), kTwoQubitNames.begin(), kTwoQubitNames.end());
  out.push_back("ccx");
  out.push_back("measure");
  return out;
}

inline WeightMap random_weight_map(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  WeightMap w;
  for (const auto& name : random_gate_names()) w.set(name, unit(rng));
  return w;
}

/// Table with a random duration for every location used in `c`; about a
/// third of the gate names are served by a default instead of entries.
inline DurationTable random_duration_table(std::mt19937_64& rng, const Circuit& c) {
  std::uniform_real_distribution<double> seconds(1e-8, 1e-6);
  DurationTable t("random", "synthetic");
  std::map<std::string, bool> by_default;
  for (const auto& name : random_gate_names()) by_default[name] = rng() % 3 == 0;
  for (const auto& [name, use_default] : by_default) {
    if (use_default) t.set_default(name, seconds(rng));
  }
  for (const Gate& g : c) {
    if (is_directive(g) || by_default[g.name]) continue;
    if (!t.lookup(g.name, g.qubits)) t.add_entry(g.name, g.qubits, seconds(rng));
  }
  return t;
}

}  // namespace gadepth::testing
