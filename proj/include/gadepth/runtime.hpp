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

#include <cmath>
#include <cstddef>

#include "gadepth/calibration.hpp"
#include "gadepth/circuit.hpp"
#include "gadepth/depth.hpp"
#include "gadepth/error.hpp"

namespace gadepth {

/// Execution time of `c` in seconds on the device described by `table`, under
/// ASAP scheduling: every gate starts once all its operands are free and
/// occupies them for its exact duration at that location. Delays idle their
/// operand for params[0] seconds. Throws UnresolvedDurationError when a gate
/// has neither a location entry nor a default.
inline double estimate_runtime(const Circuit& c, const DurationTable& table,
                               BarrierMode barriers = BarrierMode::skip) {
  return critical_path_length<double>(
      c,
      [&table](const Gate& g, std::size_t pos) -> double {
        if (g.kind == GateKind::delay) {
          if (g.params.empty()) {
            throw UnresolvedDurationError(g.name, g.qubits, pos,
                                          "delay has no duration parameter");
          }
          const double d = g.params.front();
          if (!std::isfinite(d) || d < 0.0) {
            throw UnresolvedDurationError(g.name, g.qubits, pos,
                                          "delay duration must be >= 0");
          }
          return d;
        }
        auto d = table.lookup(g.name, g.qubits);
        if (!d) throw UnresolvedDurationError(g.name, g.qubits, pos);
        return *d;
      },
      barriers);
}

}  // namespace gadepth
