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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gadepth {

// Exception hierarchy. Each family maps onto one CLI exit code (see
// commands.hpp), so new errors should derive from one of the four bases.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text or file could not be turned into a circuit.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A gate could not be resolved to a weight or a duration.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Calibration data, weight maps or command options are unusable.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Comparison manifest is malformed or references unusable files.
class ManifestError : public Error {
 public:
  using Error::Error;
};

class MissingWeightError : public ResolutionError {
 public:
  MissingWeightError(std::string gate_name, std::size_t position)
      : ResolutionError("no weight for gate '" + gate_name + "' (gate " +
                        std::to_string(position) + ")"),
        gate_name_(std::move(gate_name)),
        position_(position) {}

  const std::string& gate_name() const noexcept { return gate_name_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string gate_name_;
  std::size_t position_;
};

class UnresolvedDurationError : public ResolutionError {
 public:
  UnresolvedDurationError(std::string gate_name, std::vector<std::size_t> qubits,
                          std::size_t position, const std::string& reason = "")
      : ResolutionError(describe(gate_name, qubits, position, reason)),
        gate_name_(std::move(gate_name)),
        qubits_(std::move(qubits)),
        position_(position) {}

  const std::string& gate_name() const noexcept { return gate_name_; }
  const std::vector<std::size_t>& qubits() const noexcept { return qubits_; }
  std::size_t position() const noexcept { return position_; }

 private:
  static std::string describe(const std::string& name,
                              const std::vector<std::size_t>& qubits,
                              std::size_t position, const std::string& reason) {
    std::string out = "no duration for gate '" + name + "' on qubits [";
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      if (i != 0) out += ",";
      out += std::to_string(qubits[i]);
    }
    out += "] (gate " + std::to_string(position) + ")";
    if (!reason.empty()) out += ": " + reason;
    return out;
  }

  std::string gate_name_;
  std::vector<std::size_t> qubits_;
  std::size_t position_;
};

/// JSON document does not match the expected schema. `pointer` is an RFC 6901
/// JSON pointer to the offending value.
class SchemaError : public ConfigError {
 public:
  SchemaError(std::string pointer, std::string message)
      : ConfigError((pointer.empty() ? std::string("/") : pointer) + ": " +
                    message),
        pointer_(std::move(pointer)),
        detail_(std::move(message)) {}

  const std::string& pointer() const noexcept { return pointer_; }
  /// Message without the pointer prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string pointer_;
  std::string detail_;
};

}  // namespace gadepth
