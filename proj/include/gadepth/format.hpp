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
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

namespace gadepth {

using Json = nlohmann::ordered_json;

/// Significant digits for machine-readable output; enough to round-trip any
/// double.
inline constexpr int kExactDigits = 17;
/// Significant digits for human-readable summaries.
inline constexpr int kSummaryDigits = 6;

inline std::string format_double(double v, int digits = kExactDigits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline std::string json_quote(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  out += '"';
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
  return out;
}

namespace detail {

inline void write_json(std::ostream& os, const Json& j, int indent, int level) {
  auto newline = [&](int lvl) {
    if (indent < 0) return;
    os << '\n' << std::string(static_cast<std::size_t>(indent * lvl), ' ');
  };
  const char* colon = indent < 0 ? ":" : ": ";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(level + 1);
        os << json_quote(key) << colon;
        write_json(os, value, indent, level + 1);
      }
      newline(level);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      os << '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) os << ',';
        first = false;
        newline(level + 1);
        write_json(os, value, indent, level + 1);
      }
      newline(level);
      os << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      os << (std::isfinite(v) ? format_double(v) : std::string("null"));
      return;
    }
    case Json::value_t::string:
      os << json_quote(j.get_ref<const std::string&>());
      return;
    default:
      os << j.dump();
      return;
  }
}

}  // namespace detail

/// Serializes `j` with every floating-point value printed to 17 significant
/// digits. Non-finite values become null. `indent < 0` gives a single line.
inline void write_json(std::ostream& os, const Json& j, int indent = -1) {
  detail::write_json(os, j, indent, 0);
}

inline std::string dump_json(const Json& j, int indent = -1) {
  std::ostringstream os;
  write_json(os, j, indent);
  return os.str();
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

}  // namespace gadepth
