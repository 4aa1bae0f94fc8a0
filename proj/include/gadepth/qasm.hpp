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
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gadepth/circuit.hpp"
#include "gadepth/error.hpp"
#include "gadepth/format.hpp"

// Reader and writer for the OpenQASM 2.0 subset emitted by transpilers after
// routing and rebasing: qreg/creg declarations, gate applications with
// register broadcasting, measure, barrier and delay. Gate definitions,
// classical control and reset are rejected.

namespace gadepth {

struct ParseDiagnostic {
  enum class Severity { error, warning };

  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::string message;
  Severity severity = Severity::error;

  bool is_error() const noexcept { return severity == Severity::error; }
  bool operator==(const ParseDiagnostic&) const = default;
};

inline std::string to_string(const ParseDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) + ": " +
         (d.is_error() ? "error: " : "warning: ") + d.message;
}

struct ParseResult {
  std::optional<Circuit> circuit;  // set iff there are no errors
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const noexcept { return circuit.has_value(); }
};

/// ParseError carrying the diagnostics of a failed parse.
class QasmError : public ParseError {
 public:
  QasmError(const std::string& source, std::vector<ParseDiagnostic> diags)
      : ParseError(describe(source, diags)), diagnostics_(std::move(diags)) {}

  const std::vector<ParseDiagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  static std::string describe(const std::string& source,
                              const std::vector<ParseDiagnostic>& diags) {
    std::string out;
    for (const auto& d : diags) {
      if (!d.is_error()) continue;
      if (!out.empty()) out += "\n";
      out += source + ":" + to_string(d);
    }
    return out.empty() ? source + ": parse failed" : out;
  }

  std::vector<ParseDiagnostic> diagnostics_;
};

struct GateSignature {
  std::size_t num_qubits;
  std::size_t num_params;
};

/// Gates known from the standard include plus the IBM native set. Arity and
/// parameter count are checked for these names.
inline const std::map<std::string, GateSignature, std::less<>>& known_gates() {
  static const std::map<std::string, GateSignature, std::less<>> table = {
      {"u", {1, 3}},     {"u3", {1, 3}},    {"u2", {1, 2}},    {"u1", {1, 1}},
      {"u0", {1, 1}},    {"p", {1, 1}},     {"id", {1, 0}},    {"x", {1, 0}},
      {"y", {1, 0}},     {"z", {1, 0}},     {"h", {1, 0}},     {"s", {1, 0}},
      {"sdg", {1, 0}},   {"t", {1, 0}},     {"tdg", {1, 0}},   {"sx", {1, 0}},
      {"sxdg", {1, 0}},  {"rx", {1, 1}},    {"ry", {1, 1}},    {"rz", {1, 1}},
      {"cx", {2, 0}},    {"cy", {2, 0}},    {"cz", {2, 0}},    {"ch", {2, 0}},
      {"csx", {2, 0}},   {"swap", {2, 0}},  {"iswap", {2, 0}}, {"dcx", {2, 0}},
      {"ecr", {2, 0}},   {"crx", {2, 1}},   {"cry", {2, 1}},   {"crz", {2, 1}},
      {"cu1", {2, 1}},   {"cp", {2, 1}},    {"cu3", {2, 3}},   {"cu", {2, 4}},
      {"rxx", {2, 1}},   {"ryy", {2, 1}},   {"rzz", {2, 1}},   {"rzx", {2, 1}},
      {"ccx", {3, 0}},   {"cswap", {3, 0}}, {"rccx", {3, 0}},  {"rc3x", {4, 0}},
      {"c3x", {4, 0}},   {"c3sqrtx", {4, 0}}, {"c4x", {5, 0}},
  };
  return table;
}

namespace qasm_detail {

enum class Tok { identifier, number, string, symbol, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;  // identifier/symbol text, string contents, or unit suffix
  double value = 0.0;
  bool integral = false;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Failure {
  std::size_t line;
  std::size_t column;
  std::string message;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<ParseDiagnostic>& diags)
      : text_(text), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      const char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        t.kind = Tok::identifier;
        while (pos_ < text_.size() && is_ident_char(text_[pos_])) t.text += take();
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '.' && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        lex_number(t);
      } else if (c == '"') {
        take();
        t.kind = Tok::string;
        while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
          t.text += take();
        }
        if (pos_ >= text_.size() || text_[pos_] != '"') {
          diags_.push_back({t.line, t.column, "unterminated string literal",
                            ParseDiagnostic::Severity::error});
          t.kind = Tok::end;
          out.push_back(t);
          return out;
        }
        take();
      } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
        t.kind = Tok::symbol;
        t.text = "->";
        take();
        take();
      } else if (std::string_view(";,[](){}+-*/^=<>").find(c) !=
                 std::string_view::npos) {
        t.kind = Tok::symbol;
        t.text = std::string(1, take());
      } else {
        diags_.push_back({t.line, t.column,
                          std::string("unexpected character '") + c + "'",
                          ParseDiagnostic::Severity::error});
        take();
        continue;
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  char take() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  bool digit_at(std::size_t p) const {
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else {
        return;
      }
    }
  }

  void lex_number(Token& t) {
    t.kind = Tok::number;
    std::string digits;
    bool integral = true;
    while (digit_at(pos_)) digits += take();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      integral = false;
      digits += take();
      while (digit_at(pos_)) digits += take();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      const bool signed_exp =
          pos_ + 1 < text_.size() && (text_[pos_ + 1] == '+' || text_[pos_ + 1] == '-');
      if (digit_at(pos_ + 1) || (signed_exp && digit_at(pos_ + 2))) {
        integral = false;
        digits += take();
        if (signed_exp) digits += take();
        while (digit_at(pos_)) digits += take();
      }
    }
    // Duration suffix such as 100ns; only meaningful for delay.
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) t.text += take();
    t.value = std::strtod(digits.c_str(), nullptr);
    t.integral = integral;
  }

  std::string_view text_;
  std::vector<ParseDiagnostic>& diags_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

struct Register {
  std::string name;
  std::size_t size;
  std::size_t offset;
};

/// One operand as written: a whole register or a single element of one.
struct Operand {
  const Register* reg;
  std::optional<std::size_t> index;
};

inline std::optional<double> unit_scale(std::string_view unit) {
  if (unit == "s") return 1.0;
  if (unit == "ms") return 1e-3;
  if (unit == "us") return 1e-6;
  if (unit == "ns") return 1e-9;
  if (unit == "ps") return 1e-12;
  return std::nullopt;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<ParseDiagnostic>& diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  std::optional<Circuit> run() {
    if (peek_ident("OPENQASM")) {
      guarded([&] { header(); });
    } else {
      warn(peek(), "missing 'OPENQASM 2.0;' header");
    }
    while (peek().kind != Tok::end) {
      guarded([&] { statement(); });
    }
    if (qregs_.empty() && !has_error()) {
      error(peek(), "no quantum register declared");
    }
    if (has_error()) return std::nullopt;
    return Circuit(num_qubits_, std::move(gates_));
  }

 private:
  // Runs one statement-level production; on failure records the diagnostic
  // and resynchronizes after the next ';' (or the matching '}').
  template <class F>
  void guarded(F&& production) {
    const std::size_t start = pos_;
    try {
      production();
    } catch (const Failure& f) {
      diags_.push_back({f.line, f.column, f.message,
                        ParseDiagnostic::Severity::error});
      const bool finished = pos_ > start && toks_[pos_ - 1].kind == Tok::symbol &&
                            toks_[pos_ - 1].text == ";";
      if (!finished) recover();
    }
  }

  void recover() {
    int depth = 0;
    while (peek().kind != Tok::end) {
      const Token& t = next();
      if (t.kind != Tok::symbol) continue;
      if (t.text == "{") {
        ++depth;
      } else if (t.text == "}") {
        if (--depth <= 0) return;
      } else if (t.text == ";" && depth == 0) {
        return;
      }
    }
  }

  bool has_error() const {
    return std::any_of(diags_.begin(), diags_.end(),
                       [](const ParseDiagnostic& d) { return d.is_error(); });
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::end) ++pos_;
    return t;
  }
  bool peek_symbol(std::string_view s) const {
    return peek().kind == Tok::symbol && peek().text == s;
  }
  bool peek_ident(std::string_view s) const {
    return peek().kind == Tok::identifier && peek().text == s;
  }

  [[noreturn]] static void fail(const Token& at, std::string message) {
    throw Failure{at.line, at.column, std::move(message)};
  }
  void error(const Token& at, std::string message) {
    diags_.push_back({at.line, at.column, std::move(message),
                      ParseDiagnostic::Severity::error});
  }
  void warn(const Token& at, std::string message) {
    diags_.push_back({at.line, at.column, std::move(message),
                      ParseDiagnostic::Severity::warning});
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::end: return "end of input";
      case Tok::number: return "number";
      case Tok::string: return "string \"" + t.text + "\"";
      default: return "'" + t.text + "'";
    }
  }

  void expect_symbol(std::string_view s) {
    if (!peek_symbol(s)) {
      fail(peek(), "expected '" + std::string(s) + "' but found " + describe(peek()));
    }
    next();
  }

  std::string expect_identifier(std::string_view what) {
    if (peek().kind != Tok::identifier) {
      fail(peek(), "expected " + std::string(what) + " but found " + describe(peek()));
    }
    return next().text;
  }

  std::size_t expect_size(std::string_view what) {
    const Token& t = peek();
    if (t.kind != Tok::number || !t.integral || !t.text.empty()) {
      fail(t, "expected " + std::string(what) + " but found " + describe(t));
    }
    next();
    return static_cast<std::size_t>(t.value);
  }

  void header() {
    next();  // OPENQASM
    const Token& v = peek();
    if (v.kind != Tok::number) fail(v, "expected a version number after OPENQASM");
    next();
    if (v.value != 2.0 || !v.text.empty()) {
      fail(v, "unsupported OPENQASM version; only 2.0 is accepted");
    }
    expect_symbol(";");
  }

  void statement() {
    const Token& t = peek();
    if (t.kind != Tok::identifier) fail(t, "expected a statement but found " + describe(t));
    const std::string& kw = t.text;
    if (kw == "OPENQASM") fail(t, "OPENQASM header must come first");
    if (kw == "include") return include();
    if (kw == "qreg" || kw == "creg") return reg_decl(kw == "qreg");
    if (kw == "gate") fail(t, "custom gate definitions unsupported");
    if (kw == "opaque") fail(t, "opaque gate declarations unsupported");
    if (kw == "if") fail(t, "classically controlled operations ('if') unsupported");
    if (kw == "for" || kw == "while") fail(t, "loops ('" + kw + "') unsupported");
    if (kw == "reset") fail(t, "reset unsupported");
    if (kw == "measure") return measure();
    if (kw == "barrier") return barrier();
    return application();
  }

  void include() {
    const Token& kw = next();
    const Token& file = peek();
    if (file.kind != Tok::string) fail(file, "expected a file name after include");
    next();
    expect_symbol(";");
    if (file.text != "qelib1.inc") {
      fail(kw, "unknown include file '" + file.text + "'");
    }
  }

  void reg_decl(bool quantum) {
    const Token& kw = next();
    const Token& name_tok = peek();
    const std::string name = expect_identifier("a register name");
    expect_symbol("[");
    const Token& size_tok = peek();
    const std::size_t size = expect_size("a register size");
    expect_symbol("]");
    expect_symbol(";");
    if (size == 0) fail(size_tok, "register '" + name + "' has size 0");
    if (find_qreg(name) != nullptr || cregs_.count(name) != 0) {
      fail(name_tok, "register '" + name + "' declared twice");
    }
    if (quantum) {
      qregs_.push_back({name, size, num_qubits_});
      num_qubits_ += size;
    } else {
      cregs_[name] = size;
      warn(kw, "classical register '" + name + "' ignored");
    }
  }

  const Register* find_qreg(std::string_view name) const {
    for (const auto& r : qregs_) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }

  Operand qubit_operand() {
    const Token& t = peek();
    const std::string name = expect_identifier("a qubit operand");
    const Register* reg = find_qreg(name);
    if (reg == nullptr) {
      fail(t, cregs_.count(name) ? "'" + name + "' is a classical register"
                                 : "unknown quantum register '" + name + "'");
    }
    Operand op{reg, std::nullopt};
    if (peek_symbol("[")) {
      next();
      const Token& idx = peek();
      op.index = expect_size("a qubit index");
      expect_symbol("]");
      if (*op.index >= reg->size) {
        fail(idx, "index " + std::to_string(*op.index) + " out of range for '" +
                      name + "[" + std::to_string(reg->size) + "]'");
      }
    }
    return op;
  }

  std::vector<Operand> operand_list() {
    std::vector<Operand> ops{qubit_operand()};
    while (peek_symbol(",")) {
      next();
      ops.push_back(qubit_operand());
    }
    return ops;
  }

  /// Expands register operands element-wise. All register operands must have
  /// the same size; single-qubit operands repeat.
  std::vector<std::vector<QubitIndex>> broadcast(const std::vector<Operand>& ops,
                                                 const Token& at) {
    std::optional<std::size_t> width;
    for (const auto& op : ops) {
      if (op.index) continue;
      if (width && *width != op.reg->size) {
        fail(at, "register operands have different sizes");
      }
      width = op.reg->size;
    }
    std::vector<std::vector<QubitIndex>> out;
    for (std::size_t i = 0; i < width.value_or(1); ++i) {
      std::vector<QubitIndex> qs;
      for (const auto& op : ops) {
        const QubitIndex q = op.reg->offset + op.index.value_or(i);
        if (std::find(qs.begin(), qs.end(), q) != qs.end()) {
          fail(at, "qubit " + op.reg->name + "[" +
                       std::to_string(op.index.value_or(i)) +
                       "] used twice in one gate");
        }
        qs.push_back(q);
      }
      out.push_back(std::move(qs));
    }
    return out;
  }

  void measure() {
    const Token& kw = next();
    const Operand q = qubit_operand();
    expect_symbol("->");
    const Token& ct = peek();
    const std::string cname = expect_identifier("a classical register");
    auto creg = cregs_.find(cname);
    if (creg == cregs_.end()) fail(ct, "unknown classical register '" + cname + "'");
    std::optional<std::size_t> cindex;
    if (peek_symbol("[")) {
      next();
      const Token& idx = peek();
      cindex = expect_size("a bit index");
      expect_symbol("]");
      if (*cindex >= creg->second) fail(idx, "bit index out of range for '" + cname + "'");
    }
    expect_symbol(";");
    const std::size_t qwidth = q.index ? 1 : q.reg->size;
    const std::size_t cwidth = cindex ? 1 : creg->second;
    if (qwidth != cwidth) fail(kw, "measure operands have different sizes");
    for (std::size_t i = 0; i < qwidth; ++i) {
      gates_.push_back(Gate::measure(q.reg->offset + q.index.value_or(i)));
    }
  }

  void barrier() {
    const Token& kw = next();
    const auto ops = operand_list();
    expect_symbol(";");
    std::vector<QubitIndex> qs;
    for (const auto& op : ops) {
      const std::size_t first = op.index.value_or(0);
      const std::size_t last = op.index ? first + 1 : op.reg->size;
      for (std::size_t i = first; i < last; ++i) {
        const QubitIndex q = op.reg->offset + i;
        if (std::find(qs.begin(), qs.end(), q) != qs.end()) {
          fail(kw, "qubit " + op.reg->name + "[" + std::to_string(i) +
                       "] repeated in barrier");
        }
        qs.push_back(q);
      }
    }
    gates_.push_back(Gate::barrier(std::move(qs)));
  }

  void application() {
    const Token& name_tok = next();
    std::string name = name_tok.text;
    const bool is_delay = name == "delay";
    if (name == "U") name = "u";
    if (name == "CX") name = "cx";

    std::vector<double> params;
    if (peek_symbol("(")) {
      next();
      if (!peek_symbol(")")) {
        params.push_back(expression(is_delay));
        while (peek_symbol(",")) {
          next();
          params.push_back(expression(is_delay));
        }
      }
      expect_symbol(")");
    }
    const auto ops = operand_list();
    expect_symbol(";");

    if (is_delay) {
      if (params.size() != 1) fail(name_tok, "delay takes exactly one duration");
      if (!(params[0] >= 0.0)) fail(name_tok, "delay duration must be non-negative");
      for (const auto& qs : broadcast(ops, name_tok)) {
        for (QubitIndex q : qs) gates_.push_back(Gate::delay(q, params[0]));
      }
      return;
    }

    auto known = known_gates().find(name);
    if (known != known_gates().end()) {
      const GateSignature& sig = known->second;
      if (ops.size() != sig.num_qubits) {
        fail(name_tok, "gate '" + name + "' takes " + std::to_string(sig.num_qubits) +
                           " qubit(s), got " + std::to_string(ops.size()));
      }
      if (params.size() != sig.num_params) {
        fail(name_tok, "gate '" + name + "' takes " + std::to_string(sig.num_params) +
                           " parameter(s), got " + std::to_string(params.size()));
      }
    } else {
      if (std::any_of(name.begin(), name.end(),
                      [](char c) { return std::isupper(static_cast<unsigned char>(c)); })) {
        fail(name_tok, "unknown gate '" + name + "' (gate names are lowercase)");
      }
      warn(name_tok, "unknown gate '" + name + "'; arity not checked");
    }
    for (auto& qs : broadcast(ops, name_tok)) {
      gates_.push_back(Gate::unitary(name, std::move(qs), params));
    }
  }

  // expression := term (('+' | '-') term)*
  double expression(bool allow_units) {
    double v = term(allow_units);
    while (peek_symbol("+") || peek_symbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = term(allow_units);
      v = plus ? v + rhs : v - rhs;
    }
    return v;
  }

  // term := power (('*' | '/') power)*
  double term(bool allow_units) {
    double v = power(allow_units);
    while (peek_symbol("*") || peek_symbol("/")) {
      const bool times = next().text == "*";
      const double rhs = power(allow_units);
      v = times ? v * rhs : v / rhs;
    }
    return v;
  }

  // power := unary ('^' power)?
  double power(bool allow_units) {
    const double base = unary(allow_units);
    if (!peek_symbol("^")) return base;
    next();
    return std::pow(base, power(allow_units));
  }

  double unary(bool allow_units) {
    if (peek_symbol("-")) {
      next();
      return -unary(allow_units);
    }
    if (peek_symbol("+")) {
      next();
      return unary(allow_units);
    }
    return primary(allow_units);
  }

  double primary(bool allow_units) {
    const Token& t = peek();
    if (t.kind == Tok::number) {
      next();
      if (t.text.empty()) return t.value;
      if (!allow_units) fail(t, "unexpected suffix '" + t.text + "' on number");
      if (t.text == "dt") {
        fail(t, "delay in 'dt' needs the device sample time; give seconds or s/ms/us/ns/ps");
      }
      auto scale = unit_scale(t.text);
      if (!scale) fail(t, "unknown duration unit '" + t.text + "'");
      return t.value * *scale;
    }
    if (peek_symbol("(")) {
      next();
      const double v = expression(allow_units);
      expect_symbol(")");
      return v;
    }
    if (t.kind == Tok::identifier) {
      next();
      if (t.text == "pi") return std::numbers::pi;
      static const std::map<std::string, double (*)(double), std::less<>> fns = {
          {"sin", [](double x) { return std::sin(x); }},
          {"cos", [](double x) { return std::cos(x); }},
          {"tan", [](double x) { return std::tan(x); }},
          {"exp", [](double x) { return std::exp(x); }},
          {"ln", [](double x) { return std::log(x); }},
          {"sqrt", [](double x) { return std::sqrt(x); }},
      };
      auto fn = fns.find(t.text);
      if (fn == fns.end()) fail(t, "unknown identifier '" + t.text + "' in expression");
      expect_symbol("(");
      const double arg = expression(allow_units);
      expect_symbol(")");
      return fn->second(arg);
    }
    fail(t, "expected an expression but found " + describe(t));
  }

  std::vector<Token> toks_;
  std::vector<ParseDiagnostic>& diags_;
  std::size_t pos_ = 0;
  std::vector<Register> qregs_;
  std::map<std::string, std::size_t, std::less<>> cregs_;
  std::size_t num_qubits_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace qasm_detail

/// Parses OpenQASM 2.0 text. Qubit indices in the result are register
/// offsets in declaration order. On failure `circuit` is empty and
/// `diagnostics` holds every error found.
inline ParseResult parse_qasm(std::string_view text) {
  ParseResult result;
  auto tokens = qasm_detail::Lexer(text, result.diagnostics).run();
  result.circuit = qasm_detail::Parser(std::move(tokens), result.diagnostics).run();
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const ParseDiagnostic& a, const ParseDiagnostic& b) {
                     return std::pair(a.line, a.column) < std::pair(b.line, b.column);
                   });
  return result;
}

/// Like parse_qasm but throws QasmError on failure. `source` names the input
/// in messages.
inline Circuit parse_qasm_or_throw(std::string_view text,
                                   const std::string& source = "<input>") {
  ParseResult r = parse_qasm(text);
  if (!r.ok()) throw QasmError(source, std::move(r.diagnostics));
  return std::move(*r.circuit);
}

inline Circuit load_qasm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_qasm_or_throw(buf.str(), path);
}

/// Writes `c` as OpenQASM 2.0 over a single register `q`. Measurements target
/// a classical register `c` of the same size. Parameters are written with 17
/// significant digits so reparsing gives back the same circuit.
inline std::string to_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << c.num_qubits() << "];\n";
  const bool measures = std::any_of(c.begin(), c.end(), [](const Gate& g) {
    return g.kind == GateKind::measure;
  });
  if (measures) os << "creg c[" << c.num_qubits() << "];\n";
  for (const Gate& g : c) {
    if (g.kind == GateKind::measure) {
      os << "measure q[" << g.qubits.front() << "] -> c[" << g.qubits.front() << "];\n";
      continue;
    }
    os << g.name;
    if (!g.params.empty()) {
      os << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i != 0) os << ',';
        os << format_double(g.params[i]);
      }
      os << ')';
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
      os << (i == 0 ? " " : ",") << "q[" << g.qubits[i] << ']';
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace gadepth
