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

#include <gtest/gtest.h>

#include "gadepth/circuit.hpp"

namespace gadepth {
namespace {

TEST(IsMultiQubit, TwoOperandUnitary) {
  EXPECT_TRUE(is_multi_qubit(Gate::unitary("cz", {0, 1})));
  EXPECT_TRUE(is_multi_qubit(Gate::unitary("ccx", {0, 1, 2})));
}

TEST(IsMultiQubit, SingleOperand) {
  EXPECT_FALSE(is_multi_qubit(Gate::unitary("x", {3})));
  EXPECT_FALSE(is_multi_qubit(Gate::measure(0)));
}

TEST(IsMultiQubit, DirectivesNeverCount) {
  EXPECT_FALSE(is_multi_qubit(Gate::barrier({0, 1, 2})));
  EXPECT_TRUE(is_directive(Gate::barrier({0, 1, 2})));
  EXPECT_TRUE(is_directive(Gate::delay(0, 1e-7)));
  EXPECT_FALSE(is_directive(Gate::measure(0)));
}

TEST(Circuit, RejectsEmptyRegister) {
  EXPECT_THROW(Circuit(0), std::invalid_argument);
}

TEST(Circuit, AppendKeepsEarlierGates) {
  Circuit c(2);
  c.append(Gate::unitary("x", {0}));
  const Circuit before = c;
  c.append(Gate::unitary("cz", {0, 1}));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], before[0]);
  EXPECT_NE(c, before);
}

TEST(Circuit, StructuralEquality) {
  Circuit a(3, {Gate::unitary("rz", {1}, {0.5}), Gate::measure(2)});
  Circuit b(3);
  b.append(Gate::unitary("rz", {1}, {0.5})).append(Gate::measure(2));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, Circuit(4, a.gates()));
}

TEST(Validate, EmptyCircuitIsOk) { EXPECT_TRUE(validate(Circuit(1)).empty()); }

TEST(Validate, OutOfRangeQubit) {
  Circuit c(3, {Gate::unitary("x", {5})});
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].gate_index, 0u);
  EXPECT_EQ(v[0].kind, Violation::Kind::qubit_out_of_range);
}

TEST(Validate, DuplicateOperand) {
  Circuit c(3, {Gate::unitary("x", {0}), Gate::unitary("cz", {1, 1})});
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].gate_index, 1u);
  EXPECT_EQ(v[0].kind, Violation::Kind::duplicate_operand);
}

TEST(Validate, ReportsEveryViolation) {
  Circuit c(2, {Gate{"measure", {0, 1}, {}, GateKind::measure},
                Gate{"barrier", {0}, {1.0}, GateKind::barrier},
                Gate{"x", {}, {}, GateKind::unitary}, Gate::unitary("cz", {2, 2})});
  const auto v = validate(c);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0].kind, Violation::Kind::measure_arity);
  EXPECT_EQ(v[1].kind, Violation::Kind::barrier_with_params);
  EXPECT_EQ(v[2].kind, Violation::Kind::no_operands);
  EXPECT_EQ(v[3].kind, Violation::Kind::qubit_out_of_range);
  EXPECT_EQ(v[4].kind, Violation::Kind::qubit_out_of_range);
  EXPECT_EQ(v[5].kind, Violation::Kind::duplicate_operand);
  EXPECT_EQ(v[5].gate_index, 3u);
}

}  // namespace
}  // namespace gadepth
