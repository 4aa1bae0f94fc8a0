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

#include <random>

#include "gadepth/depth.hpp"
#include "support/oracle.hpp"
#include "support/random_circuit.hpp"

namespace gadepth {
namespace {

// Three dependency chains: cz-x-x-x (4 gates), cz-x-cz (gate-aware critical
// path) and cz-cz (multi-qubit).
Circuit reference_circuit() {
  return Circuit(3, {Gate::unitary("cz", {0, 1}), Gate::unitary("x", {0}),
                     Gate::unitary("x", {0}), Gate::unitary("x", {0}),
                     Gate::unitary("x", {1}), Gate::unitary("cz", {1, 2})});
}

WeightMap all_ones() {
  WeightMap w;
  for (const auto& name : testing::random_gate_names()) w.set(name, 1.0);
  return w;
}

WeightMap multi_indicator() {
  WeightMap w;
  for (const auto& name : testing::random_gate_names()) w.set(name, 0.0);
  for (const auto& name : testing::kTwoQubitNames) w.set(name, 1.0);
  w.set("ccx", 1.0);
  return w;
}

TEST(TraditionalDepth, Examples) {
  EXPECT_EQ(traditional_depth(Circuit(2)), 0u);
  EXPECT_EQ(traditional_depth(reference_circuit()), 4u);
  EXPECT_EQ(traditional_depth(Circuit(5, {Gate::unitary("ccx", {0, 3, 4})})), 1u);
}

TEST(MultiqubitDepth, Examples) {
  EXPECT_EQ(multiqubit_depth(reference_circuit()), 2u);
  EXPECT_EQ(multiqubit_depth(Circuit(2, {Gate::unitary("x", {0}), Gate::unitary("h", {1}),
                                         Gate::unitary("x", {0})})),
            0u);
  EXPECT_EQ(multiqubit_depth(Circuit(4, {Gate::unitary("cz", {0, 1}),
                                         Gate::unitary("cz", {1, 2}),
                                         Gate::unitary("cz", {2, 3})})),
            3u);
}

TEST(GateAwareDepth, Examples) {
  EXPECT_EQ(gate_aware_depth(reference_circuit(), WeightMap({{"cz", 1.0}, {"x", 0.1}})), 2.1);
  EXPECT_EQ(gate_aware_depth(reference_circuit(), WeightMap({{"cz", 1.0}, {"x", 0.0}})), 2.0);
  EXPECT_EQ(gate_aware_depth(reference_circuit(), WeightMap({{"cz", 1.0}, {"x", 1.0}})), 4.0);
}

TEST(GateAwareDepth, MissingWeightNamesFirstGate) {
  Circuit c(2, {Gate::unitary("x", {0}), Gate::unitary("sx", {1}), Gate::unitary("h", {0})});
  try {
    gate_aware_depth(c, WeightMap({{"x", 0.1}}));
    FAIL() << "expected MissingWeightError";
  } catch (const MissingWeightError& e) {
    EXPECT_EQ(e.gate_name(), "sx");
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(GateAwareDepth, DirectivesNeedNoWeight) {
  Circuit c(2, {Gate::unitary("x", {0}), Gate::barrier({0, 1}), Gate::delay(1, 1e-6),
                Gate::unitary("x", {1})});
  EXPECT_EQ(gate_aware_depth(c, WeightMap({{"x", 0.5}})), 0.5);
  EXPECT_EQ(gate_aware_depth(c, WeightMap({{"x", 0.5}}), BarrierMode::sync), 1.0);
}

TEST(GateAwareDepth, MeasureNeedsWeight) {
  Circuit c(1, {Gate::measure(0)});
  EXPECT_THROW(gate_aware_depth(c, WeightMap({{"x", 0.5}})), MissingWeightError);
  EXPECT_EQ(gate_aware_depth(c, WeightMap({{"measure", 0.7}})), 0.7);
}

TEST(Barriers, SkippedOrSynchronized) {
  // x on q0 then a barrier over both qubits, then x on q1.
  Circuit c(2, {Gate::unitary("x", {0}), Gate::barrier({0, 1}), Gate::unitary("x", {1})});
  EXPECT_EQ(traditional_depth(c), 1u);
  EXPECT_EQ(traditional_depth(c, BarrierMode::sync), 2u);
  EXPECT_EQ(multiqubit_depth(c, BarrierMode::sync), 0u);
}

TEST(Measurements, CountInTraditionalOnly) {
  Circuit c(2, {Gate::unitary("cz", {0, 1}), Gate::measure(0), Gate::measure(1)});
  EXPECT_EQ(traditional_depth(c), 2u);
  EXPECT_EQ(multiqubit_depth(c), 1u);
}

TEST(QubitDepthState, PlaceSyncAdvance) {
  QubitDepthState<double> s(3);
  const std::vector<QubitIndex> q01{0, 1}, q2{2}, q12{1, 2};
  s.place(q01, 1.0);
  s.advance(q2, 0.25);
  EXPECT_EQ(s.front(q12), 1.0);
  s.sync(q12);
  EXPECT_EQ(s.values()[2], 1.0);
  EXPECT_EQ(s.max(), 1.0);
}

TEST(ParseMetric, Names) {
  EXPECT_EQ(parse_metric("gateaware"), Metric::gateaware);
  EXPECT_THROW(parse_metric("depth"), ConfigError);
  EXPECT_THROW(parse_barrier_mode("wait"), ConfigError);
}

// Property tests over random circuits. Every case uses a fixed seed so a
// failure reproduces.

class DepthProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20240611};
  testing::RandomCircuitOptions opt;
};

TEST_F(DepthProperties, AllOnesWeightsGiveTraditionalDepth) {
  for (int i = 0; i < 500; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    EXPECT_EQ(gate_aware_depth(c, all_ones()), static_cast<double>(traditional_depth(c)));
  }
}

TEST_F(DepthProperties, IndicatorWeightsGiveMultiqubitDepth) {
  for (int i = 0; i < 500; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    EXPECT_EQ(gate_aware_depth(c, multi_indicator()), static_cast<double>(multiqubit_depth(c)));
  }
}

TEST_F(DepthProperties, BoundedByTraditionalAndMultiqubit) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    WeightMap w = testing::random_weight_map(rng);
    EXPECT_LE(gate_aware_depth(c, w), static_cast<double>(traditional_depth(c)));
    for (const auto& name : testing::kTwoQubitNames) w.set(name, 1.0);
    w.set("ccx", 1.0);
    EXPECT_GE(gate_aware_depth(c, w), static_cast<double>(multiqubit_depth(c)));
  }
}

TEST_F(DepthProperties, RaisingAWeightNeverLowersDepth) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto names = testing::random_gate_names();
  for (int i = 0; i < 500; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    WeightMap w = testing::random_weight_map(rng);
    const double before = gate_aware_depth(c, w);
    const auto& name = names[rng() % names.size()];
    w.set(name, *w.find(name) + unit(rng));
    EXPECT_GE(gate_aware_depth(c, w), before);
  }
}

TEST_F(DepthProperties, MatchesDagOracle) {
  for (int i = 0; i < 500; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    const WeightMap w = testing::random_weight_map(rng);
    for (BarrierMode mode : {BarrierMode::skip, BarrierMode::sync}) {
      const double expected = testing::oracle_critical_path(
          c, [&](const Gate& g) { return *w.find(g.name); }, mode);
      EXPECT_NEAR(gate_aware_depth(c, w, mode), expected, 1e-12 * std::max(1.0, expected));
    }
  }
}

TEST_F(DepthProperties, ConcatenationIsSuperadditiveInMax) {
  for (int i = 0; i < 300; ++i) {
    const Circuit a = testing::random_circuit(rng, opt);
    const Circuit b = testing::random_circuit(rng, opt);
    Circuit ab = a;
    ab.extend(b);
    const WeightMap w = testing::random_weight_map(rng);
    EXPECT_GE(traditional_depth(ab), std::max(traditional_depth(a), traditional_depth(b)));
    EXPECT_GE(multiqubit_depth(ab), std::max(multiqubit_depth(a), multiqubit_depth(b)));
    EXPECT_GE(gate_aware_depth(ab, w), std::max(gate_aware_depth(a, w), gate_aware_depth(b, w)));
  }
}

// The DP oracle itself against exhaustive path enumeration on small DAGs.
TEST(DagOracle, DynamicProgramMatchesEnumeration) {
  std::mt19937_64 rng(99);
  testing::RandomCircuitOptions opt;
  opt.max_gates = 12;
  opt.max_qubits = 5;
  for (int i = 0; i < 300; ++i) {
    const Circuit c = testing::random_circuit(rng, opt);
    const WeightMap w = testing::random_weight_map(rng);
    const auto dag = testing::build_dag(
        c, [&](const Gate& g) { return *w.find(g.name); }, BarrierMode::sync);
    EXPECT_DOUBLE_EQ(testing::longest_path_dp(dag), testing::longest_path_enumerated(dag));
  }
  // Hand-checked: reference circuit with {cz:1, x:0.1}.
  const auto dag = testing::build_dag(
      reference_circuit(), [](const Gate& g) { return g.name == "cz" ? 1.0 : 0.1; },
      BarrierMode::skip);
  EXPECT_DOUBLE_EQ(testing::longest_path_enumerated(dag), 2.1);
}

}  // namespace
}  // namespace gadepth
