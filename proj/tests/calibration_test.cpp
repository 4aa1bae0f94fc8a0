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

#include <algorithm>
#include <random>

#include "gadepth/calibration.hpp"
#include "support/temp_dir.hpp"

namespace gadepth {
namespace {

double round_sig(double v, int digits) { return std::stod(format_double(v, digits)); }

std::string schema_pointer(const std::string& json_text) {
  try {
    duration_table_from_json(nlohmann::json::parse(json_text));
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<no error>";
}

/// Three devices whose per-device gate means scatter by -2%, 0, +2% around
/// `means`, so the cross-device mean equals `means`.
std::vector<DurationTable> three_devices(const std::string& arch,
                                         const std::map<std::string, double>& means) {
  std::vector<DurationTable> out;
  const double offsets[] = {-0.02, 0.0, 0.02};
  for (int d = 0; d < 3; ++d) {
    DurationTable t(arch + std::to_string(d), arch);
    for (const auto& [gate, mean] : means) {
      const double m = mean * (1.0 + offsets[d]);
      const bool two = gate == "ecr" || gate == "cz";
      // Entries at +-5% around the device mean on four locations.
      const double spread[] = {-0.05, 0.05, -0.01, 0.01};
      for (QubitIndex q = 0; q < 4; ++q) {
        std::vector<QubitIndex> loc = two ? std::vector<QubitIndex>{q, (q + 1) % 4}
                                          : std::vector<QubitIndex>{q};
        t.add_entry(gate, loc, m * (1.0 + spread[q]));
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

TEST(LoadDurationTable, SingleEntry) {
  testing::TempDir dir;
  const auto path = dir.write("t.json", R"({"device":"d","architecture":"a",
      "entries":[{"gate":"x","qubits":[0],"duration_s":5.0e-8}]})");
  const DurationTable t = load_duration_table(path);
  EXPECT_EQ(t.entries().size(), 1u);
  EXPECT_EQ(t.lookup("x", std::vector<QubitIndex>{0}), 5.0e-8);
  EXPECT_EQ(t.device(), "d");
}

TEST(LoadDurationTable, NegativeDurationRejected) {
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a",
      "entries":[{"gate":"x","qubits":[0],"duration_s":-1}]})"),
            "/entries/0/duration_s");
}

TEST(LoadDurationTable, DuplicateLocationRejected) {
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a","entries":[
      {"gate":"cz","qubits":[0,1],"duration_s":1e-7},
      {"gate":"cz","qubits":[0,1],"duration_s":2e-7}]})"),
            "/entries/1");
  // Reversed direction is a different location.
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a","entries":[
      {"gate":"cz","qubits":[0,1],"duration_s":1e-7},
      {"gate":"cz","qubits":[1,0],"duration_s":2e-7}]})"),
            "<no error>");
}

TEST(LoadDurationTable, SchemaViolationsLocated) {
  EXPECT_EQ(schema_pointer("[]"), "");
  EXPECT_EQ(schema_pointer(R"({"architecture":"a","entries":[]})"), "");
  EXPECT_EQ(schema_pointer(R"({"device":1,"architecture":"a","entries":[]})"), "/device");
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a","entries":{}})"), "/entries");
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a",
      "entries":[{"gate":"x","qubits":[0,-1],"duration_s":1}]})"),
            "/entries/0/qubits/1");
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a",
      "entries":[{"gate":"X","qubits":[0],"duration_s":1}]})"),
            "/entries/0/gate");
  EXPECT_EQ(schema_pointer(R"({"device":"d","architecture":"a","entries":[],
      "defaults":{"x":"slow"}})"),
            "/defaults/x");
}

TEST(LoadDurationTable, UnreadableOrInvalidFile) {
  testing::TempDir dir;
  EXPECT_THROW(load_duration_table((dir.path() / "missing.json").string()), ConfigError);
  EXPECT_THROW(load_duration_table(dir.write("bad.json", "{not json")), SchemaError);
}

TEST(LoadDurationTable, SerializeRoundTrip) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> sec(0.0, 1e-6);
  DurationTable t("dev", "arch");
  for (QubitIndex q = 0; q < 20; ++q) {
    t.add_entry("sx", {q}, sec(rng));
    t.add_entry("ecr", {q, q + 1}, sec(rng));
  }
  t.set_default("measure", 1.2e-6);
  testing::TempDir dir;
  const auto path = dir.write("t.json", to_json(t).dump());
  const DurationTable back = load_duration_table(path);
  EXPECT_EQ(back, t);
  EXPECT_EQ(to_json(back), to_json(t));
}

TEST(DurationTable, LookupPrecedence) {
  DurationTable t("d", "a");
  t.add_entry("ecr", {0, 1}, 5e-7);
  t.set_default("ecr", 6e-7);
  EXPECT_EQ(t.lookup("ecr", std::vector<QubitIndex>{0, 1}), 5e-7);
  EXPECT_EQ(t.lookup("ecr", std::vector<QubitIndex>{1, 0}), 6e-7);
  EXPECT_EQ(t.lookup("x", std::vector<QubitIndex>{0}), std::nullopt);
  EXPECT_THROW(t.add_entry("ecr", {0, 1}, 1e-7), ConfigError);
  EXPECT_THROW(t.add_entry("x", {0}, std::nan("")), ConfigError);
}

TEST(Summarize, TwoPointMean) {
  DurationTable t("d", "a");
  t.add_entry("x", {0}, 4e-8);
  t.add_entry("x", {1}, 6e-8);
  const auto s = summarize(t);
  EXPECT_DOUBLE_EQ(s.at("x").mean, 5e-8);
  EXPECT_EQ(s.at("x").count, 2u);
  EXPECT_EQ(s.at("x").min, 4e-8);
  EXPECT_EQ(s.at("x").max, 6e-8);
}

TEST(Summarize, SingleEntryAndDefaults) {
  DurationTable t("d", "a");
  t.add_entry("x", {3}, 3.5e-8);
  t.set_default("x", 9e-8);  // ignored: x has entries
  t.set_default("measure", 1e-6);
  const auto s = summarize(t);
  EXPECT_EQ(s.at("x").mean, 3.5e-8);
  EXPECT_FALSE(s.at("x").from_default);
  EXPECT_EQ(s.at("measure").mean, 1e-6);
  EXPECT_TRUE(s.at("measure").from_default);
}

TEST(Summarize, MeanMatchesDirectSum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> sec(1e-8, 1e-6);
  DurationTable t("d", "a");
  double sum = 0.0;
  for (QubitIndex q = 0; q < 10; ++q) {
    const double d = sec(rng);
    sum += d;
    t.add_entry("sx", {q}, d);
  }
  const auto s = summarize(t).at("sx");
  EXPECT_NEAR(s.mean, sum / 10.0, 1e-15 * sum);
  EXPECT_LE(s.min, s.mean);
  EXPECT_LE(s.mean, s.max);
}

TEST(ConfigureWeights, SingleDeviceSingleGate) {
  DurationTable t("d", "heron");
  t.add_entry("cz", {0, 1}, 6.6e-7);
  const WeightMap w = configure_weights(std::vector<DurationTable>{t});
  EXPECT_EQ(w.weights(), (std::map<std::string, double>{{"cz", 1.0}}));
  EXPECT_EQ(w.architecture(), "heron");
}

TEST(ConfigureWeights, EagleRow) {
  const auto tables = three_devices(
      "eagle", {{"ecr", 5.33e-7}, {"rz", 0.0}, {"sx", 5.02e-8}, {"x", 5.02e-8}});
  const WeightMap w = configure_weights(tables);
  EXPECT_EQ(*w.find("ecr"), 1.0);
  EXPECT_EQ(*w.find("rz"), 0.0);
  // 5.02e-8 / 5.33e-7 = 0.094184 -> 0.0942
  EXPECT_NEAR(*w.find("sx"), 5.02e-8 / 5.33e-7, 1e-12);
  EXPECT_EQ(round_sig(*w.find("sx"), 3), 0.0942);
  EXPECT_EQ(round_sig(*w.find("x"), 3), 0.0942);
}

TEST(ConfigureWeights, HeronRow) {
  const double cz = 6.6e-8;
  const auto tables = three_devices(
      "heron", {{"cz", cz}, {"rz", 0.0}, {"sx", 0.483 * cz}, {"x", 0.483 * cz}});
  const WeightMap w = configure_weights(tables);
  EXPECT_EQ(*w.find("cz"), 1.0);
  EXPECT_EQ(*w.find("rz"), 0.0);
  EXPECT_EQ(round_sig(*w.find("sx"), 3), 0.483);
  EXPECT_EQ(round_sig(*w.find("x"), 3), 0.483);
}

TEST(ConfigureWeights, Errors) {
  EXPECT_THROW(configure_weights(std::vector<DurationTable>{}), ConfigError);
  DurationTable eagle("a", "eagle"), heron("b", "heron"), zero("c", "eagle");
  eagle.add_entry("ecr", {0, 1}, 5e-7);
  heron.add_entry("cz", {0, 1}, 7e-8);
  zero.add_entry("rz", {0}, 0.0);
  EXPECT_THROW(configure_weights(std::vector<DurationTable>{eagle, heron}), ConfigError);
  EXPECT_THROW(configure_weights(std::vector<DurationTable>{zero}), ConfigError);
}

TEST(ConfigureWeights, HierarchicalVersusPooled) {
  // Device a has 3 sx entries of 1, device b has one of 4 (units of 1e-8 s).
  DurationTable a("a", "arch"), b("b", "arch");
  a.add_entry("ecr", {0, 1}, 1e-7);
  for (QubitIndex q = 0; q < 3; ++q) a.add_entry("sx", {q}, 1e-8);
  b.add_entry("ecr", {0, 1}, 1e-7);
  b.add_entry("sx", {0}, 4e-8);
  const std::vector<DurationTable> both{a, b};
  EXPECT_NEAR(*configure_weights(both).find("sx"), 0.25, 1e-15);
  EXPECT_NEAR(*configure_weights(both, Averaging::pooled).find("sx"), 0.175, 1e-15);
}

TEST(ConfigureWeights, GateMissingOnOneDevice) {
  DurationTable a("a", "arch"), b("b", "arch");
  a.add_entry("ecr", {0, 1}, 4e-7);
  a.add_entry("measure", {0}, 2e-7);
  b.add_entry("ecr", {0, 1}, 4e-7);
  const WeightMap w = configure_weights(std::vector<DurationTable>{a, b});
  EXPECT_DOUBLE_EQ(*w.find("measure"), 0.5);
}

class ConfigureWeightsProperties : public ::testing::Test {
 protected:
  std::vector<DurationTable> random_tables(std::size_t count) {
    std::uniform_real_distribution<double> sec(0.0, 1e-6);
    std::vector<DurationTable> out;
    for (std::size_t d = 0; d < count; ++d) {
      DurationTable t("dev" + std::to_string(d), "arch");
      for (const char* gate : {"ecr", "sx", "x", "measure"}) {
        const std::size_t n = 1 + rng() % 6;
        for (QubitIndex q = 0; q < n; ++q) t.add_entry(gate, {q}, sec(rng));
      }
      t.add_entry("rz", {0}, 0.0);
      out.push_back(std::move(t));
    }
    return out;
  }
  std::mt19937_64 rng{5};
};

TEST_F(ConfigureWeightsProperties, ScaleInvariant) {
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  for (int i = 0; i < 100; ++i) {
    const auto tables = random_tables(1 + rng() % 4);
    const double k = factor(rng);
    std::vector<DurationTable> scaled;
    for (const auto& t : tables) scaled.push_back(t.scaled(k));
    const WeightMap a = configure_weights(tables), b = configure_weights(scaled);
    for (const auto& [gate, w] : a.weights()) EXPECT_NEAR(*b.find(gate), w, 1e-12);
  }
}

TEST_F(ConfigureWeightsProperties, PermutationInvariant) {
  for (int i = 0; i < 100; ++i) {
    auto tables = random_tables(2 + rng() % 3);
    const WeightMap a = configure_weights(tables);
    std::shuffle(tables.begin(), tables.end(), rng);
    const WeightMap b = configure_weights(tables);
    for (const auto& [gate, w] : a.weights()) EXPECT_NEAR(*b.find(gate), w, 1e-12);
  }
}

TEST_F(ConfigureWeightsProperties, RangeAndAnchor) {
  for (int i = 0; i < 100; ++i) {
    const WeightMap w = configure_weights(random_tables(1 + rng() % 4));
    double top = 0.0;
    for (const auto& [gate, v] : w.weights()) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      top = std::max(top, v);
    }
    EXPECT_EQ(top, 1.0);
    EXPECT_EQ(*w.find("rz"), 0.0);
  }
}

TEST(WeightMapJson, RoundTripAndErrors) {
  WeightMap w({{"ecr", 1.0}, {"sx", 5.02e-8 / 5.33e-7}}, "eagle");
  testing::TempDir dir;
  const auto path = dir.write("w.json", dump_json(to_json(w), 2));
  EXPECT_EQ(load_weight_map(path), w);

  auto pointer_of = [](const char* text) {
    try {
      weight_map_from_json(nlohmann::json::parse(text));
    } catch (const SchemaError& e) {
      return e.pointer();
    }
    return std::string("<no error>");
  };
  EXPECT_EQ(pointer_of(R"({"weights":{"x":0.1}})"), "<no error>");
  EXPECT_EQ(pointer_of(R"({"architecture":"a"})"), "");
  EXPECT_EQ(pointer_of(R"({"weights":{"x":-0.1}})"), "/weights/x");
  EXPECT_EQ(pointer_of(R"({"weights":{"x":"a"}})"), "/weights/x");
}

}  // namespace
}  // namespace gadepth
