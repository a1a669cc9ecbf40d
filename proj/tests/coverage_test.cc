// Copyright 2026 The VCA Bounds Authors
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

#include "vca/coverage.h"

#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"
#include "vca/generators.h"

namespace vca {
namespace {

using ::testing::ElementsAre;

bool operator==(const VerifyResult& a, const VerifyResult& b) {
  return a.covered == b.covered && a.edge == b.edge && a.missing == b.missing;
}

VcaArray EvenWeightCode() {
  VcaArray a(8, 4, 2);
  int r = 0;
  for (int x = 0; x < 16; ++x) {
    if (__builtin_popcount(x) % 2 != 0) continue;
    for (int c = 0; c < 4; ++c) a.at(r, c) = (x >> (3 - c)) & 1;
    ++r;
  }
  return a;
}

TEST(VerifyTest, EvenWeightCodeCoversAllTriples) {
  VerifyResult result = Verify(EvenWeightCode(), CompleteUniform(4, 3));
  EXPECT_TRUE(result.covered);
  EXPECT_EQ(result.edge, -1);
}

TEST(VerifyTest, DroppingAnyRowUncovers) {
  const VcaArray full = EvenWeightCode();
  for (int drop = 0; drop < 8; ++drop) {
    VcaArray a(7, 4, 2);
    for (int r = 0, out = 0; r < 8; ++r) {
      if (r == drop) continue;
      for (int c = 0; c < 4; ++c) a.at(out, c) = full.at(r, c);
      ++out;
    }
    EXPECT_FALSE(Verify(a, CompleteUniform(4, 3)).covered);
  }
}

TEST(VerifyTest, AllZerosWitness) {
  Hypergraph h(3, {{0, 2}, {1}});
  VerifyResult result = Verify(VcaArray(1, 3, 2), h);
  EXPECT_FALSE(result.covered);
  EXPECT_EQ(result.edge, 0);
  EXPECT_THAT(result.missing, ElementsAre(0, 1));
}

TEST(VerifyTest, EmptyArrayIsUncovered) {
  VerifyResult result = Verify(VcaArray(0, 4, 3), CyclicConsecutive(4, 2));
  EXPECT_FALSE(result.covered);
  EXPECT_EQ(result.edge, 0);
  EXPECT_THAT(result.missing, ElementsAre(0, 0));
}

TEST(VerifyTest, DimensionMismatchThrows) {
  EXPECT_THROW(Verify(VcaArray(2, 3, 2), CompleteUniform(4, 2)), std::invalid_argument);
  VcaArray bad(1, 2, 2);
  bad.at(0, 0) = 2;
  EXPECT_THROW(Verify(bad, CompleteUniform(2, 1)), std::invalid_argument);
}

TEST(VerifyTest, MatchesBruteForceOracle) {
  std::mt19937_64 gen(2026);
  std::uniform_int_distribution<int> k_dist(1, 8), v_dist(2, 3), n_dist(0, 30);
  int covered = 0;
  for (int instance = 0; instance < 200; ++instance) {
    const int k = k_dist(gen), v = v_dist(gen);
    Hypergraph h = testing::RandomHypergraph(gen, k, 3, 10);
    VcaArray a = testing::RandomArray(gen, n_dist(gen), k, v);
    VerifyResult expected = testing::OracleVerify(a, h);
    EXPECT_TRUE(Verify(a, h) == expected) << instance;
    EXPECT_TRUE(serial::Verify(a, h) == expected) << instance;
    covered += expected.covered;
  }
  // Both outcomes must be exercised.
  EXPECT_GT(covered, 10);
  EXPECT_LT(covered, 190);
}

TEST(TupleTest, IndexRoundTrip) {
  const Edge e = {1, 3, 4};
  const std::vector<int> row = {9, 2, 9, 0, 1};
  EXPECT_EQ(TupleIndex(e, row, 3), 2u * 9 + 0 * 3 + 1);
  EXPECT_THAT(TupleFromIndex(19, 3, 3), ElementsAre(2, 0, 1));
  EXPECT_EQ(TupleSpace(2, 24), kMaxTupleSpace);
  EXPECT_THROW(TupleSpace(2, 25), std::invalid_argument);
  EXPECT_THROW(CoverageState(CompleteUniform(13, 13), 4), std::invalid_argument);
}

TEST(DensityTest, FreshStateEqualsEdgeCount) {
  Hypergraph h = CyclicConsecutive(7, 3);
  CoverageState state(h, 3);
  PartialRow empty(7, kUnset);
  EXPECT_DOUBLE_EQ(Density(state, empty), 7.0);
  EXPECT_EQ(state.total_uncovered(), 7u * 27);
}

TEST(DensityTest, ZeroWhenCovered) {
  CoverageState state(CompleteUniform(4, 3), 2);
  const VcaArray a = EvenWeightCode();
  for (int r = 0; r < a.n; ++r) state.AddRow(a.row(r));
  EXPECT_EQ(state.total_uncovered(), 0u);
  EXPECT_DOUBLE_EQ(Density(state, PartialRow(4, kUnset)), 0.0);
  EXPECT_DOUBLE_EQ(Density(state, PartialRow{1, 0, kUnset, 1}), 0.0);
}

TEST(DensityTest, SingleEdgeAfterOneRow) {
  CoverageState state(Hypergraph(2, {{0, 1}}), 2);
  EXPECT_EQ(state.AddRow(std::vector<int>{0, 0}), 1u);
  EXPECT_DOUBLE_EQ(Density(state, PartialRow{kUnset, kUnset}), 0.75);
  EXPECT_DOUBLE_EQ(Density(state, PartialRow{0, kUnset}), 0.5);
  EXPECT_DOUBLE_EQ(Density(state, PartialRow{1, kUnset}), 1.0);
  EXPECT_DOUBLE_EQ(Density(state, PartialRow{0, 0}), 0.0);
}

TEST(DensityTest, ExpectationOverNextSymbol) {
  // The density of a partial row is the mean over the next free column.
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 6, v = 3;
    Hypergraph h = testing::RandomHypergraph(gen, k, 3, 8);
    CoverageState state(h, v);
    VcaArray a = testing::RandomArray(gen, 5, k, v);
    for (int r = 0; r < a.n; ++r) state.AddRow(a.row(r));
    PartialRow partial(k, kUnset);
    partial[0] = 1;
    std::uint64_t sum = 0;
    for (int s = 0; s < v; ++s) {
      partial[3] = s;
      sum += ScaledDensity(state, partial);
    }
    partial[3] = kUnset;
    EXPECT_EQ(sum, ScaledDensity(state, partial) * v) << trial;
  }
}

TEST(CoverageStateTest, IncrementalMatchesRebuild) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> k_dist(1, 7), v_dist(2, 3);
    const int k = k_dist(gen), v = v_dist(gen);
    Hypergraph h = testing::RandomHypergraph(gen, k, 3, 8);
    VcaArray a = testing::RandomArray(gen, 12, k, v);
    CoverageState incremental(h, v);
    for (int r = 0; r < a.n; ++r) {
      incremental.AddRow(a.row(r));
      CoverageState rebuilt(h, v);
      for (int q = 0; q <= r; ++q) rebuilt.AddRow(a.row(q));
      ASSERT_TRUE(incremental == rebuilt);
      for (int e = 0; e < h.num_edges(); ++e) {
        std::uint64_t marked = 0;
        for (std::uint64_t x = 0; x < incremental.tuple_space(e); ++x) {
          marked += incremental.covered(e, x);
        }
        ASSERT_EQ(incremental.uncovered(e), incremental.tuple_space(e) - marked);
      }
    }
    VcaArray prefix(a.n, k, v);
    prefix.cells = a.cells;
    EXPECT_EQ(incremental.total_uncovered() == 0, Verify(prefix, h).covered);
  }
}

}  // namespace
}  // namespace vca
