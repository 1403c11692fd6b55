// Copyright 2026 The codlab Authors.
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


#include <algorithm>
#include <map>
#include <vector>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "codlab/alt_codegrees.hpp"

namespace codlab {
namespace {

using ::testing::ElementsAre;

std::vector<Natural> nats(std::initializer_list<std::uint64_t> v) {
  return {v.begin(), v.end()};
}

// Oracle: S_n dimensions from the branching rule, no hook lengths involved.
Natural branching_dim(const std::vector<int>& parts, std::map<std::vector<int>, Natural>& memo) {
  int n = 0;
  for (int p : parts) n += p;
  if (n <= 1) return Natural(1);
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  Natural total;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i + 1 < parts.size() && parts[i] == parts[i + 1]) continue;
    std::vector<int> smaller = parts;
    if (--smaller[i] == 0) smaller.pop_back();
    total += branching_dim(smaller, memo);
  }
  memo.emplace(parts, total);
  return total;
}

// Oracle: cod(A_n) from the Clifford-theory restriction of S_n characters,
// with dimensions from the branching rule: |A_n| / dim, halving the
// dimension for self-conjugate shapes. Linear characters have A_n as kernel.
std::vector<Natural> oracle_codegrees(int n) {
  std::map<std::vector<int>, Natural> memo;
  const Natural half = exact_div(factorial(n), Natural(2));
  std::vector<Natural> out;
  for (const Partition& l : Partitions(n)) {
    Natural d = branching_dim(l.parts(), memo);
    if (is_self_conjugate(l)) d = exact_div(d, Natural(2));
    out.push_back(d == Natural(1) ? Natural(1) : exact_div(half, d));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(SymDegree, Examples) {
  EXPECT_EQ(sym_degree(Partition({7})), Natural(1));
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(sym_degree(Partition({n - 1, 1})), Natural(n - 1));
  EXPECT_EQ(sym_degree(Partition({3, 2})), Natural(5));
}

TEST(AltIrrEntries, A5) {
  const auto e = alt_irr_entries(5);
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0].lambda, Partition({5}));
  EXPECT_EQ(e[0].dimension, Natural(1));
  EXPECT_EQ(e[0].codegree, Natural(1));
  EXPECT_EQ(e[1].lambda, Partition({4, 1}));
  EXPECT_EQ(e[1].dimension, Natural(4));
  EXPECT_EQ(e[2].lambda, Partition({3, 2}));
  EXPECT_EQ(e[2].dimension, Natural(5));
  EXPECT_EQ(e[3].lambda, Partition({3, 1, 1}));
  EXPECT_TRUE(e[3].split);
  EXPECT_EQ(e[3].dimension, Natural(3));
  EXPECT_EQ(e[3].codegree, Natural(20));
  EXPECT_THROW(alt_irr_entries(4), std::invalid_argument);
}

TEST(AltIrrEntries, A6DegreeMultiset) {
  std::vector<Natural> degrees;
  for (const auto& e : alt_irr_entries(6)) {
    degrees.push_back(e.dimension);
    if (e.split) degrees.push_back(e.dimension);
  }
  std::sort(degrees.begin(), degrees.end());
  EXPECT_EQ(degrees, nats({1, 5, 5, 8, 8, 9, 10}));
}

// Sum of squared A_n degrees (split entries counted twice) is |A_n|; the
// representative is never lexicographically below its conjugate.
TEST(AltIrrEntries, SplitAdjustedSumOfSquares) {
  for (int n = 5; n <= 15; ++n) {
    Natural total;
    for (const auto& e : alt_irr_entries(n)) {
      EXPECT_GE(e.lambda, conjugate(e.lambda));
      EXPECT_EQ(e.split, is_self_conjugate(e.lambda));
      const Natural sq = e.dimension * e.dimension;
      total += e.split ? sq + sq : sq;
    }
    EXPECT_EQ(total, alternating_order(n)) << n;
  }
}

TEST(AltCodegreeSet, Examples) {
  EXPECT_THAT(alt_codegree_set(5).values(), ElementsAre(1, 12, 15, 20));
  EXPECT_EQ(alt_codegree_set(6).values(), nats({1, 36, 40, 45, 72}));
  EXPECT_EQ(alt_codegree_set(8).values(),
            nats({1, 288, 315, 360, 448, 576, 720, 960, 1008, 1440, 2880}));
  EXPECT_EQ(alt_codegree_set(8).label(), "A8");
  EXPECT_EQ(alt_codegree_set(8).order(), Natural(20160));
  EXPECT_THROW(alt_codegree_set(3), std::invalid_argument);
}

TEST(AltCodegreeSet, MatchesBranchingOracle) {
  for (int n = 5; n <= 12; ++n) {
    EXPECT_EQ(alt_codegree_set(n).values(), oracle_codegrees(n)) << n;
  }
}

// Every codegree divides |A_n|, the set is sorted without repeats, and it is
// no larger than the number of conjugate classes of partitions.
TEST(AltCodegreeSet, StructuralInvariants) {
  for (int n = 5; n <= 18; ++n) {
    const CodegreeSet s = alt_codegree_set(n);
    EXPECT_TRUE(std::is_sorted(s.values().begin(), s.values().end()));
    EXPECT_EQ(std::adjacent_find(s.values().begin(), s.values().end()), s.values().end());
    EXPECT_EQ(s.values().front(), Natural(1));
    for (const Natural& v : s.values()) EXPECT_TRUE(divides(v, s.order()));
    EXPECT_LE(s.size(), alt_irr_entries(n).size());
  }
}

TEST(MinCodegree, Examples) {
  EXPECT_EQ(min_nontrivial_codegree(5), Natural(12));
  EXPECT_EQ(min_nontrivial_codegree(6), Natural(36));
  EXPECT_EQ(min_nontrivial_codegree(8), Natural(288));
  EXPECT_THROW(min_nontrivial_codegree(4), std::invalid_argument);
}

TEST(MinCodegree, EqualsSecondSmallestOfOracleSet) {
  for (int n = 5; n <= 12; ++n) {
    EXPECT_EQ(min_nontrivial_codegree(n), oracle_codegrees(n)[1]) << n;
  }
}

TEST(Monotone, Examples) {
  EXPECT_TRUE(verify_min_codegree_monotone(5, 12).holds);
  const MonotoneCheck c = verify_min_codegree_monotone(5, 6);
  EXPECT_TRUE(c.holds);
  ASSERT_EQ(c.witness.size(), 2u);
  EXPECT_EQ(c.witness[0], std::make_pair(5, Natural(12)));
  EXPECT_EQ(c.witness[1], std::make_pair(6, Natural(36)));
  EXPECT_THROW(verify_min_codegree_monotone(6, 5), std::invalid_argument);
  EXPECT_THROW(verify_min_codegree_monotone(4, 8), std::invalid_argument);
}

TEST(Monotone, HoldsUpToThirty) {
  const MonotoneCheck c = verify_min_codegree_monotone(5, 30);
  EXPECT_TRUE(c.holds);
  EXPECT_FALSE(c.first_violation.has_value());
  ASSERT_EQ(c.witness.size(), 26u);
  for (std::size_t i = 1; i < c.witness.size(); ++i) {
    EXPECT_LT(c.witness[i - 1].second, c.witness[i].second);
  }
}

TEST(CodegreeSet, ValidatesAndCompares) {
  EXPECT_THROW(CodegreeSet("X", Natural(60), nats({12, 15})), std::logic_error);
  EXPECT_THROW(CodegreeSet("X", Natural(60), nats({1, 7})), std::logic_error);
  const CodegreeSet a("X", Natural(60), nats({20, 1, 12, 15, 12}));
  EXPECT_EQ(a.size(), 4u);
  const CodegreeSet b("Y", Natural(360), nats({1, 12, 15}));
  EXPECT_TRUE(b.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(b));
  EXPECT_EQ(a.first_missing_from(b), Natural(20));
  EXPECT_FALSE(b.first_missing_from(a).has_value());
  EXPECT_TRUE(a.same_values(alt_codegree_set(5)));
}

}  // namespace
}  // namespace codlab
