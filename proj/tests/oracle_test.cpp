// Copyright 2026 The dilaug Authors
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

#include <numeric>

#include "dilaug/dilation.hpp"
#include "dilaug/errors.hpp"
#include "dilaug/oracle.hpp"
#include "dilaug/random.hpp"
#include "test_support.hpp"

namespace dilaug {
namespace {

Instance star_edgeless(int k) {
  return Instance(Graph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}}), {}, k,
                  Stretch(2, 1));
}

Instance relabel(const Instance& inst, const std::vector<Vertex>& perm) {
  std::vector<WeightedEdge> gamma;
  for (const auto& we : inst.gamma().edges()) {
    gamma.push_back({make_edge(perm[we.edge.u], perm[we.edge.v]), we.weight});
  }
  std::vector<Edge> g;
  for (const Edge& e : inst.g_edges()) g.push_back(make_edge(perm[e.u], perm[e.v]));
  return Instance(Graph(inst.n(), gamma), g, inst.k(), inst.t());
}

TEST(SolveMin, TrianglePath) {
  const Instance inst(Graph::unweighted(3, {{0, 1}, {1, 2}, {0, 2}}),
                      {{0, 1}, {1, 2}}, 1, Stretch(3, 2));
  const Verdict v = solve_min(inst);
  ASSERT_TRUE(v.is_yes());
  EXPECT_EQ(v.solution(), Solution({{0, 2}}));
}

TEST(SolveMin, StarNeedsEveryLeaf) {
  EXPECT_FALSE(solve_min(star_edgeless(2)).is_yes());
  const Verdict v = solve_min(star_edgeless(3));
  ASSERT_TRUE(v.is_yes());
  EXPECT_EQ(v.solution(), Solution({{0, 1}, {0, 2}, {0, 3}}));
}

TEST(SolveMin, ConflictFreeNeedsNothing) {
  const Instance inst(Graph::unweighted(3, {{0, 1}, {1, 2}}), {{0, 1}, {1, 2}},
                      0, Stretch(1, 1));
  const Verdict v = solve_min(inst);
  ASSERT_TRUE(v.is_yes());
  EXPECT_TRUE(v.solution().empty());
}

TEST(SolveMin, BudgetCap) {
  SearchOptions tiny;
  tiny.max_candidates = 3;
  EXPECT_THROW(solve_min(star_edgeless(3), tiny), BudgetExceeded);
}

TEST(SolveMin, MatchesReferenceSizeAndIsMinimal) {
  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    RandomInstanceSpec spec;
    spec.max_n = 7;
    spec.max_k = 3;
    spec.max_weight = i % 3 == 0 ? 3 : 1;
    const Instance inst = random_instance(rng, spec);
    const Verdict v = solve_min(inst);
    const auto want = testing::reference_min_size(inst);
    ASSERT_EQ(v.is_yes(), want.has_value());
    if (!v.is_yes()) continue;
    const Solution& s = v.solution();
    EXPECT_EQ(static_cast<int>(s.size()), *want);
    EXPECT_TRUE(verify_solution(inst, s).valid());
    for (const Edge& e : s) {
      EXPECT_FALSE(verify_solution(inst, s.without(e)).valid());
    }
  }
}

TEST(SolveMin, SameAnswerForAnyWorkerCount) {
  Rng rng(32);
  for (int i = 0; i < 100; ++i) {
    RandomInstanceSpec spec;
    spec.max_k = 3;
    const Instance inst = random_instance(rng, spec);
    const Verdict one = solve_min(inst);
    for (int workers : {2, 4}) {
      SearchOptions options;
      options.workers = workers;
      const Verdict many = solve_min(inst, options);
      ASSERT_EQ(one.is_yes(), many.is_yes());
      if (one.is_yes()) EXPECT_EQ(one.solution(), many.solution());
    }
  }
}

TEST(SolveMin, InvariantUnderRelabeling) {
  Rng rng(33);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(rng, RandomInstanceSpec{});
    std::vector<Vertex> perm(static_cast<std::size_t>(inst.n()));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const Instance moved = relabel(inst, perm);
    const Verdict a = solve_min(inst);
    const Verdict b = solve_min(moved);
    ASSERT_EQ(a.is_yes(), b.is_yes());
    if (a.is_yes()) EXPECT_EQ(a.solution().size(), b.solution().size());
  }
}

}  // namespace
}  // namespace dilaug
