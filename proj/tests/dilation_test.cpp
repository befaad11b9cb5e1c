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

#include "dilaug/dilation.hpp"
#include "dilaug/random.hpp"
#include "test_support.hpp"

namespace dilaug {
namespace {

Instance triangle_path(int k, Stretch t) {
  return Instance(Graph::unweighted(3, {{0, 1}, {1, 2}, {0, 2}}),
                  {{0, 1}, {1, 2}}, k, t);
}

Instance star_edgeless(int k) {
  return Instance(Graph::unweighted(4, {{0, 1}, {0, 2}, {0, 3}}), {}, k,
                  Stretch(2, 1));
}

// Random subset of non-edges with at most `max_size` pairs.
std::vector<Edge> random_extra(Rng& rng, const Instance& inst, int max_size) {
  std::vector<Edge> pool = inst.non_edges();
  rng.shuffle(pool);
  const int size =
      std::min(rng.between(0, max_size), static_cast<int>(pool.size()));
  return {pool.begin(), pool.begin() + size};
}

// Exact max ratio over all pairs from the reference distances; nullopt when
// some pair is unreachable.
std::optional<Stretch> reference_dilation(const Instance& inst,
                                          const std::vector<Edge>& extra) {
  const testing::Matrix metric = testing::gamma_metric(inst);
  const testing::Matrix d = testing::augmented_metric(inst, metric, extra);
  Stretch best(1, 1);
  for (int a = 0; a < inst.n(); ++a) {
    for (int b = a + 1; b < inst.n(); ++b) {
      if (d[a][b] >= testing::kInf) return std::nullopt;
      best = std::max(best, Stretch(d[a][b], metric[a][b]));
    }
  }
  return best;
}

TEST(AdjacentConflicts, TrianglePathAtTwo) {
  EXPECT_TRUE(adjacent_conflicts(triangle_path(0, Stretch(2, 1)), Solution())
                  .empty());
}

TEST(AdjacentConflicts, TrianglePathAtThreeHalves) {
  const auto c =
      adjacent_conflicts(triangle_path(0, Stretch(3, 2)), Solution());
  EXPECT_EQ(c.conflict_edges, (std::vector<Edge>{{0, 2}}));
  EXPECT_EQ(c.conflict_vertices, (VertexSet{0, 2}));
}

TEST(AdjacentConflicts, IdentityEmbeddingHasNone) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const int n = rng.between(2, 8);
    std::vector<WeightedEdge> gamma;
    for (const Edge& e : random_connected_edges(rng, n, 1, 3)) {
      gamma.push_back({e, rng.between(1, 3)});
    }
    const Graph g(n, gamma);
    const Instance inst(g, g.edge_list(), 0, Stretch(1, 1));
    EXPECT_TRUE(adjacent_conflicts(inst, Solution()).empty());
  }
}

TEST(Dilation, Examples) {
  const Instance same(Graph::unweighted(3, {{0, 1}, {1, 2}}),
                      {{0, 1}, {1, 2}}, 0, Stretch(1, 1));
  EXPECT_EQ(dilation(same, Solution()).ratio, Stretch(1, 1));
  EXPECT_EQ(dilation(triangle_path(0, Stretch(2, 1)), Solution()).ratio,
            Stretch(2, 1));
  EXPECT_TRUE(dilation(star_edgeless(0), Solution()).infinite());
}

TEST(Verify, Examples) {
  const Instance inst = triangle_path(1, Stretch(3, 2));
  EXPECT_TRUE(verify_solution(inst, Solution({{0, 2}})).valid());
  const auto over = verify_solution(inst.with_budget(0), Solution({{0, 2}}));
  EXPECT_EQ(over.status, Verification::Status::budget_exceeded);
  EXPECT_EQ(over.reason(), "budget-exceeded");
  const auto star = verify_solution(star_edgeless(2), Solution({{0, 1}, {0, 2}}));
  EXPECT_EQ(star.status, Verification::Status::conflict);
  EXPECT_EQ(star.reason(), "conflict(0,3)");
}

TEST(Verify, OverlapWithG) {
  const auto v =
      verify_solution(triangle_path(1, Stretch(2, 1)), Solution({{0, 1}}));
  EXPECT_EQ(v.status, Verification::Status::overlaps_g);
  EXPECT_EQ(v.reason(), "overlaps-G");
}

TEST(AdjacentConflicts, FreeIffAllPairsWithinStretch) {
  Rng rng(21);
  for (int i = 0; i < 400; ++i) {
    RandomInstanceSpec spec;
    spec.max_weight = i % 2 == 0 ? 1 : 3;
    const Instance inst = random_instance(rng, spec);
    const auto extra = random_extra(rng, inst, 2);
    const testing::Matrix metric = testing::gamma_metric(inst);
    EXPECT_EQ(adjacent_conflicts(inst, Solution(extra)).empty(),
              testing::all_pairs_within(inst, metric, extra));
    EXPECT_EQ(conflict_free(inst, Solution(extra)),
              testing::all_pairs_within(inst, metric, extra));
  }
}

TEST(Dilation, MatchesReference) {
  Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    RandomInstanceSpec spec;
    spec.max_weight = 3;
    const Instance inst = random_instance(rng, spec);
    const auto extra = random_extra(rng, inst, 3);
    const Dilation got = dilation(inst, Solution(extra));
    const auto want = reference_dilation(inst, extra);
    EXPECT_EQ(got.ratio, want);
    // Dilation <= t iff no conflict.
    const bool within = !got.infinite() && *got.ratio <= inst.t();
    EXPECT_EQ(within, adjacent_conflicts(inst, Solution(extra)).empty());
  }
}

TEST(Dilation, NeverBelowOne) {
  // Distances in G+S never undercut the metric.
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    RandomInstanceSpec spec;
    spec.max_weight = 4;
    const Instance inst = random_instance(rng, spec);
    const auto extra = random_extra(rng, inst, 3);
    const Graph aug = augmented_graph(inst, Solution(extra));
    for (Vertex s = 0; s < inst.n(); ++s) {
      const auto d = weighted_distances(aug, s);
      for (Vertex v = 0; v < inst.n(); ++v) {
        EXPECT_GE(d[v], Distance(inst.metric(s, v)));
      }
    }
  }
}

TEST(Dilation, MonotoneUnderAddition) {
  Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    RandomInstanceSpec spec;
    spec.max_weight = 2;
    const Instance inst = random_instance(rng, spec);
    const auto first = random_extra(rng, inst, 2);
    auto more = random_extra(rng, inst, 2);
    const Solution s(first);
    const Solution both = s.united(Solution(more));
    EXPECT_LE(dilation(inst, both), dilation(inst, s));
  }
}

TEST(Verify, ConflictCulpritIsSmallest) {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const Instance inst = random_instance(rng, RandomInstanceSpec{});
    const auto extra = random_extra(rng, inst, 1);
    const auto c = adjacent_conflicts(inst, Solution(extra));
    const auto v = verify_solution(inst.with_budget(3), Solution(extra));
    if (c.empty()) {
      EXPECT_TRUE(v.valid());
    } else {
      ASSERT_EQ(v.status, Verification::Status::conflict);
      EXPECT_EQ(*v.culprit, c.conflict_edges.front());
    }
  }
}

}  // namespace
}  // namespace dilaug
