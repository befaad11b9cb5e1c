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

#pragma once

#include <cstdint>

#include "dilaug/dilation.hpp"
#include "dilaug/instance.hpp"
#include "dilaug/search.hpp"

namespace dilaug {

// Vertices that contain every endpoint of some minimal solution, if one
// exists.
struct CandidateRegion {
  VertexSet vertices;
};

// What a bounded-degree engine decided before enumerating.
struct RegionPlan {
  ConflictAnalysis conflicts;
  // Max degree of the graph the balls are taken in (Gamma or G).
  int max_degree = 0;
  // Radius of the ball around the solution endpoints that must cover V_c.
  std::int64_t cover_radius = 0;
  // Radius of the ball around V_c that must contain the solution endpoints.
  std::int64_t region_radius = 0;
  // Largest |V_c| compatible with a YES answer.
  std::uint64_t conflict_bound = 0;
  // |V_c| exceeded conflict_bound; the answer is NO.
  bool rejected = false;
  CandidateRegion region;
};

// Largest size of a ball of `radius` hops around `centers` vertices in a graph
// of max degree `degree`: centers * (1 + degree + ... + degree^radius),
// saturating at UINT64_MAX.
std::uint64_t ball_size_bound(std::uint64_t centers, int degree,
                              std::int64_t radius);

// Gamma of bounded degree: V_S lies within floor(t) Gamma-hops of V_c and
// V_c within floor(t) Gamma-hops of V_S.
RegionPlan plan_bounded_gamma(const Instance& inst);
// G of bounded degree: V_c lies within floor(t) G-hops of V_S and V_S within
// floor(t)^2 G-hops of V_c.
RegionPlan plan_bounded_g(const Instance& inst);

// Gamma an unweighted tree and t < 3: every tree edge must be present in
// G+S, so the answer is E(Gamma) \ E(G) when it fits the budget. Throws
// InapplicableError otherwise.
Verdict solve_tree_gamma(const Instance& inst);

Verdict solve_bounded_gamma(const Instance& inst,
                            const SearchOptions& options = {},
                            SearchStats* stats = nullptr);

Verdict solve_bounded_g(const Instance& inst, const SearchOptions& options = {},
                        SearchStats* stats = nullptr);

}  // namespace dilaug
