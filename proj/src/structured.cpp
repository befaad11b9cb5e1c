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

#include "dilaug/structured.hpp"

#include <algorithm>
#include <limits>

#include "dilaug/errors.hpp"

namespace dilaug {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

// Adjacent conflicts join Gamma neighbours at distance at most L, the largest
// Gamma weight, so every path that resolves one has weight at most t * L; hop
// counts never exceed weights.
std::int64_t path_budget(const Instance& inst) {
  return inst.t().floor_times(std::max<Weight>(inst.max_gamma_weight(), 1));
}

RegionPlan plan(const Instance& inst, const Graph& host,
                std::int64_t region_radius) {
  RegionPlan p;
  p.conflicts = adjacent_conflicts(inst, Solution());
  p.max_degree = host.max_degree();
  p.cover_radius = path_budget(inst);
  p.region_radius = region_radius;
  const std::uint64_t endpoints =
      std::min<std::uint64_t>(2ULL * static_cast<std::uint64_t>(inst.k()),
                              static_cast<std::uint64_t>(inst.n()));
  p.conflict_bound = ball_size_bound(endpoints, p.max_degree, p.cover_radius);
  if (p.conflicts.empty()) return p;
  if (p.conflicts.conflict_vertices.size() > p.conflict_bound) {
    p.rejected = true;
    return p;
  }
  const int radius = static_cast<int>(
      std::min<std::int64_t>(region_radius, std::max(inst.n() - 1, 0)));
  p.region.vertices = ball(host, p.conflicts.conflict_vertices, radius);
  return p;
}

Verdict enumerate_region(const Instance& inst, const RegionPlan& p,
                         const SearchOptions& options, SearchStats* stats) {
  if (p.conflicts.empty()) return Verdict::yes(Solution());
  if (p.rejected || inst.k() == 0) return Verdict::no();
  std::vector<Edge> pool;
  const auto& q = p.region.vertices.ids();
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (!inst.g().has_edge(q[i], q[j])) pool.push_back({q[i], q[j]});
    }
  }
  auto found = first_accepted_subset(
      pool, inst.k(),
      [&](const std::vector<Edge>& subset) {
        return conflict_free(inst, Solution(subset));
      },
      options, stats);
  if (!found) return Verdict::no();
  return Verdict::yes(Solution(std::move(*found)));
}

}  // namespace

std::uint64_t ball_size_bound(std::uint64_t centers, int degree,
                              std::int64_t radius) {
  if (degree == 0 || radius == 0) return centers;
  if (degree == 1) {
    return saturating_mul(centers, static_cast<std::uint64_t>(radius) + 1);
  }
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (std::int64_t i = 0; i <= radius && sum != kSaturated; ++i) {
    sum = saturating_add(sum, power);
    power = saturating_mul(power, static_cast<std::uint64_t>(degree));
  }
  return saturating_mul(centers, sum);
}

RegionPlan plan_bounded_gamma(const Instance& inst) {
  return plan(inst, inst.gamma(), path_budget(inst));
}

RegionPlan plan_bounded_g(const Instance& inst) {
  // A Gamma shortest path of at most floor(tL) hops from a conflict vertex to
  // an endpoint, each step replaced by a G path of at most floor(tL) hops.
  // The total G weight is also at most t * t * L.
  const std::int64_t per_step = path_budget(inst);
  const std::int64_t squared = per_step * per_step;
  const std::int64_t by_weight = (inst.t() * inst.t())
                                     .floor_times(std::max<Weight>(
                                         inst.max_gamma_weight(), 1));
  return plan(inst, inst.g(), std::min(squared, by_weight));
}

Verdict solve_tree_gamma(const Instance& inst) {
  if (!inst.gamma().is_tree()) {
    throw InapplicableError("tree engine needs Gamma to be a tree");
  }
  if (!inst.gamma().is_unweighted()) {
    throw InapplicableError("tree engine needs an unweighted Gamma");
  }
  if (!(inst.t() < Stretch(3, 1))) {
    throw InapplicableError("tree engine needs t < 3");
  }
  std::vector<Edge> missing;
  for (const WeightedEdge& we : inst.gamma().edges()) {
    if (!inst.in_g(we.edge)) missing.push_back(we.edge);
  }
  if (missing.size() > static_cast<std::size_t>(inst.k())) {
    return Verdict::no();
  }
  return Verdict::yes(Solution(std::move(missing)));
}

Verdict solve_bounded_gamma(const Instance& inst, const SearchOptions& options,
                            SearchStats* stats) {
  return enumerate_region(inst, plan_bounded_gamma(inst), options, stats);
}

Verdict solve_bounded_g(const Instance& inst, const SearchOptions& options,
                        SearchStats* stats) {
  return enumerate_region(inst, plan_bounded_g(inst), options, stats);
}

}  // namespace dilaug
