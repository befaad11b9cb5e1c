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

#include "dilaug/random.hpp"

#include <algorithm>

#include "dilaug/errors.hpp"

namespace dilaug {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw UsageError("Rng::below needs a positive bound");
  // Rejection sampling keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw UsageError("Rng::between needs lo <= hi");
  return lo + static_cast<int>(
                  below(static_cast<std::uint64_t>(hi) - lo + 1));
}

bool Rng::chance(std::uint64_t num, std::uint64_t den) {
  return below(den) < num;
}

std::vector<Edge> random_tree_edges(Rng& rng, int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(std::max(n, 0)));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  rng.shuffle(order);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < order.size(); ++i) {
    edges.push_back(make_edge(order[i], order[rng.below(i)]));
  }
  std::ranges::sort(edges);
  return edges;
}

std::vector<Edge> random_forest_edges(Rng& rng, int n, std::uint64_t keep_num,
                                      std::uint64_t keep_den) {
  std::vector<Edge> edges;
  for (const Edge& e : random_tree_edges(rng, n)) {
    if (rng.chance(keep_num, keep_den)) edges.push_back(e);
  }
  return edges;
}

std::vector<Edge> random_connected_edges(Rng& rng, int n, std::uint64_t num,
                                         std::uint64_t den) {
  std::vector<Edge> tree = random_tree_edges(rng, n);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const Edge e{a, b};
      if (std::ranges::binary_search(tree, e) || rng.chance(num, den)) {
        edges.push_back(e);
      }
    }
  }
  return edges;
}

std::vector<Edge> random_edges(Rng& rng, int n, std::uint64_t num,
                               std::uint64_t den) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.chance(num, den)) edges.push_back({a, b});
    }
  }
  return edges;
}

Instance random_instance(Rng& rng, const RandomInstanceSpec& spec) {
  if (spec.min_n < 1 || spec.max_n < spec.min_n || spec.max_k < 0 ||
      spec.stretches.empty() || spec.max_weight < 1) {
    throw UsageError("invalid random instance spec");
  }
  const int n = rng.between(spec.min_n, spec.max_n);
  const std::vector<Edge> gamma_edges =
      spec.gamma == RandomInstanceSpec::GammaShape::tree
          ? random_tree_edges(rng, n)
          : random_connected_edges(rng, n, spec.density_num,
                                   spec.density_den);
  std::vector<WeightedEdge> gamma;
  for (const Edge& e : gamma_edges) {
    gamma.push_back(
        {e, static_cast<Weight>(
                1 + rng.below(static_cast<std::uint64_t>(spec.max_weight)))});
  }
  std::vector<Edge> g;
  switch (spec.g) {
    case RandomInstanceSpec::GShape::any:
      g = random_edges(rng, n, spec.density_num, spec.density_den);
      break;
    case RandomInstanceSpec::GShape::forest:
      g = random_forest_edges(rng, n, 1, 2);
      break;
    case RandomInstanceSpec::GShape::subgraph:
      for (const Edge& e : gamma_edges) {
        if (rng.chance(1, 2)) g.push_back(e);
      }
      break;
  }
  const int k = rng.between(0, spec.max_k);
  const Stretch t = rng.pick(spec.stretches);
  return Instance(Graph(n, gamma), std::move(g), k, t);
}

}  // namespace dilaug
