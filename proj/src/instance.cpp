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

#include "dilaug/instance.hpp"

#include <algorithm>
#include <string>

#include "dilaug/errors.hpp"

namespace dilaug {

Solution::Solution(std::vector<Edge> edges) : edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u >= e.v) {
      throw UsageError("solution edge must satisfy u < v, got (" +
                       std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Solution::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Solution Solution::united(const Solution& other) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), other.edges_.begin(), other.edges_.end());
  return Solution(std::move(all));
}

Solution Solution::without(const Edge& e) const {
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  for (const Edge& x : edges_) {
    if (x != e) rest.push_back(x);
  }
  return Solution(std::move(rest));
}

VertexSet Solution::endpoints() const {
  std::vector<Vertex> ids;
  for (const Edge& e : edges_) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  return VertexSet(std::move(ids));
}

const Solution& Verdict::solution() const {
  if (!solution_) throw UsageError("solution() of a NO verdict");
  return *solution_;
}

Instance::Instance(Graph gamma, std::vector<Edge> g_edges, int k, Stretch t)
    : k_(k), t_(t) {
  if (k < 0) throw UsageError("budget k must be >= 0");
  if (t < Stretch(1, 1)) throw UsageError("stretch t must be >= 1");
  if (!gamma.is_connected()) {
    throw MetricError("metric undefined: gamma is disconnected");
  }
  const int n = gamma.size();
  for (Edge& e : g_edges) {
    gamma.check_vertex(e.u);
    gamma.check_vertex(e.v);
    if (e.u == e.v) {
      throw ParseError(0, "self-loop in G on vertex " + std::to_string(e.u));
    }
    e = make_edge(e.u, e.v);
  }
  std::sort(g_edges.begin(), g_edges.end());
  for (std::size_t i = 1; i < g_edges.size(); ++i) {
    if (g_edges[i] == g_edges[i - 1]) {
      throw ParseError(0, "duplicate G edge (" + std::to_string(g_edges[i].u) +
                              "," + std::to_string(g_edges[i].v) + ")");
    }
  }

  auto metric = std::make_shared<std::vector<Weight>>(
      static_cast<std::size_t>(n) * n, 0);
  for (Vertex s = 0; s < n; ++s) {
    const auto dist = weighted_distances(gamma, s);
    for (Vertex x = 0; x < n; ++x) {
      (*metric)[static_cast<std::size_t>(s) * n + x] = dist[x].value();
    }
  }
  std::vector<WeightedEdge> embedded;
  embedded.reserve(g_edges.size());
  for (const Edge& e : g_edges) {
    embedded.push_back({e, (*metric)[static_cast<std::size_t>(e.u) * n + e.v]});
  }
  for (const WeightedEdge& we : gamma.edges()) {
    max_gamma_weight_ = std::max(max_gamma_weight_, we.weight);
  }
  g_ = std::make_shared<const Graph>(n, embedded);
  gamma_ = std::make_shared<const Graph>(std::move(gamma));
  metric_ = std::move(metric);
  g_edges_ = std::move(g_edges);
}

bool Instance::in_g(const Edge& e) const {
  return std::binary_search(g_edges_.begin(), g_edges_.end(), e);
}

Instance Instance::with_budget(int k) const {
  if (k < 0) throw UsageError("budget k must be >= 0");
  Instance copy = *this;
  copy.k_ = k;
  return copy;
}

Instance Instance::with_stretch(const Stretch& t) const {
  if (t < Stretch(1, 1)) throw UsageError("stretch t must be >= 1");
  Instance copy = *this;
  copy.t_ = t;
  return copy;
}

std::vector<Edge> Instance::non_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v = u + 1; v < n(); ++v) {
      if (!g_->has_edge(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace dilaug
