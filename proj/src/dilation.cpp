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

#include "dilaug/dilation.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "dilaug/errors.hpp"

namespace dilaug {

namespace {

using AdjacencyList = std::vector<std::vector<Graph::Neighbor>>;

AdjacencyList build_adjacency(const Instance& inst, const Solution& s) {
  AdjacencyList adj(inst.n());
  for (Vertex v = 0; v < inst.n(); ++v) {
    const auto& nbs = inst.g().neighbors(v);
    adj[v].assign(nbs.begin(), nbs.end());
  }
  for (const Edge& e : s) {
    inst.gamma().check_vertex(e.u);
    inst.gamma().check_vertex(e.v);
    const Weight w = inst.metric(e.u, e.v);
    adj[e.u].push_back({e.v, w});
    adj[e.v].push_back({e.u, w});
  }
  return adj;
}

// Dijkstra from `source` that stops once every remaining vertex is farther
// than `limit`. Distances beyond the limit are reported infinite.
std::vector<Distance> bounded_dijkstra(const AdjacencyList& adj, Vertex source,
                                       std::int64_t limit) {
  std::vector<Distance> dist(adj.size());
  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = Distance(0);
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (Distance(d) > dist[x]) continue;
    for (const auto& nb : adj[x]) {
      const std::int64_t nd = d + nb.weight;
      if (nd > limit) continue;
      if (Distance(nd) < dist[nb.vertex]) {
        dist[nb.vertex] = Distance(nd);
        heap.push({nd, nb.vertex});
      }
    }
  }
  return dist;
}

// Visits the conflicting Gamma edges in lexicographic order; stops early when
// `visit` returns false.
template <typename Visit>
void for_each_conflict(const Instance& inst, const Solution& s, Visit visit) {
  const AdjacencyList adj = build_adjacency(inst, s);
  const Stretch& t = inst.t();
  for (Vertex u = 0; u < inst.n(); ++u) {
    std::int64_t limit = -1;
    for (const auto& nb : inst.gamma().neighbors(u)) {
      if (nb.vertex > u) {
        limit = std::max(limit, t.floor_times(inst.metric(u, nb.vertex)));
      }
    }
    if (limit < 0) continue;
    const auto dist = bounded_dijkstra(adj, u, limit);
#ifndef NDEBUG
    // Distances in G+S never undercut the metric.
    for (Vertex x = 0; x < inst.n(); ++x) {
      assert(!dist[x].finite() || dist[x].value() >= inst.metric(u, x));
    }
#endif
    for (const auto& nb : inst.gamma().neighbors(u)) {
      if (nb.vertex <= u) continue;
      if (!stretch_leq(dist[nb.vertex], inst.metric(u, nb.vertex), t)) {
        if (!visit(Edge{u, nb.vertex})) return;
      }
    }
  }
}

}  // namespace

Graph ConflictAnalysis::conflict_graph(int n) const {
  return Graph::unweighted(n, conflict_edges);
}

Graph augmented_graph(const Instance& inst, const Solution& s) {
  std::vector<WeightedEdge> edges = inst.g().edges();
  for (const Edge& e : s) {
    if (!inst.in_g(e)) edges.push_back({e, inst.metric(e.u, e.v)});
  }
  return Graph(inst.n(), edges);
}

ConflictAnalysis adjacent_conflicts(const Instance& inst, const Solution& s) {
  ConflictAnalysis out;
  std::vector<Vertex> vertices;
  for_each_conflict(inst, s, [&](const Edge& e) {
    out.conflict_edges.push_back(e);
    vertices.push_back(e.u);
    vertices.push_back(e.v);
    return true;
  });
  out.conflict_vertices = VertexSet(std::move(vertices));
  return out;
}

bool conflict_free(const Instance& inst, const Solution& s) {
  bool clean = true;
  for_each_conflict(inst, s, [&](const Edge&) {
    clean = false;
    return false;
  });
  return clean;
}

Dilation dilation(const Instance& inst, const Solution& s) {
  const Graph h = augmented_graph(inst, s);
  Stretch worst(1, 1);
  for (Vertex u = 0; u < inst.n(); ++u) {
    const auto dist = weighted_distances(h, u);
    for (Vertex v = u + 1; v < inst.n(); ++v) {
      if (!dist[v].finite()) return Dilation{};
      const Stretch ratio(dist[v].value(), inst.metric(u, v));
      if (ratio > worst) worst = ratio;
    }
  }
  return Dilation{worst};
}

std::string Verification::reason() const {
  switch (status) {
    case Status::valid:
      return "valid";
    case Status::budget_exceeded:
      return "budget-exceeded";
    case Status::overlaps_g:
      return "overlaps-G";
    case Status::conflict:
      return "conflict(" + std::to_string(culprit->u) + "," +
             std::to_string(culprit->v) + ")";
  }
  return "unknown";
}

Verification verify_solution(const Instance& inst, const Solution& s) {
  for (const Edge& e : s) {
    inst.gamma().check_vertex(e.u);
    inst.gamma().check_vertex(e.v);
  }
  if (s.size() > static_cast<std::size_t>(inst.k())) {
    return {Verification::Status::budget_exceeded, std::nullopt};
  }
  for (const Edge& e : s) {
    if (inst.in_g(e)) return {Verification::Status::overlaps_g, e};
  }
  std::optional<Edge> first;
  for_each_conflict(inst, s, [&](const Edge& e) {
    first = e;
    return false;
  });
  if (first) return {Verification::Status::conflict, first};
  return {};
}

}  // namespace dilaug
