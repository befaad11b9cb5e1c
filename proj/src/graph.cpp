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

#include "dilaug/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>
#include <string>

#include "dilaug/errors.hpp"

namespace dilaug {

std::int64_t Distance::value() const {
  if (!finite_) throw UsageError("value() of an infinite distance");
  return value_;
}

std::ostream& operator<<(std::ostream& os, Distance d) {
  if (!d.finite()) return os << "inf";
  return os << d.value();
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '(' << e.u << ',' << e.v << ')';
}

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw UsageError("self-loop on vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet VertexSet::united(const VertexSet& other) const {
  std::vector<Vertex> out;
  out.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out));
  VertexSet result;
  result.ids_ = std::move(out);
  return result;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.ids_.size(); ++i) {
    if (i) os << ',';
    os << s.ids_[i];
  }
  return os << '}';
}

VertexSet Matching::endpoints() const {
  std::vector<Vertex> ids;
  ids.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  return VertexSet(std::move(ids));
}

Graph::Graph(int n, const std::vector<WeightedEdge>& edges) {
  if (n < 0) throw UsageError("negative vertex count");
  adjacency_.resize(n);
  edges_ = edges;
  for (WeightedEdge& we : edges_) {
    check_vertex(we.edge.u);
    check_vertex(we.edge.v);
    we.edge = make_edge(we.edge.u, we.edge.v);
    if (we.weight < 1) {
      throw UsageError("edge weight must be >= 1, got " +
                       std::to_string(we.weight));
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const WeightedEdge& a, const WeightedEdge& b) {
              return a.edge < b.edge;
            });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].edge == edges_[i - 1].edge) {
      throw UsageError("duplicate edge (" + std::to_string(edges_[i].edge.u) +
                       "," + std::to_string(edges_[i].edge.v) + ")");
    }
  }
  for (const WeightedEdge& we : edges_) {
    adjacency_[we.edge.u].push_back({we.edge.v, we.weight});
    adjacency_[we.edge.v].push_back({we.edge.u, we.weight});
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) {
                return a.vertex < b.vertex;
              });
  }
}

Graph Graph::unweighted(int n, const std::vector<Edge>& edges) {
  std::vector<WeightedEdge> weighted;
  weighted.reserve(edges.size());
  for (const Edge& e : edges) weighted.push_back({e, 1});
  return Graph(n, weighted);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const WeightedEdge& we : edges_) out.push_back(we.edge);
  return out;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= size()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(size()) + ")");
  }
}

const std::vector<Graph::Neighbor>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[v];
}

int Graph::degree(Vertex v) const {
  return static_cast<int>(neighbors(v).size());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

std::optional<Weight> Graph::weight(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& list = adjacency_[a];
  auto it = std::lower_bound(
      list.begin(), list.end(), b,
      [](const Neighbor& n, Vertex x) { return n.vertex < x; });
  if (it == list.end() || it->vertex != b) return std::nullopt;
  return it->weight;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return weight(a, b).has_value();
}

bool Graph::is_unweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const WeightedEdge& we) { return we.weight == 1; });
}

bool Graph::is_connected() const {
  if (size() <= 1) return true;
  const auto dist = hop_distances(*this, 0);
  return std::all_of(dist.begin(), dist.end(),
                     [](Distance d) { return d.finite(); });
}

bool Graph::is_tree() const {
  return size() >= 1 && edge_count() == static_cast<std::size_t>(size() - 1) &&
         is_connected();
}

bool Graph::is_forest() const {
  std::vector<int> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const WeightedEdge& we : edges_) {
    const int a = find(we.edge.u);
    const int b = find(we.edge.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::vector<Distance> hop_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.size());
  std::queue<Vertex> frontier;
  dist[source] = Distance(0);
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (const auto& nb : g.neighbors(x)) {
      if (!dist[nb.vertex].finite()) {
        dist[nb.vertex] = dist[x] + 1;
        frontier.push(nb.vertex);
      }
    }
  }
  return dist;
}

std::vector<Distance> weighted_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.size());
  using Item = std::pair<std::int64_t, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = Distance(0);
  heap.push({0, source});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (Distance(d) > dist[x]) continue;
    for (const auto& nb : g.neighbors(x)) {
      const Distance candidate(d + nb.weight);
      if (candidate < dist[nb.vertex]) {
        dist[nb.vertex] = candidate;
        heap.push({d + nb.weight, nb.vertex});
      }
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, const VertexSet& w, int radius) {
  if (radius < 0) throw UsageError("ball radius must be >= 0");
  std::vector<int> depth(g.size(), -1);
  std::queue<Vertex> frontier;
  for (Vertex v : w) {
    g.check_vertex(v);
    depth[v] = 0;
    frontier.push(v);
  }
  std::vector<Vertex> out(w.begin(), w.end());
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    if (depth[x] == radius) continue;
    for (const auto& nb : g.neighbors(x)) {
      if (depth[nb.vertex] < 0) {
        depth[nb.vertex] = depth[x] + 1;
        out.push_back(nb.vertex);
        frontier.push(nb.vertex);
      }
    }
  }
  return VertexSet(std::move(out));
}

Matching greedy_maximal_matching(const Graph& g) {
  Matching m;
  std::vector<char> used(g.size(), 0);
  for (const WeightedEdge& we : g.edges()) {
    if (!used[we.edge.u] && !used[we.edge.v]) {
      used[we.edge.u] = used[we.edge.v] = 1;
      m.edges.push_back(we.edge);
    }
  }
  return m;
}

}  // namespace dilaug
