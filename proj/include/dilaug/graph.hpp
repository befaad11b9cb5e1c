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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace dilaug {

using Vertex = int;
using Weight = std::int64_t;

// Shortest-path length, or the explicit "unreachable" value. Infinite
// compares greater than every finite distance; adding to it stays infinite.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::int64_t value) : value_(value), finite_(true) {}

  static constexpr Distance infinite() { return Distance(); }

  constexpr bool finite() const { return finite_; }
  // Precondition: finite().
  std::int64_t value() const;

  friend Distance operator+(Distance a, std::int64_t delta) {
    return a.finite_ ? Distance(a.value_ + delta) : a;
  }
  friend constexpr bool operator==(Distance a, Distance b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, Distance d);

 private:
  std::int64_t value_ = 0;
  bool finite_ = false;
};

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Edge& e);
};

// Normalizes (a, b) and (b, a) to the same Edge. Throws UsageError on a == b.
Edge make_edge(Vertex a, Vertex b);

struct WeightedEdge {
  Edge edge;
  Weight weight = 1;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  bool contains(Vertex v) const;
  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  VertexSet united(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s);

 private:
  std::vector<Vertex> ids_;
};

// Pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const { return edges.size(); }
  VertexSet endpoints() const;
};

// Immutable undirected simple graph on vertices 0..n-1 with positive integer
// edge weights (1 unless given).
class Graph {
 public:
  struct Neighbor {
    Vertex vertex;
    Weight weight;
  };

  Graph() = default;
  // Throws UsageError on self-loops, duplicate edges, out-of-range ids or
  // weights < 1.
  Graph(int n, const std::vector<WeightedEdge>& edges);
  static Graph unweighted(int n, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted lexicographically.
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::vector<Edge> edge_list() const;
  // Sorted by neighbor id.
  const std::vector<Neighbor>& neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<Weight> weight(Vertex a, Vertex b) const;
  bool is_unweighted() const;

  bool is_connected() const;
  bool is_tree() const;
  bool is_forest() const;

  void check_vertex(Vertex v) const;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<WeightedEdge> edges_;
};

// Breadth-first hop counts from `source`, ignoring weights.
std::vector<Distance> hop_distances(const Graph& g, Vertex source);

// Dijkstra distances from `source` under edge weights.
std::vector<Distance> weighted_distances(const Graph& g, Vertex source);

// Vertices within `radius` hops of some vertex of `w`, including `w`.
VertexSet ball(const Graph& g, const VertexSet& w, int radius);

// Maximal matching built by scanning edges in lexicographic order.
Matching greedy_maximal_matching(const Graph& g);

}  // namespace dilaug
