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

#include <memory>
#include <optional>
#include <vector>

#include "dilaug/graph.hpp"
#include "dilaug/stretch.hpp"

namespace dilaug {

// A set of vertex pairs to add to G, kept sorted and duplicate-free.
class Solution {
 public:
  Solution() = default;
  explicit Solution(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const;
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  Solution united(const Solution& other) const;
  Solution without(const Edge& e) const;
  // Endpoints of all edges (V_S).
  VertexSet endpoints() const;

  friend bool operator==(const Solution&, const Solution&) = default;

 private:
  std::vector<Edge> edges_;
};

// Answer of a decision engine.
class Verdict {
 public:
  static Verdict yes(Solution s) { return Verdict(std::move(s)); }
  static Verdict no() { return Verdict(); }

  bool is_yes() const { return solution_.has_value(); }
  // Precondition: is_yes().
  const Solution& solution() const;

 private:
  Verdict() = default;
  explicit Verdict(Solution s) : solution_(std::move(s)) {}

  std::optional<Solution> solution_;
};

// (G, Gamma, k, t) with G embedded in the shortest-path metric of Gamma:
// every G edge (u, v) and every added pair gets weight d_Gamma(u, v).
class Instance {
 public:
  // Throws MetricError if gamma is disconnected, ParseError on a self-loop or
  // duplicate among g_edges, UsageError on out-of-range ids, k < 0 or t < 1.
  Instance(Graph gamma, std::vector<Edge> g_edges, int k, Stretch t);

  int n() const { return gamma_->size(); }
  int k() const { return k_; }
  const Stretch& t() const { return t_; }
  const Graph& gamma() const { return *gamma_; }
  // G with embedded weights.
  const Graph& g() const { return *g_; }
  // Sorted.
  const std::vector<Edge>& g_edges() const { return g_edges_; }
  bool in_g(const Edge& e) const;

  // d_Gamma(u, v); always finite.
  Weight metric(Vertex u, Vertex v) const {
    return (*metric_)[static_cast<std::size_t>(u) * n() + v];
  }
  // Largest Gamma edge weight (1 for an unweighted Gamma, 0 if edgeless).
  Weight max_gamma_weight() const { return max_gamma_weight_; }

  // Same graphs and metric with a different budget or stretch.
  Instance with_budget(int k) const;
  Instance with_stretch(const Stretch& t) const;

  // Non-edges of G in lexicographic order.
  std::vector<Edge> non_edges() const;

 private:
  Instance() = default;

  std::shared_ptr<const Graph> gamma_;
  std::shared_ptr<const Graph> g_;
  std::shared_ptr<const std::vector<Weight>> metric_;
  std::vector<Edge> g_edges_;
  Weight max_gamma_weight_ = 0;
  int k_ = 0;
  Stretch t_;
};

}  // namespace dilaug
