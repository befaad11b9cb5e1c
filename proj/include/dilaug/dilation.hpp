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

#include <optional>
#include <string>
#include <vector>

#include "dilaug/graph.hpp"
#include "dilaug/instance.hpp"
#include "dilaug/stretch.hpp"

namespace dilaug {

// Adjacent conflicts of G+S: Gamma edges (u, v) with
// d_{G+S}(u, v) > t * d_Gamma(u, v).
struct ConflictAnalysis {
  // Sorted; every entry is an edge of Gamma.
  std::vector<Edge> conflict_edges;
  // Vertices of positive degree in the conflict graph (V_c).
  VertexSet conflict_vertices;

  bool empty() const { return conflict_edges.empty(); }
  // The conflict graph C on all n vertices.
  Graph conflict_graph(int n) const;
};

// G+S as an adjacency list, every edge weighted by the metric.
Graph augmented_graph(const Instance& inst, const Solution& s);

ConflictAnalysis adjacent_conflicts(const Instance& inst, const Solution& s);

// Same predicate as adjacent_conflicts(...).empty(), stopping at the first
// conflict found.
bool conflict_free(const Instance& inst, const Solution& s);

// max over u != v of d_{G+S}(u, v) / d_Gamma(u, v).
Dilation dilation(const Instance& inst, const Solution& s);

struct Verification {
  enum class Status { valid, budget_exceeded, overlaps_g, conflict };

  Status status = Status::valid;
  // Smallest conflicting Gamma edge when status == conflict; overlapped G
  // edge when status == overlaps_g.
  std::optional<Edge> culprit;

  bool valid() const { return status == Status::valid; }
  // "budget-exceeded", "overlaps-G" or "conflict(u,v)" with 0-based ids.
  std::string reason() const;
};

// Checks |s| <= k, s disjoint from G and that G+S has no adjacent conflict,
// which certifies dilation <= t over all pairs.
Verification verify_solution(const Instance& inst, const Solution& s);

}  // namespace dilaug
