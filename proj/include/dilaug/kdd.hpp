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
#include <optional>
#include <vector>

#include "dilaug/dilation.hpp"
#include "dilaug/instance.hpp"
#include "dilaug/search.hpp"

namespace dilaug {

// Degree thresholds of the blocking-set search for G excluding K_{d,d}:
//   f(d)   = d
//   f(d-1) = d*k + k^2 + k
//   f(i)   = d*k^(d-i) + k^(d-i+1) + 2*(k^2 + ... + k^(d-i)) + k, i <= d-2
// They satisfy f(i-1) = (f(i) + k)*k + k. Requires k >= 1, d >= 1 and
// 0 <= i <= d; throws UsageError otherwise or on overflow.
std::int64_t f_value(int i, int k, int d);

// An intermediate instance of the dilation-2 search: G grown by the edges
// committed so far, the remaining budget, and a vertex cover R of the
// conflict graph. Solutions may not join two vertices of R.
class AnnotatedInstance {
 public:
  // `base` must outlive this object.
  AnnotatedInstance(const Instance& base, Solution committed, int k,
                    VertexSet cover);

  const Instance& base() const { return *base_; }
  const Solution& committed() const { return committed_; }
  int k() const { return k_; }
  const VertexSet& cover() const { return cover_; }
  // V \ R.
  VertexSet outside_cover() const;

  // Adjacency in G + committed.
  bool adjacent(Vertex a, Vertex b) const;
  // Conflicts of G + committed.
  ConflictAnalysis conflicts() const;

 private:
  const Instance* base_;
  Solution committed_;
  int k_;
  VertexSet cover_;
};

struct BlockingSet {
  Vertex center = 0;
  // w_1..w_delta in selection order; delta < d.
  std::vector<Vertex> witnesses;
};

// For v in R with more than f(0) conflict neighbours U outside R: greedily
// picks w_i outside R maximizing |U_{i-1} & N_G(w_i)| (smallest id on ties)
// while that count exceeds f(i). Returns nullopt when even w_1 has at most
// f(1) neighbours in U, meaning this instance is NO. Throws
// ContractViolation if d witnesses are found (G contains K_{d,d}).
std::optional<BlockingSet> find_blocking_set(const AnnotatedInstance& ann,
                                             Vertex v, int d);

// Children guessing which witnesses W' get an edge to the center and which
// non-edges E_x between W' and (W' u R) \ {center} are also in the solution.
// Ordered by |W'|, then W', then |E_x|, then E_x. Witnesses already adjacent
// to the center cannot be part of W'.
std::vector<AnnotatedInstance> branch_blocking(const AnnotatedInstance& ann,
                                               const BlockingSet& bs);

// Footprint of a conflict-free vertex on V_c: `a` holds its G neighbours at
// metric distance 1, `b` its Gamma neighbours that are not G neighbours.
// `in_cover` records membership in R so that relocating a solution endpoint
// onto the class representative keeps the R constraint.
struct TwinSignature {
  VertexSet a;
  VertexSet b;
  bool in_cover = false;

  friend auto operator<=>(const TwinSignature&, const TwinSignature&) = default;
};

struct TwinClass {
  TwinSignature signature;
  VertexSet members;
  // Smallest member.
  Vertex representative = 0;
};

struct TwinReduction {
  VertexSet conflict_vertices;
  // Sorted by signature.
  std::vector<TwinClass> classes;
  // V_c plus one representative per class.
  VertexSet candidates;
  // Conflict-free vertices that are not representatives.
  VertexSet removed;
};

TwinReduction twin_reduce(const AnnotatedInstance& ann);

enum class TwinMode {
  // Enumerate only over V_c and class representatives, judged by the full
  // metric.
  restrict_endpoints,
  // Delete non-representatives from G and Gamma and solve the smaller
  // instance under its own metric. Experimental: the metric of the survivors
  // may change.
  delete_vertices,
  // No twin reduction; enumerate over all vertices.
  off,
};

struct KddOptions {
  int d = 2;
  TwinMode twin_mode = TwinMode::restrict_endpoints;
  SearchOptions search;
};

struct KddStats {
  std::uint64_t nodes = 0;
  std::uint64_t blocking_sets = 0;
  std::uint64_t rule2_rejections = 0;
  std::uint64_t children = 0;
  std::uint64_t final_searches = 0;
  std::uint64_t removed_twins = 0;
  std::size_t max_cover = 0;
  // Nodes where |R| exceeded 5 * (original k).
  std::uint64_t cover_violations = 0;
  // Children of a blocking-set branch whose budget did not drop.
  std::uint64_t budget_violations = 0;
  // YES answers of the delete_vertices mode that fail on the full metric.
  std::uint64_t unverified_answers = 0;
};

// Dilation 2-Augmentation for G excluding K_{d,d} (caller's contract, not
// checked). Throws InapplicableError unless t == 2 and Gamma is unweighted.
Verdict solve_kdd(const Instance& inst, const KddOptions& options = {},
                  KddStats* stats = nullptr);

}  // namespace dilaug
