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

// An instance of a source problem feeding one of the gadget generators.
struct SourceProblem {
  enum class Kind {
    multicolored_clique,
    dominating_set,
    diameter2_augmentation,
    two_spanner,
  };

  Kind kind = Kind::dominating_set;
  Graph graph;
  int k = 0;
  // Color classes V_1..V_k; multicolored clique only.
  std::vector<VertexSet> partition;
  // epsilon in (0, 1) as num/den; weighted diameter gadget only.
  std::optional<std::pair<std::int64_t, std::int64_t>> epsilon;
};

enum class Reduction {
  // t = 3, G a star plus isolated vertices.
  multicolored_clique,
  // t = 3, Gamma a star.
  dominating_set_star,
  // t = 2 + epsilon, Gamma (1, w)-weighted, G subcubic.
  diameter2_weighted,
  // t = 2, G edgeless.
  spanner_edgeless,
  // t = 2, Gamma complete.
  diameter2_clique,
};

struct GeneratedInstance {
  Instance instance;
  // Symbolic name per vertex, e.g. "c", "u[1][3]", "v[2][0]".
  std::vector<std::string> labels;
  // Source assumptions found violated (e.g. a color class with an inner
  // edge); generation still succeeds.
  std::vector<std::string> warnings;
};

// Certificate of the source problem: chosen vertices (clique, dominating set)
// or chosen edges (augmentation set, spanner).
struct Certificate {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

// Layout of the multicolored-clique gadget for k colors over h source
// vertices: source vertices keep ids 0..h-1, then U_1..U_k (k^2 each), then
// W_1..W_k (3k^3 each), then the hub c.
struct CliqueGadgetLayout {
  int h = 0;
  int k = 0;

  int u_size() const { return k * k; }
  int w_size() const { return 3 * k * k * k; }
  Vertex u(int color, int index) const { return h + color * u_size() + index; }
  Vertex w(int color, int index) const {
    return h + k * u_size() + color * w_size() + index;
  }
  Vertex hub() const { return h + k * u_size() + k * w_size(); }
  int vertex_count() const { return hub() + 1; }
  int budget() const { return k * (k - 1) / 2 + k * k * k; }
};

// Vertex v_row^column of the weighted diameter gadget over n source vertices.
inline Vertex grid_vertex(int n, int row, int column) {
  return column * n + row;
}

GeneratedInstance gen_multicolored_clique(const SourceProblem& src);
GeneratedInstance gen_dominating_set_star(const SourceProblem& src);
GeneratedInstance gen_diameter2_weighted(const SourceProblem& src);
GeneratedInstance gen_spanner_edgeless(const SourceProblem& src);
GeneratedInstance gen_diameter2_clique(const SourceProblem& src);

GeneratedInstance generate(Reduction reduction, const SourceProblem& src);

// The weight w = 3n / (2 epsilon) of cross-column Gamma edges, reduced.
Stretch diameter_gadget_weight(int n, std::int64_t eps_num,
                               std::int64_t eps_den);

// Maps a source certificate to a set of edges for the generated instance.
// Throws UsageError on a malformed certificate (wrong shape, ids out of
// range, repeated colors, pairs that are not edges/non-edges as required).
Solution lift_witness(Reduction reduction, const SourceProblem& src,
                      const Certificate& cert);

}  // namespace dilaug
