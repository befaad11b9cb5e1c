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

#include "dilaug/reductions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dilaug/errors.hpp"

namespace dilaug {

namespace {

void require_kind(const SourceProblem& src, SourceProblem::Kind kind,
                  const char* what) {
  if (src.kind != kind) {
    throw UsageError(std::string(what) + " expects a different source kind");
  }
}

std::string index_label(const char* prefix, int i) {
  return std::string(prefix) + "[" + std::to_string(i) + "]";
}

std::string index_label(const char* prefix, int i, int j) {
  return index_label(prefix, i) + "[" + std::to_string(j) + "]";
}

std::vector<std::string> source_labels(int n) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels.push_back(index_label("v", v));
  return labels;
}

// Color of every source vertex; validates that the partition covers V(H)
// disjointly with exactly k classes.
std::vector<int> colors_of(const SourceProblem& src) {
  const int h = src.graph.size();
  if (static_cast<int>(src.partition.size()) != src.k) {
    throw UsageError("partition must have exactly k classes");
  }
  std::vector<int> color(static_cast<std::size_t>(h), -1);
  for (int i = 0; i < src.k; ++i) {
    for (Vertex v : src.partition[static_cast<std::size_t>(i)]) {
      if (v < 0 || v >= h) throw UsageError("partition vertex out of range");
      if (color[static_cast<std::size_t>(v)] != -1) {
        throw UsageError("partition classes overlap");
      }
      color[static_cast<std::size_t>(v)] = i;
    }
  }
  if (std::ranges::find(color, -1) != color.end()) {
    throw UsageError("partition does not cover every vertex");
  }
  return color;
}

std::vector<Edge> checked_pairs(const Graph& h, const Certificate& cert,
                                bool must_be_edges) {
  std::vector<Edge> out;
  for (const Edge& raw : cert.edges) {
    if (raw.u < 0 || raw.u >= h.size() || raw.v < 0 || raw.v >= h.size()) {
      throw UsageError("certificate edge out of range");
    }
    if (raw.u == raw.v) throw UsageError("certificate edge is a self-loop");
    const Edge e = make_edge(raw.u, raw.v);
    if (h.has_edge(e.u, e.v) != must_be_edges) {
      throw UsageError(must_be_edges ? "certificate pair is not a source edge"
                                     : "certificate pair is already an edge");
    }
    out.push_back(e);
  }
  std::ranges::sort(out);
  if (std::ranges::adjacent_find(out) != out.end()) {
    throw UsageError("certificate repeats an edge");
  }
  return out;
}

std::vector<Vertex> checked_vertices(int n, const Certificate& cert) {
  std::vector<Vertex> out = cert.vertices;
  for (Vertex v : out) {
    if (v < 0 || v >= n) throw UsageError("certificate vertex out of range");
  }
  std::ranges::sort(out);
  if (std::ranges::adjacent_find(out) != out.end()) {
    throw UsageError("certificate repeats a vertex");
  }
  return out;
}

std::int64_t checked_int64(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw UsageError("gadget weights overflow 64-bit integers");
  }
  return static_cast<std::int64_t>(value);
}

std::pair<std::int64_t, std::int64_t> checked_epsilon(
    const SourceProblem& src) {
  if (!src.epsilon) throw UsageError("weighted gadget needs epsilon");
  const auto [p, q] = *src.epsilon;
  if (p < 1 || q < 1 || p >= q) {
    throw UsageError("epsilon must lie strictly between 0 and 1");
  }
  return {p, q};
}

}  // namespace

Stretch diameter_gadget_weight(int n, std::int64_t eps_num,
                               std::int64_t eps_den) {
  if (n < 1) throw UsageError("weighted gadget needs n >= 1");
  return Stretch(checked_int64(static_cast<__int128>(3) * n * eps_den),
                 checked_int64(static_cast<__int128>(2) * eps_num));
}

GeneratedInstance gen_multicolored_clique(const SourceProblem& src) {
  require_kind(src, SourceProblem::Kind::multicolored_clique,
               "multicolored clique gadget");
  if (src.k < 2) throw UsageError("multicolored clique gadget needs k >= 2");
  const std::vector<int> color = colors_of(src);
  const Graph& h = src.graph;
  const CliqueGadgetLayout layout{h.size(), src.k};
  const int k = src.k;

  std::vector<std::string> warnings;
  std::vector<WeightedEdge> gamma;
  for (const WeightedEdge& we : h.edges()) {
    if (color[static_cast<std::size_t>(we.edge.u)] ==
        color[static_cast<std::size_t>(we.edge.v)]) {
      warnings.push_back("color class " +
                         std::to_string(color[static_cast<std::size_t>(
                             we.edge.u)]) +
                         " is not independent");
    }
    gamma.push_back({we.edge, 1});
  }
  for (Vertex v = 0; v < h.size(); ++v) {
    const int i = color[static_cast<std::size_t>(v)];
    for (int j = 0; j < layout.u_size(); ++j) {
      gamma.push_back({make_edge(v, layout.u(i, j)), 1});
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int i2 = i + 1; i2 < k; ++i2) {
      for (int a = 0; a < layout.u_size(); ++a) {
        for (int b = 0; b < layout.u_size(); ++b) {
          gamma.push_back({make_edge(layout.u(i, a), layout.u(i2, b)), 1});
        }
      }
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < layout.u_size(); ++a) {
      for (int b = 0; b < layout.w_size(); ++b) {
        gamma.push_back({make_edge(layout.u(i, a), layout.w(i, b)), 1});
      }
    }
  }
  std::vector<Edge> g;
  for (Vertex v = 0; v < h.size(); ++v) g.push_back({v, layout.hub()});
  for (int i = 0; i < k; ++i) {
    for (int b = 0; b < layout.w_size(); ++b) {
      g.push_back({layout.w(i, b), layout.hub()});
    }
  }
  for (const Edge& e : g) gamma.push_back({e, 1});
  std::ranges::sort(warnings);
  warnings.erase(std::ranges::unique(warnings).begin(), warnings.end());

  Graph gamma_graph(layout.vertex_count(), gamma);
  // The clique-to-cover paths have length 3 only if every Gamma edge does.
  if (!gamma_graph.is_unweighted()) {
    throw std::logic_error("clique gadget must be unweighted");
  }
  std::vector<std::string> labels = source_labels(h.size());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < layout.u_size(); ++j) {
      labels.push_back(index_label("u", i, j));
    }
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < layout.w_size(); ++j) {
      labels.push_back(index_label("w", i, j));
    }
  }
  labels.push_back("c");
  return {Instance(std::move(gamma_graph), std::move(g), layout.budget(),
                   Stretch(3, 1)),
          std::move(labels), std::move(warnings)};
}

GeneratedInstance gen_dominating_set_star(const SourceProblem& src) {
  require_kind(src, SourceProblem::Kind::dominating_set,
               "dominating set gadget");
  const int n = src.graph.size();
  std::vector<Edge> star;
  for (Vertex v = 0; v < n; ++v) star.push_back({v, n});
  std::vector<std::string> labels = source_labels(n);
  labels.push_back("c");
  return {Instance(Graph::unweighted(n + 1, star), src.graph.edge_list(),
                   src.k, Stretch(3, 1)),
          std::move(labels),
          {}};
}

GeneratedInstance gen_diameter2_weighted(const SourceProblem& src) {
  require_kind(src, SourceProblem::Kind::diameter2_augmentation,
               "weighted diameter gadget");
  const auto [p, q] = checked_epsilon(src);
  const int n = src.graph.size();
  const Stretch w = diameter_gadget_weight(n, p, q);
  // Scale by the denominator of w so both weights are integers.
  const Weight unit = w.den();
  const Weight heavy = w.num();

  std::set<Edge> column;
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row + 1 < n; ++row) {
      column.insert(make_edge(grid_vertex(n, row, col),
                              grid_vertex(n, row + 1, col)));
    }
    if (n >= 2) {
      column.insert(
          make_edge(grid_vertex(n, 0, col), grid_vertex(n, n - 1, col)));
    }
  }
  std::vector<WeightedEdge> gamma;
  for (const Edge& e : column) gamma.push_back({e, unit});
  const int total = n * n;
  for (Vertex a = 0; a < total; ++a) {
    for (Vertex b = a + 1; b < total; ++b) {
      if (a / n != b / n) gamma.push_back({{a, b}, heavy});
    }
  }
  std::vector<Edge> g(column.begin(), column.end());
  for (const WeightedEdge& we : src.graph.edges()) {
    g.push_back(make_edge(grid_vertex(n, we.edge.u, we.edge.v),
                          grid_vertex(n, we.edge.v, we.edge.u)));
  }
  std::vector<std::string> labels;
  labels.resize(static_cast<std::size_t>(total));
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      labels[static_cast<std::size_t>(grid_vertex(n, row, col))] =
          index_label("v", row, col);
    }
  }
  return {Instance(Graph(total, gamma), std::move(g), src.k,
                   Stretch(checked_int64(static_cast<__int128>(2) * q + p), q)),
          std::move(labels),
          {}};
}

GeneratedInstance gen_spanner_edgeless(const SourceProblem& src) {
  require_kind(src, SourceProblem::Kind::two_spanner, "spanner gadget");
  if (!src.graph.is_connected()) {
    throw UsageError("spanner gadget needs a connected source graph");
  }
  return {Instance(Graph::unweighted(src.graph.size(), src.graph.edge_list()),
                   {}, src.k, Stretch(2, 1)),
          source_labels(src.graph.size()),
          {}};
}

GeneratedInstance gen_diameter2_clique(const SourceProblem& src) {
  require_kind(src, SourceProblem::Kind::diameter2_augmentation,
               "clique diameter gadget");
  const int n = src.graph.size();
  std::vector<Edge> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) all.push_back({a, b});
  }
  return {Instance(Graph::unweighted(n, all), src.graph.edge_list(), src.k,
                   Stretch(2, 1)),
          source_labels(n),
          {}};
}

GeneratedInstance generate(Reduction reduction, const SourceProblem& src) {
  switch (reduction) {
    case Reduction::multicolored_clique:
      return gen_multicolored_clique(src);
    case Reduction::dominating_set_star:
      return gen_dominating_set_star(src);
    case Reduction::diameter2_weighted:
      return gen_diameter2_weighted(src);
    case Reduction::spanner_edgeless:
      return gen_spanner_edgeless(src);
    case Reduction::diameter2_clique:
      return gen_diameter2_clique(src);
  }
  throw UsageError("unknown reduction");
}

Solution lift_witness(Reduction reduction, const SourceProblem& src,
                      const Certificate& cert) {
  const Graph& h = src.graph;
  const int n = h.size();
  std::vector<Edge> out;
  switch (reduction) {
    case Reduction::multicolored_clique: {
      const std::vector<int> color = colors_of(src);
      const std::vector<Vertex> q = checked_vertices(n, cert);
      if (static_cast<int>(q.size()) != src.k || !cert.edges.empty()) {
        throw UsageError("clique certificate needs exactly k vertices");
      }
      std::vector<bool> seen(static_cast<std::size_t>(src.k), false);
      const CliqueGadgetLayout layout{n, src.k};
      for (Vertex v : q) {
        const int i = color[static_cast<std::size_t>(v)];
        if (seen[static_cast<std::size_t>(i)]) {
          throw UsageError("clique certificate repeats a color");
        }
        seen[static_cast<std::size_t>(i)] = true;
        for (int j = 0; j < layout.u_size(); ++j) {
          out.push_back(make_edge(v, layout.u(i, j)));
        }
      }
      for (std::size_t a = 0; a < q.size(); ++a) {
        for (std::size_t b = a + 1; b < q.size(); ++b) {
          out.push_back({q[a], q[b]});
        }
      }
      break;
    }
    case Reduction::dominating_set_star: {
      if (!cert.edges.empty()) {
        throw UsageError("dominating set certificate lists vertices only");
      }
      for (Vertex v : checked_vertices(n, cert)) out.push_back({v, n});
      break;
    }
    case Reduction::diameter2_weighted: {
      if (!cert.vertices.empty()) {
        throw UsageError("augmentation certificate lists edges only");
      }
      for (const Edge& e : checked_pairs(h, cert, false)) {
        out.push_back(make_edge(grid_vertex(n, e.u, e.v),
                                grid_vertex(n, e.v, e.u)));
      }
      break;
    }
    case Reduction::spanner_edgeless:
    case Reduction::diameter2_clique: {
      if (!cert.vertices.empty()) {
        throw UsageError("edge certificate lists edges only");
      }
      out = checked_pairs(h, cert,
                          reduction == Reduction::spanner_edgeless);
      break;
    }
  }
  return Solution(std::move(out));
}

}  // namespace dilaug
