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

// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dilaug/cli.hpp"
#include "dilaug/dilation.hpp"
#include "dilaug/errors.hpp"
#include "dilaug/io.hpp"
#include "dilaug/kdd.hpp"
#include "dilaug/oracle.hpp"
#include "dilaug/random.hpp"
#include "dilaug/reductions.hpp"
#include "dilaug/structured.hpp"
#include "test_support.hpp"

namespace dilaug {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Tally {
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
  }
};

int failed_criteria = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed_criteria;
}

std::string summary(const Tally& t, double secs) {
  std::ostringstream os;
  os << t.cases << " checks, " << t.failures << " failures, " << secs << " s";
  if (t.failures > 0) os << " (first: " << t.first_failure << ")";
  return os.str();
}

// Random subset of at most `max_size` non-edges of G.
std::vector<Edge> random_extra(Rng& rng, const Instance& inst, int max_size) {
  std::vector<Edge> pool = inst.non_edges();
  rng.shuffle(pool);
  const int size =
      std::min(rng.between(0, max_size), static_cast<int>(pool.size()));
  return {pool.begin(), pool.begin() + size};
}

// --- 1 ---------------------------------------------------------------------

void adjacent_conflict_equivalence() {
  const auto start = Clock::now();
  Rng rng(1001);
  Tally tally;
  for (int i = 0; i < 2000; ++i) {
    RandomInstanceSpec spec;
    spec.max_weight = i % 2 == 0 ? 1 : 3;
    spec.g = static_cast<RandomInstanceSpec::GShape>(i % 3);
    const Instance inst = random_instance(rng, spec);
    const auto extra = random_extra(rng, inst, 2);
    const auto metric = testing::gamma_metric(inst);
    const bool want = testing::all_pairs_within(inst, metric, extra);
    tally.check(adjacent_conflicts(inst, Solution(extra)).empty() == want,
                "instance " + std::to_string(i));
  }
  const double secs = seconds_since(start);
  report(1, "adjacent-conflict equivalence",
         tally.failures == 0 && tally.cases >= 1000 && secs < 60,
         summary(tally, secs));
}

// --- 2 and 5 ---------------------------------------------------------------

bool within(const testing::Matrix& hops, const VertexSet& members,
            const VertexSet& centers, std::int64_t radius) {
  for (Vertex v : members) {
    bool near = false;
    for (Vertex c : centers) near = near || hops[c][v] <= radius;
    if (!near) return false;
  }
  return true;
}

std::vector<Instance> oracle_corpus;

void oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(2002);
  Tally gamma_tally;
  Tally g_tally;
  Tally tree_tally;
  for (int i = 0; i < 600; ++i) {
    RandomInstanceSpec spec;
    spec.g = static_cast<RandomInstanceSpec::GShape>(i % 3);
    const Instance inst = random_instance(rng, spec);
    oracle_corpus.push_back(inst);
    const bool want = solve_min(inst).is_yes();
    const std::string id = "instance " + std::to_string(i);
    const Verdict a = solve_bounded_gamma(inst);
    gamma_tally.check(
        a.is_yes() == want &&
            (!a.is_yes() || verify_solution(inst, a.solution()).valid()),
        id);
    const Verdict b = solve_bounded_g(inst);
    g_tally.check(
        b.is_yes() == want &&
            (!b.is_yes() || verify_solution(inst, b.solution()).valid()),
        id);
  }
  for (int i = 0; i < 600; ++i) {
    RandomInstanceSpec spec;
    spec.gamma = RandomInstanceSpec::GammaShape::tree;
    spec.g = static_cast<RandomInstanceSpec::GShape>(i % 3);
    spec.stretches = {Stretch(1, 1), Stretch(3, 2), Stretch(2, 1),
                      Stretch(5, 2)};
    const Instance inst = random_instance(rng, spec);
    const Verdict v = solve_tree_gamma(inst);
    tree_tally.check(
        v.is_yes() == solve_min(inst).is_yes() &&
            (!v.is_yes() || verify_solution(inst, v.solution()).valid()),
        "tree instance " + std::to_string(i));
  }
  const double secs = seconds_since(start);
  const bool ok = gamma_tally.failures == 0 && g_tally.failures == 0 &&
                  tree_tally.failures == 0 && gamma_tally.cases >= 500 &&
                  g_tally.cases >= 500 && tree_tally.cases >= 500;
  report(2, "oracle equivalence", ok,
         "bounded-gamma " + summary(gamma_tally, secs) + "; bounded-g " +
             summary(g_tally, secs) + "; tree " + summary(tree_tally, secs));
}

void locality() {
  const auto start = Clock::now();
  Tally tally;
  for (std::size_t i = 0; i < oracle_corpus.size(); ++i) {
    const Instance& inst = oracle_corpus[i];
    const Verdict v = solve_min(inst);
    if (!v.is_yes()) continue;
    const VertexSet vc = adjacent_conflicts(inst, Solution()).conflict_vertices;
    const VertexSet vs = v.solution().endpoints();
    const std::int64_t r = inst.t().floor();
    const auto gamma_hops =
        testing::hop_metric(inst.n(), inst.gamma().edge_list());
    const auto g_hops = testing::hop_metric(inst.n(), inst.g_edges());
    const std::string id = "instance " + std::to_string(i);
    tally.check(within(gamma_hops, vs, vc, r), id + " solution near conflicts");
    tally.check(within(gamma_hops, vc, vs, r), id + " conflicts near solution");
    tally.check(within(g_hops, vs, vc, r * r), id + " G-hop radius");
  }
  const double secs = seconds_since(start);
  report(5, "minimal-solution locality", tally.failures == 0 && tally.cases > 0,
         summary(tally, secs));
}

// --- 3 ---------------------------------------------------------------------

// Gamma connected, G a random spanning forest of some Gamma edges.
Instance forest_in_gamma(Rng& rng) {
  const int n = rng.between(2, 8);
  const auto gamma = random_connected_edges(rng, n, 1, 3);
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<Edge> order = gamma;
  rng.shuffle(order);
  std::vector<Edge> g;
  for (const Edge& e : order) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b || !rng.chance(3, 4)) continue;
    parent[a] = b;
    g.push_back(e);
  }
  return Instance(Graph::unweighted(n, gamma), g, rng.between(0, 2),
                  Stretch(2, 1));
}

void kdd_pipeline() {
  const auto start = Clock::now();
  Rng rng(3003);
  Tally tally;
  Tally stats_tally;
  int yes = 0;
  std::uint64_t nodes = 0;
  for (int i = 0; i < 400; ++i) {
    RandomInstanceSpec spec;
    spec.g = RandomInstanceSpec::GShape::forest;
    spec.stretches = {Stretch(2, 1)};
    const Instance inst =
        i % 2 == 0 ? forest_in_gamma(rng) : random_instance(rng, spec);
    const std::string id = "instance " + std::to_string(i);
    KddStats stats;
    const Verdict got = solve_kdd(inst, {}, &stats);
    const bool want = solve_min(inst).is_yes();
    yes += want ? 1 : 0;
    nodes += stats.nodes;
    tally.check(got.is_yes() == want &&
                    (!got.is_yes() ||
                     verify_solution(inst, got.solution()).valid()),
                id);
    stats_tally.check(stats.cover_violations == 0, id + " cover size");
    stats_tally.check(stats.budget_violations == 0, id + " budget decrease");
  }
  const double secs = seconds_since(start);
  report(3, "kdd pipeline",
         tally.failures == 0 && stats_tally.failures == 0 && tally.cases >= 300,
         summary(tally, secs) + "; " + std::to_string(yes) + " yes; " +
             std::to_string(nodes) + " branch nodes; instrumented " +
             std::to_string(stats_tally.failures) + " violations");
}

// --- 4 ---------------------------------------------------------------------

std::int64_t f_recurrence(int i, int k, int d) {
  std::int64_t f = d;
  for (int j = d; j > i; --j) f = (f + k) * k + k;
  return f;
}

void f_values() {
  Tally tally;
  for (int d = 1; d <= 6; ++d) {
    for (int k = 1; k <= 6; ++k) {
      for (int i = 0; i <= d; ++i) {
        tally.check(f_value(i, k, d) == f_recurrence(i, k, d),
                    "d=" + std::to_string(d) + " k=" + std::to_string(k) +
                        " i=" + std::to_string(i));
      }
    }
  }
  const std::vector<std::int64_t> a = {f_value(2, 1, 2), f_value(1, 1, 2),
                                       f_value(0, 1, 2)};
  tally.check(a == std::vector<std::int64_t>{2, 4, 6}, "spot d=2 k=1");
  const std::vector<std::int64_t> b = {f_value(3, 2, 3), f_value(2, 2, 3),
                                       f_value(1, 2, 3), f_value(0, 2, 3)};
  tally.check(b == std::vector<std::int64_t>{3, 12, 30, 66}, "spot d=3 k=2");
  report(4, "f recurrence", tally.failures == 0, summary(tally, 0));
}

// --- 6 ---------------------------------------------------------------------

SourceProblem make_source(SourceProblem::Kind kind, Graph h, int k) {
  SourceProblem src;
  src.kind = kind;
  src.graph = std::move(h);
  src.k = k;
  return src;
}

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

void check_lift(Tally& tally, Reduction r, const SourceProblem& src,
                const GeneratedInstance& gen, const Certificate& cert,
                const std::string& id) {
  const Solution s = lift_witness(r, src, cert);
  const Verification v = verify_solution(gen.instance, s);
  tally.check(v.valid(), id + " lifted witness " + v.reason());
}

void clique_generator(Tally& counts, Tally& lifts, Rng& rng) {
  for (int k = 2; k <= 3; ++k) {
    for (int rep = 0; rep < 3; ++rep) {
      const int per = rng.between(1, 3);
      const int n = per * k;
      std::vector<Edge> edges;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          if (a % k != b % k && (b < k || rng.chance(1, 2))) {
            edges.push_back({a, b});
          }
        }
      }
      SourceProblem src = make_source(SourceProblem::Kind::multicolored_clique,
                                      Graph::unweighted(n, edges), k);
      src.partition.resize(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        std::vector<Vertex> members;
        for (Vertex v = i; v < n; v += k) members.push_back(v);
        src.partition[i] = VertexSet(members);
      }
      const GeneratedInstance gen = gen_multicolored_clique(src);
      const std::string id = "mcq k=" + std::to_string(k);
      const CliqueGadgetLayout layout{n, k};
      counts.check(gen.instance.k() == k * (k - 1) / 2 + k * k * k, id + " k'");
      counts.check(layout.u_size() == k * k, id + " |U_i|");
      counts.check(layout.w_size() == 3 * k * k * k, id + " |W_i|");
      counts.check(gen.instance.n() == n + k * k * k + 3 * k * k * k * k + 1,
                   id + " |V|");
      counts.check(gen.instance.t() == Stretch(3, 1), id + " t");
      counts.check(gen.instance.g_edges().size() ==
                       static_cast<std::size_t>(n + 3 * k * k * k * k),
                   id + " |E(G)|");
      // Every multicolored clique, one vertex per class.
      std::vector<Vertex> pick(static_cast<std::size_t>(k));
      auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
          Certificate cert;
          cert.vertices = pick;
          check_lift(lifts, Reduction::multicolored_clique, src, gen, cert, id);
          return;
        }
        for (Vertex v : src.partition[i]) {
          bool ok = true;
          for (int j = 0; j < i; ++j) ok = ok && src.graph.has_edge(pick[j], v);
          if (!ok) continue;
          pick[i] = v;
          self(self, i + 1);
        }
      };
      rec(rec, 0);
    }
  }
}

void dominating_generator(Tally& counts, Tally& lifts, Rng& rng) {
  for (int rep = 0; rep < 60; ++rep) {
    const int n = rng.between(1, 6);
    const Graph h = Graph::unweighted(n, random_edges(rng, n, 1, 3));
    const int k = rng.between(0, 3);
    const SourceProblem src =
        make_source(SourceProblem::Kind::dominating_set, h, k);
    const GeneratedInstance gen = gen_dominating_set_star(src);
    const std::string id = "domset rep " + std::to_string(rep);
    counts.check(gen.instance.n() == n + 1, id + " |V|");
    counts.check(gen.instance.t() == Stretch(3, 1), id + " t");
    counts.check(gen.instance.g_edges().size() == h.edge_count(), id + " |E(G)|");
    bool weights = true;
    for (const auto& we : gen.instance.g().edges()) weights = weights && we.weight == 2;
    counts.check(weights, id + " G weights");
    testing::for_each_subset<Vertex>(
        iota_vertices(n), k, [&](const std::vector<Vertex>& chosen) {
          if (!testing::dominates(n, h.edge_list(), chosen)) return;
          Certificate cert;
          cert.vertices = chosen;
          check_lift(lifts, Reduction::dominating_set_star, src, gen, cert, id);
        });
  }
}

void weighted_diameter_generator(Tally& counts, Tally& lifts, Rng& rng) {
  {
    SourceProblem src = make_source(
        SourceProblem::Kind::diameter2_augmentation,
        Graph::unweighted(4, {{0, 1}, {1, 2}, {2, 3}}), 1);
    src.epsilon = std::pair<std::int64_t, std::int64_t>{1, 2};
    const GeneratedInstance gen = gen_diameter2_weighted(src);
    std::set<Weight> weights;
    for (const auto& we : gen.instance.gamma().edges()) weights.insert(we.weight);
    counts.check(diameter_gadget_weight(4, 1, 2) == Stretch(12, 1), "diam2w w");
    counts.check(weights == std::set<Weight>{1, 12}, "diam2w weights");
    counts.check(gen.instance.n() == 16, "diam2w |V|");
    counts.check(gen.instance.t() == Stretch(5, 2), "diam2w t");
    counts.check(gen.instance.g().max_degree() <= 3, "diam2w G degree");
  }
  for (int rep = 0; rep < 40; ++rep) {
    const int n = rng.between(1, 5);
    const Graph h = Graph::unweighted(n, random_edges(rng, n, 1, 2));
    const int k = rng.between(0, 2);
    const std::int64_t q = rng.between(2, 6);
    const std::int64_t p = rng.between(1, static_cast<int>(q) - 1);
    SourceProblem src =
        make_source(SourceProblem::Kind::diameter2_augmentation, h, k);
    src.epsilon = std::pair{p, q};
    const GeneratedInstance gen = gen_diameter2_weighted(src);
    const std::string id = "diam2w rep " + std::to_string(rep);
    counts.check(gen.instance.n() == n * n, id + " |V|");
    counts.check(gen.instance.t() == Stretch(2 * q + p, q), id + " t");
    counts.check(gen.instance.g().max_degree() <= 3, id + " G degree");
    const auto edges = h.edge_list();
    testing::for_each_subset<Edge>(
        testing::complement_pairs(n, edges), k,
        [&](const std::vector<Edge>& chosen) {
          std::vector<Edge> all = edges;
          all.insert(all.end(), chosen.begin(), chosen.end());
          if (!testing::diameter_at_most_two(n, all)) return;
          Certificate cert;
          cert.edges = chosen;
          check_lift(lifts, Reduction::diameter2_weighted, src, gen, cert, id);
        });
  }
}

void spanner_generator(Tally& counts, Tally& lifts, Rng& rng) {
  for (int rep = 0; rep < 40; ++rep) {
    const int n = rng.between(1, 6);
    const Graph h = Graph::unweighted(n, random_connected_edges(rng, n, 1, 3));
    const int k = std::max(0, n - 1 + rng.between(0, 2));
    const SourceProblem src = make_source(SourceProblem::Kind::two_spanner, h, k);
    const GeneratedInstance gen = gen_spanner_edgeless(src);
    const std::string id = "spanner rep " + std::to_string(rep);
    counts.check(gen.instance.n() == n, id + " |V|");
    counts.check(gen.instance.g_edges().empty(), id + " G edgeless");
    counts.check(gen.instance.t() == Stretch(2, 1), id + " t");
    counts.check(gen.instance.gamma().edge_count() == h.edge_count(),
                 id + " Gamma = H");
    const auto edges = h.edge_list();
    testing::for_each_subset<Edge>(edges, k, [&](const std::vector<Edge>& kept) {
      if (!testing::is_two_spanner(n, edges, kept)) return;
      Certificate cert;
      cert.edges = kept;
      check_lift(lifts, Reduction::spanner_edgeless, src, gen, cert, id);
    });
  }
}

void clique_diameter_generator(Tally& counts, Tally& lifts, Rng& rng) {
  for (int rep = 0; rep < 40; ++rep) {
    const int n = rng.between(1, 6);
    const Graph h = Graph::unweighted(n, random_edges(rng, n, 1, 2));
    const int k = rng.between(0, 2);
    const SourceProblem src =
        make_source(SourceProblem::Kind::diameter2_augmentation, h, k);
    const GeneratedInstance gen = gen_diameter2_clique(src);
    const std::string id = "diam2k rep " + std::to_string(rep);
    counts.check(gen.instance.gamma().edge_count() ==
                     static_cast<std::size_t>(n * (n - 1) / 2),
                 id + " Gamma complete");
    counts.check(gen.instance.g_edges() == h.edge_list(), id + " G = H");
    counts.check(gen.instance.t() == Stretch(2, 1), id + " t");
    const auto edges = h.edge_list();
    testing::for_each_subset<Edge>(
        testing::complement_pairs(n, edges), k,
        [&](const std::vector<Edge>& chosen) {
          std::vector<Edge> all = edges;
          all.insert(all.end(), chosen.begin(), chosen.end());
          if (!testing::diameter_at_most_two(n, all)) return;
          Certificate cert;
          cert.edges = chosen;
          check_lift(lifts, Reduction::diameter2_clique, src, gen, cert, id);
        });
  }
}

void generators() {
  const auto start = Clock::now();
  Rng rng(6006);
  Tally counts;
  Tally lifts;
  clique_generator(counts, lifts, rng);
  dominating_generator(counts, lifts, rng);
  weighted_diameter_generator(counts, lifts, rng);
  spanner_generator(counts, lifts, rng);
  clique_diameter_generator(counts, lifts, rng);
  const double secs = seconds_since(start);
  report(6, "generator soundness",
         counts.failures == 0 && lifts.failures == 0 && lifts.cases > 0 &&
             secs < 120,
         "counts " + summary(counts, secs) + "; lifted witnesses " +
             summary(lifts, secs));
}

// --- 7 ---------------------------------------------------------------------

// All graphs on n vertices up to isomorphism, as edge lists. Built by adding
// a vertex with every neighbourhood to each class on n - 1 vertices and
// keeping one graph per canonical form (smallest adjacency bitmask over all
// relabelings).
std::vector<std::vector<std::vector<Edge>>> graph_classes(int max_n) {
  std::vector<std::vector<std::vector<Edge>>> out(
      static_cast<std::size_t>(max_n + 1));
  out[0] = {{}};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::vector<int>> index(n, std::vector<int>(n, 0));
    int bits = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) index[a][b] = index[b][a] = bits++;
    }
    auto canonical = [&](const std::vector<Edge>& edges) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::uint64_t best = UINT64_MAX;
      do {
        std::uint64_t mask = 0;
        for (const Edge& e : edges) mask |= 1ULL << index[perm[e.u]][perm[e.v]];
        best = std::min(best, mask);
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    };
    std::set<std::uint64_t> seen;
    for (const auto& base : out[n - 1]) {
      for (std::uint32_t nb = 0; nb < (1U << (n - 1)); ++nb) {
        std::vector<Edge> edges = base;
        for (int v = 0; v < n - 1; ++v) {
          if (nb & (1U << v)) edges.push_back({v, n - 1});
        }
        if (seen.insert(canonical(edges)).second) {
          std::sort(edges.begin(), edges.end());
          out[n].push_back(edges);
        }
      }
    }
  }
  return out;
}

bool connected(int n, const std::vector<Edge>& edges) {
  const auto d = testing::hop_metric(n, edges);
  for (int v = 0; v < n; ++v) {
    if (d[0][v] >= testing::kInf) return false;
  }
  return true;
}

void reverse_sweeps() {
  const auto start = Clock::now();
  const auto classes = graph_classes(7);
  Tally enumeration;
  const std::vector<std::size_t> known = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    enumeration.check(classes[n].size() == known[n],
                      "class count n=" + std::to_string(n));
  }
  Tally spanner;
  Tally diameter;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& edges : classes[n]) {
      const Graph h = Graph::unweighted(n, edges);
      const std::string id =
          "n=" + std::to_string(n) + " m=" + std::to_string(edges.size());
      for (int k = 0; k <= 2; ++k) {
        if (n <= 6 && connected(n, edges)) {
          bool source_yes = false;
          testing::for_each_subset<Edge>(
              edges, k, [&](const std::vector<Edge>& kept) {
                source_yes =
                    source_yes || testing::is_two_spanner(n, edges, kept);
              });
          const Instance inst =
              gen_spanner_edgeless(
                  make_source(SourceProblem::Kind::two_spanner, h, k))
                  .instance;
          spanner.check(solve_min(inst).is_yes() == source_yes,
                        "spanner " + id + " k=" + std::to_string(k));
        }
        bool source_yes = false;
        testing::for_each_subset<Edge>(
            testing::complement_pairs(n, edges), k,
            [&](const std::vector<Edge>& chosen) {
              std::vector<Edge> all = edges;
              all.insert(all.end(), chosen.begin(), chosen.end());
              source_yes = source_yes || testing::diameter_at_most_two(n, all);
            });
        const Instance inst =
            gen_diameter2_clique(
                make_source(SourceProblem::Kind::diameter2_augmentation, h, k))
                .instance;
        diameter.check(solve_min(inst).is_yes() == source_yes,
                       "diam2k " + id + " k=" + std::to_string(k));
      }
    }
  }
  const double secs = seconds_since(start);
  report(7, "tiny reverse sweeps",
         enumeration.failures == 0 && spanner.failures == 0 &&
             diameter.failures == 0,
         "graph classes " + summary(enumeration, secs) + "; spanner " +
             summary(spanner, secs) + "; diam2k " + summary(diameter, secs));
}

// --- 8 ---------------------------------------------------------------------

std::string solve_output(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

void determinism() {
  const auto start = Clock::now();
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dilaug_acceptance";
  fs::create_directories(dir);
  const auto corpus = fuzz_corpus(8008, 400);
  const auto again = fuzz_corpus(8008, 400);
  Tally tally;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    tally.check(serialize_instance(corpus[i]) == serialize_instance(again[i]),
                "corpus " + std::to_string(i));
    const std::string path = (dir / ("f" + std::to_string(i) + ".txt")).string();
    write_file(path, serialize_instance(corpus[i]));
    for (const char* engine : {"auto", "brute"}) {
      const std::string base = solve_output(
          {"solve", "--engine", engine, "--input", path, "--parallel", "1"});
      for (const char* workers : {"1", "2", "4"}) {
        for (int rep = 0; rep < 2; ++rep) {
          tally.check(solve_output({"solve", "--engine", engine, "--input",
                                    path, "--parallel", workers}) == base,
                      "instance " + std::to_string(i) + " engine " + engine +
                          " parallel " + workers);
        }
      }
    }
  }
  fs::remove_all(dir);
  const double secs = seconds_since(start);
  report(8, "determinism", tally.failures == 0, summary(tally, secs));
}

}  // namespace
}  // namespace dilaug

int main() {
  using namespace dilaug;
  try {
    adjacent_conflict_equivalence();
    oracle_equivalence();
    kdd_pipeline();
    f_values();
    locality();
    generators();
    reverse_sweeps();
    determinism();
  } catch (const std::exception& e) {
    std::printf("FAIL aborted: %s\n", e.what());
    return 1;
  }
  return failed_criteria == 0 ? 0 : 1;
}
