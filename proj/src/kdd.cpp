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

#include "dilaug/kdd.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "dilaug/errors.hpp"
#include "dilaug/graph.hpp"

namespace dilaug {

namespace {

constexpr __int128 kThresholdLimit = std::numeric_limits<std::int64_t>::max();

__int128 checked(__int128 x) {
  if (x > kThresholdLimit) throw UsageError("f value overflows int64");
  return x;
}

__int128 power(int base, int exponent) {
  __int128 out = 1;
  for (int i = 0; i < exponent; ++i) out = checked(out * base);
  return out;
}

// Neighbours of v in the conflict graph.
std::vector<Vertex> conflict_neighbors(const ConflictAnalysis& conflicts,
                                       Vertex v) {
  std::vector<Vertex> out;
  for (const Edge& e : conflicts.conflict_edges) {
    if (e.u == v) out.push_back(e.v);
    if (e.v == v) out.push_back(e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> conflict_neighbors_outside(const AnnotatedInstance& ann,
                                               const ConflictAnalysis& c,
                                               Vertex v) {
  std::vector<Vertex> out;
  for (Vertex u : conflict_neighbors(c, v)) {
    if (!ann.cover().contains(u)) out.push_back(u);
  }
  return out;
}

std::optional<BlockingSet> blocking_set_from(const AnnotatedInstance& ann,
                                             const std::vector<Vertex>& u0,
                                             Vertex v, int d) {
  const int k = ann.k();
  const VertexSet outside = ann.outside_cover();
  BlockingSet bs{v, {}};
  std::vector<Vertex> current = u0;
  for (int i = 1; i <= d; ++i) {
    Vertex best = -1;
    std::size_t best_count = 0;
    for (Vertex w : outside) {
      if (std::find(bs.witnesses.begin(), bs.witnesses.end(), w) !=
          bs.witnesses.end()) {
        continue;
      }
      std::size_t count = 0;
      for (Vertex u : current) {
        if (ann.adjacent(w, u)) ++count;
      }
      if (best < 0 || count > best_count) {
        best = w;
        best_count = count;
      }
    }
    const bool clears =
        best >= 0 && static_cast<std::int64_t>(best_count) > f_value(i, k, d);
    if (!clears) {
      if (i == 1) return std::nullopt;
      break;
    }
    if (i == d) {
      throw ContractViolation(
          "input not K_{" + std::to_string(d) + "," + std::to_string(d) +
          "}-free: blocking set for vertex " + std::to_string(v) +
          " reached " + std::to_string(d) + " witnesses");
    }
    bs.witnesses.push_back(best);
    std::vector<Vertex> next;
    for (Vertex u : current) {
      if (ann.adjacent(best, u)) next.push_back(u);
    }
    current = std::move(next);
  }
  return bs;
}

// Calls visit(subset) for every subset of `pool` with at most `max_size`
// elements, by size then lexicographically.
template <typename Visit>
void for_each_subset(const std::vector<Edge>& pool, int max_size, Visit visit) {
  const std::size_t limit =
      std::min<std::size_t>(std::max(max_size, 0), pool.size());
  for (std::size_t size = 0; size <= limit; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Edge> subset;
      for (std::size_t i : idx) subset.push_back(pool[i]);
      visit(subset);
      std::size_t i = size;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (idx[i] < pool.size() - size + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
}

class KddSolver {
 public:
  KddSolver(const Instance& inst, const KddOptions& options, KddStats& stats)
      : inst_(inst), options_(options), stats_(stats) {}

  std::optional<Solution> solve() {
    const ConflictAnalysis conflicts = adjacent_conflicts(inst_, Solution());
    if (conflicts.empty()) return Solution();
    if (inst_.k() == 0) return std::nullopt;
    const Matching m =
        greedy_maximal_matching(conflicts.conflict_graph(inst_.n()));
    if (m.size() > 2 * static_cast<std::size_t>(inst_.k())) {
      return std::nullopt;
    }
    const VertexSet cover = m.endpoints();
    std::vector<Edge> inside;
    for (auto a = cover.begin(); a != cover.end(); ++a) {
      for (auto b = std::next(a); b != cover.end(); ++b) {
        if (!inst_.g().has_edge(*a, *b)) inside.push_back({*a, *b});
      }
    }

    std::optional<Solution> answer;
    SearchOptions sequential = options_.search;
    sequential.workers = 1;
    first_accepted_subset(
        inside, inst_.k(),
        [&](const std::vector<Edge>& guess) {
          AnnotatedInstance node(inst_, Solution(guess),
                                 inst_.k() - static_cast<int>(guess.size()),
                                 cover);
          answer = solve_node(node);
          return answer.has_value();
        },
        sequential);
    return answer;
  }

 private:
  std::optional<Solution> solve_node(const AnnotatedInstance& node) {
    ++stats_.nodes;
    stats_.max_cover = std::max(stats_.max_cover, node.cover().size());
    if (node.cover().size() > 5 * static_cast<std::size_t>(inst_.k())) {
      ++stats_.cover_violations;
    }
    const ConflictAnalysis conflicts = node.conflicts();
    if (conflicts.empty()) return node.committed();
    if (node.k() == 0) return std::nullopt;

    const std::int64_t high = f_value(0, node.k(), options_.d);
    for (Vertex v : node.cover()) {
      const auto u0 = conflict_neighbors_outside(node, conflicts, v);
      if (static_cast<std::int64_t>(u0.size()) <= high) continue;
      ++stats_.blocking_sets;
      const auto bs = blocking_set_from(node, u0, v, options_.d);
      if (!bs) {
        ++stats_.rule2_rejections;
        return std::nullopt;
      }
      for (const AnnotatedInstance& child : branch_blocking(node, *bs)) {
        ++stats_.children;
        if (child.k() >= node.k()) ++stats_.budget_violations;
        if (auto found = solve_node(child)) return found;
      }
      return std::nullopt;
    }
    return final_search(node);
  }

  std::optional<Solution> final_search(const AnnotatedInstance& node) {
    ++stats_.final_searches;
    if (options_.twin_mode == TwinMode::delete_vertices) {
      return literal_search(node);
    }
    VertexSet candidates;
    if (options_.twin_mode == TwinMode::restrict_endpoints) {
      TwinReduction reduction = twin_reduce(node);
      stats_.removed_twins += reduction.removed.size();
      candidates = std::move(reduction.candidates);
    } else {
      std::vector<Vertex> all(inst_.n());
      for (Vertex v = 0; v < inst_.n(); ++v) all[v] = v;
      candidates = VertexSet(std::move(all));
    }
    std::vector<Edge> pool;
    const auto& ids = candidates.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const Vertex a = ids[i];
        const Vertex b = ids[j];
        if (node.adjacent(a, b)) continue;
        if (node.cover().contains(a) && node.cover().contains(b)) continue;
        pool.push_back({a, b});
      }
    }
    auto found = first_accepted_subset(
        pool, node.k(),
        [&](const std::vector<Edge>& subset) {
          return conflict_free(inst_,
                               node.committed().united(Solution(subset)));
        },
        options_.search);
    if (!found) return std::nullopt;
    return node.committed().united(Solution(std::move(*found)));
  }

  // Deletes the non-representative twins from both graphs and searches the
  // remaining instance under its own metric.
  std::optional<Solution> literal_search(const AnnotatedInstance& node) {
    const TwinReduction reduction = twin_reduce(node);
    stats_.removed_twins += reduction.removed.size();
    std::vector<Vertex> kept;
    std::vector<int> index(inst_.n(), -1);
    for (Vertex v = 0; v < inst_.n(); ++v) {
      if (!reduction.removed.contains(v)) {
        index[v] = static_cast<int>(kept.size());
        kept.push_back(v);
      }
    }
    const int n = static_cast<int>(kept.size());
    std::vector<WeightedEdge> gamma_edges;
    for (const WeightedEdge& we : inst_.gamma().edges()) {
      if (index[we.edge.u] >= 0 && index[we.edge.v] >= 0) {
        gamma_edges.push_back(
            {{index[we.edge.u], index[we.edge.v]}, we.weight});
      }
    }
    Graph gamma(n, gamma_edges);
    if (!gamma.is_connected()) return std::nullopt;
    std::vector<Edge> g_edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (node.adjacent(kept[i], kept[j])) g_edges.push_back({i, j});
      }
    }
    const Instance reduced(std::move(gamma), std::move(g_edges), node.k(),
                           inst_.t());
    std::vector<Edge> pool;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (reduced.g().has_edge(i, j)) continue;
        if (node.cover().contains(kept[i]) && node.cover().contains(kept[j])) {
          continue;
        }
        pool.push_back({i, j});
      }
    }
    auto found = first_accepted_subset(
        pool, node.k(),
        [&](const std::vector<Edge>& subset) {
          return conflict_free(reduced, Solution(subset));
        },
        options_.search);
    if (!found) return std::nullopt;
    std::vector<Edge> lifted;
    for (const Edge& e : *found) lifted.push_back({kept[e.u], kept[e.v]});
    return node.committed().united(Solution(std::move(lifted)));
  }

  const Instance& inst_;
  const KddOptions& options_;
  KddStats& stats_;
};

}  // namespace

std::int64_t f_value(int i, int k, int d) {
  if (d < 1 || k < 1) throw UsageError("f_value needs k >= 1 and d >= 1");
  if (i < 0 || i > d) {
    throw UsageError("f_value index " + std::to_string(i) +
                     " outside [0, " + std::to_string(d) + "]");
  }
  if (i == d) return d;
  if (i == d - 1) {
    return static_cast<std::int64_t>(
        checked(static_cast<__int128>(d) * k + power(k, 2) + k));
  }
  const int e = d - i;
  __int128 total = checked(static_cast<__int128>(d) * power(k, e));
  total = checked(total + power(k, e + 1));
  for (int j = 2; j <= e; ++j) total = checked(total + 2 * power(k, j));
  return static_cast<std::int64_t>(checked(total + k));
}

AnnotatedInstance::AnnotatedInstance(const Instance& base, Solution committed,
                                     int k, VertexSet cover)
    : base_(&base),
      committed_(std::move(committed)),
      k_(k),
      cover_(std::move(cover)) {
  if (k < 0) throw UsageError("annotated budget must be >= 0");
  for (Vertex v : cover_) base.gamma().check_vertex(v);
}

VertexSet AnnotatedInstance::outside_cover() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < base_->n(); ++v) {
    if (!cover_.contains(v)) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool AnnotatedInstance::adjacent(Vertex a, Vertex b) const {
  if (a == b) return false;
  return base_->g().has_edge(a, b) || committed_.contains(make_edge(a, b));
}

ConflictAnalysis AnnotatedInstance::conflicts() const {
  return adjacent_conflicts(*base_, committed_);
}

std::optional<BlockingSet> find_blocking_set(const AnnotatedInstance& ann,
                                             Vertex v, int d) {
  if (!ann.cover().contains(v)) {
    throw UsageError("blocking-set center " + std::to_string(v) +
                     " is not in the cover");
  }
  if (ann.k() < 1) throw UsageError("blocking set needs budget >= 1");
  const auto u0 = conflict_neighbors_outside(ann, ann.conflicts(), v);
  if (static_cast<std::int64_t>(u0.size()) <= f_value(0, ann.k(), d)) {
    throw UsageError("vertex " + std::to_string(v) +
                     " has at most f(0) conflict neighbours outside the cover");
  }
  return blocking_set_from(ann, u0, v, d);
}

std::vector<AnnotatedInstance> branch_blocking(const AnnotatedInstance& ann,
                                               const BlockingSet& bs) {
  const Vertex v = bs.center;
  std::vector<Vertex> usable;
  for (Vertex w : bs.witnesses) {
    if (!ann.adjacent(v, w)) usable.push_back(w);
  }
  std::sort(usable.begin(), usable.end());

  // Non-empty subsets of the usable witnesses, by size then lexicographically.
  std::vector<std::vector<Vertex>> subsets;
  const std::size_t m = usable.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      std::vector<Vertex> pick;
      for (std::size_t i : idx) pick.push_back(usable[i]);
      subsets.push_back(std::move(pick));
      std::size_t i = size;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (idx[i] < m - size + i) {
          ++idx[i];
          for (std::size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }

  std::vector<AnnotatedInstance> children;
  for (const auto& chosen : subsets) {
    const int spent = static_cast<int>(chosen.size());
    if (spent > ann.k()) continue;
    const VertexSet picked(chosen);
    std::vector<Edge> eligible;
    std::vector<Vertex> partners(chosen.begin(), chosen.end());
    for (Vertex r : ann.cover()) {
      if (r != v) partners.push_back(r);
    }
    for (Vertex p : chosen) {
      for (Vertex q : partners) {
        if (p == q || ann.adjacent(p, q)) continue;
        eligible.push_back(make_edge(p, q));
      }
    }
    std::sort(eligible.begin(), eligible.end());
    eligible.erase(std::unique(eligible.begin(), eligible.end()),
                   eligible.end());

    std::vector<Edge> spokes;
    for (Vertex w : chosen) spokes.push_back(make_edge(v, w));
    const Solution base_commit = ann.committed().united(Solution(spokes));
    const VertexSet cover = ann.cover().united(picked);
    for_each_subset(eligible, ann.k() - spent,
                    [&](const std::vector<Edge>& extra) {
                      children.emplace_back(
                          ann.base(), base_commit.united(Solution(extra)),
                          ann.k() - spent - static_cast<int>(extra.size()),
                          cover);
                    });
  }
  return children;
}

TwinReduction twin_reduce(const AnnotatedInstance& ann) {
  const Instance& inst = ann.base();
  TwinReduction out;
  out.conflict_vertices = ann.conflicts().conflict_vertices;
  std::map<TwinSignature, std::vector<Vertex>> groups;
  for (Vertex x = 0; x < inst.n(); ++x) {
    if (out.conflict_vertices.contains(x)) continue;
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex y : out.conflict_vertices) {
      if (inst.metric(x, y) != 1) continue;
      if (ann.adjacent(x, y)) {
        a.push_back(y);
      } else if (inst.gamma().has_edge(x, y)) {
        b.push_back(y);
      }
    }
    groups[TwinSignature{VertexSet(std::move(a)), VertexSet(std::move(b)),
                         ann.cover().contains(x)}]
        .push_back(x);
  }
  std::vector<Vertex> candidates(out.conflict_vertices.begin(),
                                 out.conflict_vertices.end());
  std::vector<Vertex> removed;
  for (auto& [signature, members] : groups) {
    TwinClass cls{signature, VertexSet(members), members.front()};
    candidates.push_back(cls.representative);
    for (std::size_t i = 1; i < members.size(); ++i) {
      removed.push_back(members[i]);
    }
    out.classes.push_back(std::move(cls));
  }
  out.candidates = VertexSet(std::move(candidates));
  out.removed = VertexSet(std::move(removed));
  return out;
}

Verdict solve_kdd(const Instance& inst, const KddOptions& options,
                  KddStats* stats) {
  if (inst.t() != Stretch(2, 1)) {
    throw InapplicableError("kdd engine needs t = 2, got " +
                            inst.t().to_string());
  }
  if (!inst.gamma().is_unweighted()) {
    throw InapplicableError("kdd engine needs an unweighted Gamma");
  }
  if (options.d < 1) throw UsageError("kdd engine needs d >= 1");
  KddStats local;
  KddStats& sink = stats ? *stats : local;
  KddSolver solver(inst, options, sink);
  auto found = solver.solve();
  if (!found) return Verdict::no();
  if (!verify_solution(inst, *found).valid()) {
    if (options.twin_mode == TwinMode::delete_vertices) {
      ++sink.unverified_answers;
    } else {
      throw std::logic_error("kdd engine produced an invalid solution");
    }
  }
  return Verdict::yes(std::move(*found));
}

}  // namespace dilaug
