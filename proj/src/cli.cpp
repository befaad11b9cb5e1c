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

#include "dilaug/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "dilaug/dilation.hpp"
#include "dilaug/errors.hpp"
#include "dilaug/io.hpp"
#include "dilaug/oracle.hpp"
#include "dilaug/random.hpp"
#include "dilaug/reductions.hpp"
#include "dilaug/structured.hpp"

namespace dilaug {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

bool tree_engine_applies(const Instance& inst) {
  return inst.gamma().is_tree() && inst.gamma().is_unweighted() &&
         inst.t() < Stretch(3, 1);
}

bool kdd_engine_applies(const Instance& inst) {
  return inst.t() == Stretch(2, 1) && inst.gamma().is_unweighted();
}

std::optional<TwinMode> parse_twin_mode(std::string_view name) {
  if (name == "restrict") return TwinMode::restrict_endpoints;
  if (name == "delete") return TwinMode::delete_vertices;
  if (name == "off") return TwinMode::off;
  return std::nullopt;
}

// Source graph text for `gen`: "p source <n>", then "e <u> <v>" edges and,
// for multicolored clique, "v <vertex> <color>" lines; all 1-based.
struct SourceText {
  Graph graph;
  std::vector<int> colors;
};

SourceText parse_source(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, int>> colored;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    auto vertex = [&](long long raw) {
      if (raw < 1 || raw > n) {
        throw ParseError(line_number, "vertex out of range");
      }
      return static_cast<Vertex>(raw - 1);
    };
    if (tag == "p") {
      std::string kind;
      if (n != -1 || !(fields >> kind >> n) || kind != "source" || n < 1) {
        throw ParseError(line_number, "malformed source header");
      }
    } else if (n == -1) {
      throw ParseError(line_number, "expected source header");
    } else if (tag == "e") {
      long long a = 0;
      long long b = 0;
      if (!(fields >> a >> b) || a == b) {
        throw ParseError(line_number, "malformed source edge");
      }
      edges.push_back(make_edge(vertex(a), vertex(b)));
    } else if (tag == "v") {
      long long a = 0;
      int color = 0;
      if (!(fields >> a >> color) || color < 1) {
        throw ParseError(line_number, "malformed color line");
      }
      colored.emplace_back(vertex(a), color - 1);
    } else {
      throw ParseError(line_number, "unknown record '" + tag + "'");
    }
  }
  if (n == -1) throw ParseError(0, "missing source header");
  std::ranges::sort(edges);
  if (std::ranges::adjacent_find(edges) != edges.end()) {
    throw ParseError(0, "duplicate source edge");
  }
  SourceText src{Graph::unweighted(n, edges), {}};
  if (!colored.empty()) {
    src.colors.assign(static_cast<std::size_t>(n), -1);
    for (const auto& [v, color] : colored) {
      src.colors[static_cast<std::size_t>(v)] = color;
    }
  }
  return src;
}

std::vector<VertexSet> partition_from_colors(const std::vector<int>& colors,
                                             int k) {
  std::vector<std::vector<Vertex>> classes(static_cast<std::size_t>(k));
  for (std::size_t v = 0; v < colors.size(); ++v) {
    if (colors[v] < 0 || colors[v] >= k) {
      throw UsageError("vertex " + std::to_string(v + 1) +
                       " lacks a color in 1..k");
    }
    classes[static_cast<std::size_t>(colors[v])].push_back(
        static_cast<Vertex>(v));
  }
  std::vector<VertexSet> out;
  for (auto& c : classes) out.emplace_back(std::move(c));
  return out;
}

// Random source with a planted multicolored clique on vertices 0..k-1.
SourceText random_clique_source(Rng& rng, int n, int k) {
  if (n < k) throw UsageError("mcq needs n >= k");
  std::vector<Edge> edges;
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) colors[static_cast<std::size_t>(v)] = v % k;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (colors[static_cast<std::size_t>(a)] ==
          colors[static_cast<std::size_t>(b)]) {
        continue;
      }
      if (b < k || rng.chance(1, 2)) edges.push_back({a, b});
    }
  }
  return {Graph::unweighted(n, edges), colors};
}

struct GenArgs {
  std::string source;
  std::string output;
  std::string labels;
  int k = 2;
  int n = 6;
  std::uint64_t seed = 1;
  std::string epsilon = "1/2";
};

int run_gen(const std::string& which, const GenArgs& a, std::ostream& out,
            std::ostream& err) {
  Rng rng(a.seed);
  SourceText text;
  const bool from_file = !a.source.empty();
  if (from_file) {
    text = parse_source(read_file(a.source));
  } else if (which == "mcq") {
    text = random_clique_source(rng, a.n, a.k);
  } else if (which == "spanner") {
    text = {Graph::unweighted(a.n, random_connected_edges(rng, a.n, 1, 2)),
            {}};
  } else {
    text = {Graph::unweighted(a.n, random_edges(rng, a.n, 1, 2)), {}};
  }
  SourceProblem src;
  src.graph = text.graph;
  src.k = a.k;
  Reduction reduction = Reduction::dominating_set_star;
  if (which == "mcq") {
    src.kind = SourceProblem::Kind::multicolored_clique;
    src.partition = partition_from_colors(text.colors, a.k);
    reduction = Reduction::multicolored_clique;
  } else if (which == "domset") {
    src.kind = SourceProblem::Kind::dominating_set;
  } else if (which == "diam2w") {
    src.kind = SourceProblem::Kind::diameter2_augmentation;
    const auto eps = Stretch::parse(a.epsilon);
    if (!eps) throw UsageError("bad --epsilon '" + a.epsilon + "'");
    src.epsilon = std::pair{eps->num(), eps->den()};
    reduction = Reduction::diameter2_weighted;
  } else if (which == "spanner") {
    src.kind = SourceProblem::Kind::two_spanner;
    reduction = Reduction::spanner_edgeless;
  } else {
    src.kind = SourceProblem::Kind::diameter2_augmentation;
    reduction = Reduction::diameter2_clique;
  }
  if (a.k < 0) throw UsageError("--k must be >= 0");
  const GeneratedInstance gen = generate(reduction, src);
  for (const std::string& w : gen.warnings) err << "warning: " << w << '\n';
  const std::string body = serialize_instance(gen.instance);
  if (a.output.empty()) {
    out << body;
  } else {
    write_file(a.output, body);
  }
  if (!a.labels.empty()) write_file(a.labels, serialize_labels(gen.labels));
  return kExitYes;
}

std::string describe(const Verdict& v) { return v.is_yes() ? "YES" : "NO"; }

int run_fuzz(std::uint64_t seed, int count, const std::string& dump,
             int workers, std::ostream& out) {
  const std::vector<Instance> corpus = fuzz_corpus(seed, count);
  std::uint64_t runs = 0;
  std::uint64_t disagreements = 0;
  SearchOptions search;
  search.workers = workers;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Instance& inst = corpus[i];
    const Verdict expected = solve_min(inst, search);
    for (Engine e : applicable_engines(inst)) {
      SolveOptions options;
      options.engine = e;
      options.d = 2;
      options.workers = workers;
      const Verdict got = solve_with(inst, options);
      ++runs;
      bool ok = got.is_yes() == expected.is_yes();
      if (ok && got.is_yes()) {
        ok = verify_solution(inst, got.solution()).valid() &&
             got.solution().size() <= static_cast<std::size_t>(inst.k());
      }
      if (ok) continue;
      ++disagreements;
      out << "disagreement: instance " << i << " engine " << engine_name(e)
          << " says " << describe(got) << ", oracle says "
          << describe(expected) << '\n';
      if (!dump.empty()) {
        std::filesystem::create_directories(dump);
        const std::string path = (std::filesystem::path(dump) /
                                  ("fuzz-" + std::to_string(seed) + "-" +
                                   std::to_string(i) + ".txt"))
                                     .string();
        write_file(path, "c seed " + std::to_string(seed) + " index " +
                             std::to_string(i) + " engine " + engine_name(e) +
                             "\n" + serialize_instance(inst));
        out << "dumped " << path << '\n';
      }
    }
  }
  out << "fuzz: " << corpus.size() << " instances, " << runs
      << " engine runs, " << disagreements << " disagreements\n";
  return disagreements == 0 ? kExitYes : kExitNo;
}

int run_bench(const std::string& suite, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto report = [&](const std::string& name, std::size_t instances,
                    std::size_t yes, Clock::duration elapsed) {
    out << suite << ' ' << name << " instances=" << instances
        << " yes=" << yes << " ms="
        << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
               .count()
        << '\n';
  };
  if (suite == "engines" || suite == "kdd") {
    std::vector<Instance> corpus;
    if (suite == "engines") {
      corpus = fuzz_corpus(1, 200);
    } else {
      Rng rng(7);
      RandomInstanceSpec spec;
      spec.min_n = 6;
      spec.max_n = 12;
      spec.max_k = 3;
      spec.stretches = {Stretch(2, 1)};
      spec.g = RandomInstanceSpec::GShape::forest;
      for (int i = 0; i < 50; ++i) corpus.push_back(random_instance(rng, spec));
    }
    const std::vector<Engine> engines =
        suite == "engines"
            ? std::vector<Engine>{Engine::brute, Engine::bounded_gamma,
                                  Engine::bounded_g, Engine::tree,
                                  Engine::kdd}
            : std::vector<Engine>{Engine::brute, Engine::kdd};
    for (Engine e : engines) {
      std::size_t count = 0;
      std::size_t yes = 0;
      const auto start = Clock::now();
      for (const Instance& inst : corpus) {
        if (e == Engine::tree && !tree_engine_applies(inst)) continue;
        if (e == Engine::kdd &&
            (!kdd_engine_applies(inst) || contains_k22(inst.g()))) {
          continue;
        }
        SolveOptions options;
        options.engine = e;
        options.d = 2;
        ++count;
        if (solve_with(inst, options).is_yes()) ++yes;
      }
      report(engine_name(e), count, yes, Clock::now() - start);
    }
    return kExitYes;
  }
  if (suite == "gadgets") {
    for (int k = 2; k <= 4; ++k) {
      Rng rng(static_cast<std::uint64_t>(k));
      SourceText text = random_clique_source(rng, 2 * k, k);
      SourceProblem src;
      src.kind = SourceProblem::Kind::multicolored_clique;
      src.graph = text.graph;
      src.k = k;
      src.partition = partition_from_colors(text.colors, k);
      const auto start = Clock::now();
      const GeneratedInstance gen = gen_multicolored_clique(src);
      Certificate cert;
      for (Vertex v = 0; v < k; ++v) cert.vertices.push_back(v);
      const bool ok =
          verify_solution(gen.instance,
                          lift_witness(Reduction::multicolored_clique, src,
                                       cert))
              .valid();
      report("mcq-k" + std::to_string(k), 1, ok ? 1 : 0, Clock::now() - start);
    }
    return kExitYes;
  }
  throw UsageError("unknown bench suite '" + suite +
                   "' (engines, kdd, gadgets)");
}

}  // namespace

std::optional<Engine> parse_engine(std::string_view name) {
  if (name == "brute") return Engine::brute;
  if (name == "tree") return Engine::tree;
  if (name == "bounded-gamma") return Engine::bounded_gamma;
  if (name == "bounded-g") return Engine::bounded_g;
  if (name == "kdd") return Engine::kdd;
  if (name == "auto") return Engine::automatic;
  return std::nullopt;
}

std::string engine_name(Engine engine) {
  switch (engine) {
    case Engine::brute:
      return "brute";
    case Engine::tree:
      return "tree";
    case Engine::bounded_gamma:
      return "bounded-gamma";
    case Engine::bounded_g:
      return "bounded-g";
    case Engine::kdd:
      return "kdd";
    case Engine::automatic:
      return "auto";
  }
  return "?";
}

Engine resolve_engine(const Instance& inst, const SolveOptions& options) {
  if (options.engine != Engine::automatic) return options.engine;
  if (tree_engine_applies(inst)) return Engine::tree;
  if (options.d && kdd_engine_applies(inst)) return Engine::kdd;
  if (inst.gamma().max_degree() <= inst.g().max_degree()) {
    return Engine::bounded_gamma;
  }
  return Engine::bounded_g;
}

Verdict solve_with(const Instance& inst, const SolveOptions& options) {
  SearchOptions search;
  search.workers = options.workers;
  search.max_candidates = options.max_candidates;
  switch (resolve_engine(inst, options)) {
    case Engine::brute:
      return solve_min(inst, search);
    case Engine::tree:
      return solve_tree_gamma(inst);
    case Engine::bounded_gamma:
      return solve_bounded_gamma(inst, search);
    case Engine::bounded_g:
      return solve_bounded_g(inst, search);
    case Engine::kdd: {
      KddOptions kdd;
      kdd.d = options.d.value_or(2);
      kdd.twin_mode = options.twin_mode;
      kdd.search = search;
      return solve_kdd(inst, kdd);
    }
    case Engine::automatic:
      break;
  }
  throw std::logic_error("unresolved engine");
}

std::string format_verdict(const Verdict& verdict) {
  if (!verdict.is_yes()) return "NO\n";
  return "YES\n" + serialize_solution(verdict.solution());
}

bool contains_k22(const Graph& g) {
  const int n = g.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      int common = 0;
      for (const auto& nb : g.neighbors(a)) {
        if (g.has_edge(nb.vertex, b) && ++common >= 2) return true;
      }
    }
  }
  return false;
}

std::vector<Engine> applicable_engines(const Instance& inst) {
  std::vector<Engine> engines{Engine::bounded_gamma, Engine::bounded_g};
  if (tree_engine_applies(inst)) engines.push_back(Engine::tree);
  if (kdd_engine_applies(inst) && !contains_k22(inst.g())) {
    engines.push_back(Engine::kdd);
  }
  return engines;
}

std::vector<Instance> fuzz_corpus(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Instance> corpus;
  corpus.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    RandomInstanceSpec spec;
    spec.max_n = 8;
    spec.max_k = 2;
    spec.stretches = {Stretch(3, 2), Stretch(2, 1), Stretch(5, 2),
                      Stretch(3, 1)};
    switch (i % 4) {
      case 0:
        spec.max_weight = 3;
        break;
      case 1:
        spec.gamma = RandomInstanceSpec::GammaShape::tree;
        spec.stretches = {Stretch(3, 2), Stretch(2, 1)};
        break;
      case 2:
        spec.g = RandomInstanceSpec::GShape::forest;
        spec.stretches = {Stretch(2, 1)};
        break;
      default:
        spec.g = RandomInstanceSpec::GShape::subgraph;
        spec.density_num = 1;
        spec.density_den = 2;
        break;
    }
    corpus.push_back(random_instance(rng, spec));
  }
  return corpus;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dilation t-augmentation solver", "dilaug"};
  app.require_subcommand(1);

  std::string engine = "auto";
  int d = 2;
  int workers = 1;
  std::string twin = "restrict";
  std::string input;
  std::uint64_t max_candidates = 100'000'000;
  CLI::App* solve = app.add_subcommand("solve", "Decide an instance");
  solve->add_option("--engine", engine,
                    "brute, tree, bounded-gamma, bounded-g, kdd or auto");
  CLI::Option* d_opt =
      solve->add_option("--d", d, "G excludes K_{d,d} (enables kdd)");
  solve->add_option("--parallel", workers, "worker threads")
      ->check(CLI::PositiveNumber);
  solve->add_option("--twin-mode", twin, "restrict, delete or off");
  solve->add_option("--max-candidates", max_candidates,
                    "cap on enumerated subsets");
  solve->add_option("--input", input, "instance file")->required();

  std::string solution_path;
  CLI::App* verify = app.add_subcommand("verify", "Check a solution file");
  verify->add_option("--input", input, "instance file")->required();
  verify->add_option("--solution", solution_path, "solution file")
      ->required();

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Emit a gadget instance");
  gen->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> gen_kinds;
  for (const char* name : {"mcq", "domset", "diam2w", "spanner", "diam2k"}) {
    CLI::App* sub = gen->add_subcommand(name, std::string(name) + " gadget");
    sub->add_option("--source", gen_args.source, "source graph file");
    sub->add_option("--k", gen_args.k, "source parameter k");
    sub->add_option("--n", gen_args.n, "random source size");
    sub->add_option("--seed", gen_args.seed, "random source seed");
    sub->add_option("--output", gen_args.output, "instance file");
    sub->add_option("--labels", gen_args.labels, "label sidecar file");
    if (std::string_view(name) == "diam2w") {
      sub->add_option("--epsilon", gen_args.epsilon, "epsilon as p/q");
    }
    gen_kinds.emplace_back(name, sub);
  }

  std::uint64_t seed = 1;
  int count = 100;
  std::string dump;
  CLI::App* fuzz =
      app.add_subcommand("fuzz", "Cross-check engines against brute force");
  fuzz->add_option("--seed", seed, "corpus seed")->required();
  fuzz->add_option("--count", count, "corpus size")->required();
  fuzz->add_option("--dump", dump, "directory for failing instances");
  fuzz->add_option("--parallel", workers, "worker threads")
      ->check(CLI::PositiveNumber);

  std::string suite;
  CLI::App* bench = app.add_subcommand("bench", "Time a benchmark suite");
  bench->add_option("--suite", suite, "engines, kdd or gadgets")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    if (solve->parsed()) {
      SolveOptions options;
      const auto parsed_engine = parse_engine(engine);
      if (!parsed_engine) throw UsageError("unknown engine '" + engine + "'");
      const auto mode = parse_twin_mode(twin);
      if (!mode) throw UsageError("unknown twin mode '" + twin + "'");
      options.engine = *parsed_engine;
      if (d_opt->count() > 0) {
        if (d < 1) throw UsageError("--d must be >= 1");
        options.d = d;
      }
      options.workers = workers;
      options.twin_mode = *mode;
      options.max_candidates = max_candidates;
      const Instance inst = parse_instance(read_file(input));
      const Verdict v = solve_with(inst, options);
      out << format_verdict(v);
      return v.is_yes() ? kExitYes : kExitNo;
    }
    if (verify->parsed()) {
      const Instance inst = parse_instance(read_file(input));
      const Solution s = parse_solution(read_file(solution_path), inst.n());
      const Verification result = verify_solution(inst, s);
      if (result.valid()) {
        out << "VALID\n";
        return kExitYes;
      }
      if (result.status == Verification::Status::conflict) {
        out << "INVALID conflict(" << result.culprit->u + 1 << ','
            << result.culprit->v + 1 << ")\n";
      } else {
        out << "INVALID " << result.reason() << '\n';
      }
      return kExitNo;
    }
    if (gen->parsed()) {
      for (const auto& [name, sub] : gen_kinds) {
        if (sub->parsed()) return run_gen(name, gen_args, out, err);
      }
    }
    if (fuzz->parsed()) return run_fuzz(seed, count, dump, workers, out);
    if (bench->parsed()) return run_bench(suite, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << "error: no subcommand\n";
  return kExitError;
}

}  // namespace dilaug
