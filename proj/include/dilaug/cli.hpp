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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dilaug/instance.hpp"
#include "dilaug/kdd.hpp"

namespace dilaug {

enum class Engine { brute, tree, bounded_gamma, bounded_g, kdd, automatic };

std::optional<Engine> parse_engine(std::string_view name);
std::string engine_name(Engine engine);

struct SolveOptions {
  Engine engine = Engine::automatic;
  // Set when the caller promises G excludes K_{d,d}.
  std::optional<int> d;
  int workers = 1;
  TwinMode twin_mode = TwinMode::restrict_endpoints;
  std::uint64_t max_candidates = 100'000'000;
};

// Engine `automatic` resolves to: tree when Gamma is a tree (and the tree
// engine applies), else kdd when t = 2 and d is given, else bounded-gamma
// when max degree of Gamma <= that of G, else bounded-g.
Engine resolve_engine(const Instance& inst, const SolveOptions& options);

// Throws InapplicableError when the engine does not apply.
Verdict solve_with(const Instance& inst, const SolveOptions& options);

// "YES" and sorted "s u v" lines (1-based), or "NO".
std::string format_verdict(const Verdict& verdict);

// True if some two vertices share two neighbours.
bool contains_k22(const Graph& g);

// Engines other than brute that apply to `inst`; kdd only when G is
// K_{2,2}-free.
std::vector<Engine> applicable_engines(const Instance& inst);

// Seeded random instances with n <= 8 and k <= 2 mixing weighted Gamma,
// tree Gamma, forest G and G inside Gamma.
std::vector<Instance> fuzz_corpus(std::uint64_t seed, int count);

// Entry point of the dilaug tool. `args` excludes the program name. Returns
// 0 for YES/valid, 1 for NO/invalid, 2 for usage, parse or applicability
// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dilaug
