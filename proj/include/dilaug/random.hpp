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
#include <random>
#include <vector>

#include "dilaug/graph.hpp"
#include "dilaug/instance.hpp"
#include "dilaug/stretch.hpp"

namespace dilaug {

// Seeded generator with results that do not depend on the standard library
// implementation (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int between(int lo, int hi);
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

 private:
  std::mt19937_64 engine_;
};

// Random labelled tree: vertex order is shuffled and each vertex attaches to
// a uniformly chosen earlier one.
std::vector<Edge> random_tree_edges(Rng& rng, int n);
// Random tree with each edge kept with probability keep_num/keep_den.
std::vector<Edge> random_forest_edges(Rng& rng, int n, std::uint64_t keep_num,
                                      std::uint64_t keep_den);
// Random spanning tree plus each other pair with probability num/den.
std::vector<Edge> random_connected_edges(Rng& rng, int n, std::uint64_t num,
                                         std::uint64_t den);
// Each pair with probability num/den.
std::vector<Edge> random_edges(Rng& rng, int n, std::uint64_t num,
                               std::uint64_t den);

struct RandomInstanceSpec {
  enum class GammaShape { connected, tree };
  enum class GShape { any, forest, subgraph };

  int min_n = 2;
  int max_n = 8;
  int max_k = 2;
  std::vector<Stretch> stretches = {Stretch(3, 2), Stretch(2, 1),
                                    Stretch(3, 1)};
  GammaShape gamma = GammaShape::connected;
  GShape g = GShape::any;
  // Gamma weights drawn from [1, max_weight].
  Weight max_weight = 1;
  // Density of extra Gamma edges and of G edges, as num/den.
  std::uint64_t density_num = 1;
  std::uint64_t density_den = 3;
};

Instance random_instance(Rng& rng, const RandomInstanceSpec& spec);

}  // namespace dilaug
