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

#include "dilaug/oracle.hpp"

#include "dilaug/dilation.hpp"

namespace dilaug {

Verdict solve_min(const Instance& inst, const SearchOptions& options,
                  SearchStats* stats) {
  const std::vector<Edge> pool = inst.non_edges();
  auto found = first_accepted_subset(
      pool, inst.k(),
      [&](const std::vector<Edge>& subset) {
        return conflict_free(inst, Solution(subset));
      },
      options, stats);
  if (!found) return Verdict::no();
  return Verdict::yes(Solution(std::move(*found)));
}

}  // namespace dilaug
