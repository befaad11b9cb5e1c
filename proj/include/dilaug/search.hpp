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
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "dilaug/graph.hpp"

namespace dilaug {

struct SearchOptions {
  // Cap on candidate subsets generated before BudgetExceeded is thrown.
  std::uint64_t max_candidates = 100'000'000;
  // Threads used to test candidates; the answer never depends on this.
  int workers = 1;
};

struct SearchStats {
  std::uint64_t examined = 0;
};

using SubsetPredicate = std::function<bool(const std::vector<Edge>&)>;

// Walks subsets of `pool` in order of increasing size (0..max_size) and, within
// a size, lexicographically by position in `pool`; returns the first subset
// `accept` admits. `accept` must be safe to call concurrently. Throws
// BudgetExceeded past options.max_candidates.
std::optional<std::vector<Edge>> first_accepted_subset(
    std::span<const Edge> pool, int max_size, const SubsetPredicate& accept,
    const SearchOptions& options = {}, SearchStats* stats = nullptr);

}  // namespace dilaug
