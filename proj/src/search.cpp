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

#include "dilaug/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "dilaug/errors.hpp"

namespace dilaug {

namespace {

constexpr std::size_t kBatchSize = 1024;

// Lexicographic successor of a strictly increasing index tuple over [0, n).
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  std::size_t i = r;
  while (i > 0) {
    --i;
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Index of the first accepted subset in `batch`, or batch.size().
std::size_t first_hit(const std::vector<std::vector<Edge>>& batch,
                      const SubsetPredicate& accept, int workers) {
  if (workers <= 1 || batch.size() < 2) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (accept(batch[i])) return i;
    }
    return batch.size();
  }
  std::atomic<std::size_t> best{batch.size()};
  {
    std::vector<std::jthread> pool;
    const auto count = static_cast<std::size_t>(workers);
    for (std::size_t w = 0; w < count; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < batch.size(); i += count) {
          if (i >= best.load()) return;
          if (accept(batch[i])) {
            std::size_t current = best.load();
            while (i < current && !best.compare_exchange_weak(current, i)) {
            }
            return;
          }
        }
      });
    }
  }
  return best.load();
}

}  // namespace

std::optional<std::vector<Edge>> first_accepted_subset(
    std::span<const Edge> pool, int max_size, const SubsetPredicate& accept,
    const SearchOptions& options, SearchStats* stats) {
  const std::size_t limit =
      std::min<std::size_t>(std::max(max_size, 0), pool.size());
  std::uint64_t generated = 0;
  std::vector<std::vector<Edge>> batch;
  batch.reserve(kBatchSize);

  auto flush = [&]() -> std::optional<std::vector<Edge>> {
    generated += batch.size();
    if (stats) stats->examined += batch.size();
    if (generated > options.max_candidates) {
      throw BudgetExceeded("budget exceeded: more than " +
                           std::to_string(options.max_candidates) +
                           " candidate subsets");
    }
    const std::size_t hit = first_hit(batch, accept, options.workers);
    std::optional<std::vector<Edge>> found;
    if (hit < batch.size()) found = batch[hit];
    batch.clear();
    return found;
  };

  for (std::size_t size = 0; size <= limit; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      std::vector<Edge> subset;
      subset.reserve(size);
      for (std::size_t i : idx) subset.push_back(pool[i]);
      batch.push_back(std::move(subset));
      if (batch.size() == kBatchSize) {
        if (auto found = flush()) return found;
      }
    } while (size > 0 && next_combination(idx, pool.size()));
    // Finish each size before starting the next so smaller subsets win.
    if (!batch.empty()) {
      if (auto found = flush()) return found;
    }
  }
  return std::nullopt;
}

}  // namespace dilaug
