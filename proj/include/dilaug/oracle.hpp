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

#include "dilaug/instance.hpp"
#include "dilaug/search.hpp"

namespace dilaug {

// Brute force over all subsets of non-edges of G, smallest first, ties broken
// lexicographically. The returned solution has minimum cardinality and is the
// same for every worker count.
Verdict solve_min(const Instance& inst, const SearchOptions& options = {},
                  SearchStats* stats = nullptr);

}  // namespace dilaug
