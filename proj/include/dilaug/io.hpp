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

#include <string>
#include <string_view>
#include <vector>

#include "dilaug/instance.hpp"

namespace dilaug {

// Instance text format, one record per line, vertices 1-based:
//   c <comment>
//   p dilaug <n> <k> <p>/<q>     first non-comment line, exactly once
//   e <u> <v> <w>                Gamma edge, integer w >= 1
//   g <u> <v>                    G edge
// Throws ParseError with the offending line number.
Instance parse_instance(std::string_view text);

// Header, then Gamma edges and G edges in lexicographic order.
std::string serialize_instance(const Instance& inst);

// Lines "s <u> <v>", 1-based. Comment lines start with 'c'.
Solution parse_solution(std::string_view text, int n);
std::string serialize_solution(const Solution& s);

// Lines "l <vertex> <label>", 1-based.
std::string serialize_labels(const std::vector<std::string>& labels);

// Whole-file helpers; throw UsageError when the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace dilaug
