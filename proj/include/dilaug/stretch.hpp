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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "dilaug/graph.hpp"

namespace dilaug {

// Reduced positive rational num/den. Used both for the target stretch t
// (where num/den >= 1 is enforced by Instance) and for measured dilations.
class Stretch {
 public:
  constexpr Stretch() = default;
  // Throws UsageError unless num >= 1 and den >= 1.
  Stretch(std::int64_t num, std::int64_t den);

  // Accepts "p/q" or "p".
  static std::optional<Stretch> parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::int64_t floor() const { return num_ / den_; }
  // floor(this * factor) for a nonnegative integer factor.
  std::int64_t floor_times(std::int64_t factor) const;
  Stretch operator*(const Stretch& other) const;

  std::string to_string() const;

  friend bool operator==(const Stretch&, const Stretch&) = default;
  friend std::strong_ordering operator<=>(const Stretch& a, const Stretch& b);
  friend std::ostream& operator<<(std::ostream& os, const Stretch& s) {
    return os << s.to_string();
  }

 private:
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

// Exact test of dg <= t * dgamma by cross-multiplication. Infinite dg never
// satisfies it. Precondition: dgamma >= 1.
bool stretch_leq(Distance dg, std::int64_t dgamma, const Stretch& t);

// A measured dilation: a ratio, or infinite when some pair is unreachable.
struct Dilation {
  std::optional<Stretch> ratio;

  bool infinite() const { return !ratio.has_value(); }
  // Infinite is larger than every finite ratio.
  friend std::strong_ordering operator<=>(const Dilation& a,
                                          const Dilation& b);
  friend bool operator==(const Dilation& a, const Dilation& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const Dilation& d);
};

}  // namespace dilaug
