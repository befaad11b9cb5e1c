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

#include "dilaug/stretch.hpp"

#include <charconv>
#include <numeric>

#include "dilaug/errors.hpp"

namespace dilaug {

namespace {

std::optional<std::int64_t> parse_positive(std::string_view text) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || value < 1) return std::nullopt;
  return value;
}

}  // namespace

Stretch::Stretch(std::int64_t num, std::int64_t den) {
  if (num < 1 || den < 1) {
    throw UsageError("stretch must be a positive rational, got " +
                     std::to_string(num) + "/" + std::to_string(den));
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::optional<Stretch> Stretch::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_positive(text);
    if (!num) return std::nullopt;
    return Stretch(*num, 1);
  }
  auto num = parse_positive(text.substr(0, slash));
  auto den = parse_positive(text.substr(slash + 1));
  if (!num || !den) return std::nullopt;
  return Stretch(*num, *den);
}

std::int64_t Stretch::floor_times(std::int64_t factor) const {
  if (factor < 0) throw UsageError("floor_times with negative factor");
  const __int128 product = static_cast<__int128>(num_) * factor;
  return static_cast<std::int64_t>(product / den_);
}

Stretch Stretch::operator*(const Stretch& other) const {
  const std::int64_t g1 = std::gcd(num_, other.den_);
  const std::int64_t g2 = std::gcd(other.num_, den_);
  return Stretch((num_ / g1) * (other.num_ / g2),
                 (den_ / g2) * (other.den_ / g1));
}

std::string Stretch::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Stretch& a, const Stretch& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool stretch_leq(Distance dg, std::int64_t dgamma, const Stretch& t) {
  if (dgamma < 1) throw UsageError("stretch_leq needs dgamma >= 1");
  if (!dg.finite()) return false;
  return static_cast<__int128>(t.den()) * dg.value() <=
         static_cast<__int128>(t.num()) * dgamma;
}

std::strong_ordering operator<=>(const Dilation& a, const Dilation& b) {
  if (a.infinite() || b.infinite()) {
    return static_cast<int>(a.infinite()) <=> static_cast<int>(b.infinite());
  }
  return *a.ratio <=> *b.ratio;
}

std::ostream& operator<<(std::ostream& os, const Dilation& d) {
  if (d.infinite()) return os << "inf";
  return os << *d.ratio;
}

}  // namespace dilaug
