// Copyright 2026 The VCA Bounds Authors
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

#include "vca/exact.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace vca {

BigInt Binomial(long long n, long long k) {
  if (n < 0) throw std::invalid_argument("Binomial: negative n");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // result stays an exact binomial C(n - k + i, i) after step i.
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::optional<std::uint64_t> BinomialU64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt value = Binomial(static_cast<long long>(n), static_cast<long long>(k));
  if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return value.convert_to<std::uint64_t>();
}

std::string ToString(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

long double ToLongDouble(const Rational& r) {
  return r.convert_to<long double>();
}

}  // namespace vca
