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

#ifndef VCA_EXACT_H_
#define VCA_EXACT_H_

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace vca {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) exactly; zero when k < 0 or k > n. n must be non-negative.
BigInt Binomial(long long n, long long k);

// C(n, k) if it fits in 64 bits, std::nullopt otherwise.
std::optional<std::uint64_t> BinomialU64(std::uint64_t n, std::uint64_t k);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& r);

// Nearest long double.
long double ToLongDouble(const Rational& r);

}  // namespace vca

#endif  // VCA_EXACT_H_
