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

#include "vca/design.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "vca/exact.h"
#include "vca/hypergraph_io.h"

namespace vca {
namespace {

// Visits every size-`size` subset of the sorted `block` as a sorted vector.
template <typename Fn>
void ForEachSubset(const Edge& block, int size, Fn&& fn) {
  const int n = static_cast<int>(block.size());
  if (size > n) return;
  std::vector<int> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  std::vector<int> subset(size);
  while (true) {
    for (int i = 0; i < size; ++i) subset[i] = block[pick[i]];
    fn(subset);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

void CheckDesignParams(const DesignParams& p) {
  if (!(1 <= p.s && p.s <= p.t && p.t <= p.k) || p.lambda < 1) {
    throw std::invalid_argument(
        fmt::format("invalid design parameters {}-({},{},{})", p.s, p.k, p.t,
                    p.lambda));
  }
}

DesignValidation ValidateDesign(const DesignBlocks& d, RegularityCheck mode) {
  DesignValidation result;
  const DesignParams& p = d.params;
  try {
    CheckDesignParams(p);
  } catch (const std::invalid_argument& e) {
    result.violation = e.what();
    return result;
  }
  for (int i = 0; i < d.num_blocks(); ++i) {
    const Edge& b = d.blocks[i];
    if (static_cast<int>(b.size()) != p.t) {
      result.violation =
          fmt::format("block {} has {} points, expected {}", i, b.size(), p.t);
      return result;
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] < 0 || b[j] >= p.k) {
        result.violation = fmt::format("block {}: point {} out of range", i,
                                       b[j]);
        return result;
      }
      if (j > 0 && b[j] <= b[j - 1]) {
        result.violation =
            fmt::format("block {} is not a set of distinct sorted points", i);
        return result;
      }
    }
  }
  if (mode == RegularityCheck::kSkip) return result;

  std::optional<std::uint64_t> subsets = BinomialU64(p.k, p.s);
  if (!subsets || *subsets > kMaxRegularityCheck) return result;

  // Colex rank of a sorted s-subset: sum_i C(a_i, i + 1).
  std::vector<std::vector<std::uint64_t>> choose(
      p.k + 1, std::vector<std::uint64_t>(p.s + 1, 0));
  for (int n = 0; n <= p.k; ++n) {
    choose[n][0] = 1;
    for (int r = 1; r <= std::min(n, p.s); ++r) {
      choose[n][r] = choose[n - 1][r - 1] + (r <= n - 1 ? choose[n - 1][r] : 0);
    }
  }
  std::vector<std::uint32_t> count(*subsets, 0);
  for (int i = 0; i < d.num_blocks() && !result.violation; ++i) {
    ForEachSubset(d.blocks[i], p.s, [&](const std::vector<int>& subset) {
      if (result.violation) return;
      std::uint64_t rank = 0;
      for (int j = 0; j < p.s; ++j) rank += choose[subset[j]][j + 1];
      if (++count[rank] > static_cast<std::uint32_t>(p.lambda)) {
        result.violation = fmt::format(
            "{}-subset {{{}}} lies in more than {} blocks (block {})", p.s,
            fmt::join(subset, ","), p.lambda, i);
      }
    });
  }
  if (!result.violation) {
    auto missing = std::find_if(count.begin(), count.end(), [&](auto c) {
      return c != static_cast<std::uint32_t>(p.lambda);
    });
    if (missing != count.end()) {
      result.violation = fmt::format("some {}-subset lies in fewer than {} blocks",
                                     p.s, p.lambda);
    }
  }
  result.regularity_checked = true;
  return result;
}

DesignBlocks ReadDesign(std::istream& in, RegularityCheck mode) {
  std::vector<std::vector<long long>> lines = io_internal::ReadIntegerLines(in);
  if (lines.size() < 2 || lines[0].size() != 3 || lines[1].size() != 1) {
    throw FormatError("design file must start with 's t lambda' and 'k' lines");
  }
  DesignBlocks d;
  d.params.s = static_cast<int>(lines[0][0]);
  d.params.t = static_cast<int>(lines[0][1]);
  d.params.lambda = static_cast<int>(lines[0][2]);
  d.params.k = static_cast<int>(lines[1][0]);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    Edge block(lines[i].begin(), lines[i].end());
    std::sort(block.begin(), block.end());
    d.blocks.push_back(std::move(block));
  }
  DesignValidation check = ValidateDesign(d, mode);
  if (check.violation) throw FormatError(*check.violation);
  if (!check.regularity_checked && mode == RegularityCheck::kAuto) {
    std::clog << fmt::format(
        "warning: C({},{}) exceeds {}; lambda-regularity not checked\n",
        d.params.k, d.params.s, kMaxRegularityCheck);
  }
  return d;
}

void WriteDesign(std::ostream& out, const DesignBlocks& d) {
  out << d.params.s << ' ' << d.params.t << ' ' << d.params.lambda << '\n';
  out << d.params.k << '\n';
  for (const Edge& block : d.blocks) {
    Edge sorted = block;
    std::sort(sorted.begin(), sorted.end());
    out << fmt::format("{}\n", fmt::join(sorted, " "));
  }
}

DesignBlocks LoadDesign(const std::string& path, RegularityCheck mode) {
  std::ifstream in(path);
  if (!in) throw FormatError(fmt::format("cannot open '{}'", path));
  return ReadDesign(in, mode);
}

void SaveDesign(const std::string& path, const DesignBlocks& d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  WriteDesign(out, d);
}

Hypergraph DesignToHypergraph(const DesignBlocks& d) {
  return Hypergraph(d.params.k, d.blocks);
}

}  // namespace vca
