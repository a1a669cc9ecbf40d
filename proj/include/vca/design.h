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

#ifndef VCA_DESIGN_H_
#define VCA_DESIGN_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vca/hypergraph.h"

namespace vca {

// Parameters of an s-(k,t,lambda) design: t-subsets of a k-set such that
// every s-subset lies in exactly lambda blocks.
struct DesignParams {
  int s = 2;
  int k = 7;
  int t = 3;
  int lambda = 1;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

// Throws std::invalid_argument unless 1 <= s <= t <= k and lambda >= 1.
void CheckDesignParams(const DesignParams& p);

struct DesignBlocks {
  DesignParams params;
  std::vector<Edge> blocks;  // each sorted

  int num_blocks() const { return static_cast<int>(blocks.size()); }
};

// Enumeration is attempted only when C(k, s) is at most this.
inline constexpr std::uint64_t kMaxRegularityCheck = 10'000'000;

enum class RegularityCheck {
  kAuto,  // enumerate when C(k, s) <= kMaxRegularityCheck, else trust
  kSkip,
};

struct DesignValidation {
  std::optional<std::string> violation;
  // False when the lambda-regularity check was skipped.
  bool regularity_checked = false;
};

// Checks parameter sanity, block shape (t distinct in-range points), and
// lambda-regularity by enumeration.
DesignValidation ValidateDesign(const DesignBlocks& d,
                                RegularityCheck mode = RegularityCheck::kAuto);

// Design file: line 1 "s t lambda", line 2 "k", then one block per line.
// '#' comment lines are ignored. Reading validates and throws FormatError on
// a malformed file or violated invariant; skipped regularity checks print a
// warning to std::clog.
DesignBlocks ReadDesign(std::istream& in,
                        RegularityCheck mode = RegularityCheck::kAuto);
void WriteDesign(std::ostream& out, const DesignBlocks& d);

DesignBlocks LoadDesign(const std::string& path,
                        RegularityCheck mode = RegularityCheck::kAuto);
void SaveDesign(const std::string& path, const DesignBlocks& d);

Hypergraph DesignToHypergraph(const DesignBlocks& d);

}  // namespace vca

#endif  // VCA_DESIGN_H_
