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

#ifndef VCA_CONSTRUCT_H_
#define VCA_CONSTRUCT_H_

#include <cstdint>
#include <vector>

#include "vca/coverage.h"
#include "vca/hypergraph.h"

namespace vca {

// n x h.num_vertices() array with independent uniform cells, filled row-major
// from Rng(seed).
VcaArray RandomFill(const Hypergraph& h, int v, int n, std::uint64_t seed);

struct MoserTardosResult {
  VcaArray array;
  bool success = false;
  long long rounds = 0;  // resampling steps performed
};

// Starts from RandomFill(h, v, n, seed); while some edge is uncovered,
// resamples every cell in the columns of the lowest-index uncovered edge.
// Gives up after max_rounds resamplings.
MoserTardosResult MoserTardos(const Hypergraph& h, int v, int n,
                              std::uint64_t seed, long long max_rounds);

// Worst-case row count of the density greedy: starting from U = |E| v^t
// uncovered tuples, each row removes at least ceil(U / v^t); returns the
// number of rows until U reaches 0. Never exceeds ceil(NDens(|E|, t, v)) when
// that bound is not an integer.
long long VarDensRowLimit(long long num_edges, int t, int v);

struct VarDensStats {
  // Per row: newly covered tuples, and the row's starting density scaled by
  // v^rank.
  std::vector<std::uint64_t> new_coverage;
  std::vector<std::uint64_t> scaled_expectation;
};

// Density greedy (derandomized random fill). Rows are added until every edge
// is covered. Within a row, columns are fixed in descending order of incident
// edges that still have uncovered tuples (ties by index); each takes the
// symbol maximizing the density of the extended partial row, ties to the
// smallest symbol.
//
// Throws std::logic_error if a row covers fewer tuples than its starting
// density or the row count exceeds VarDensRowLimit. Throws
// std::invalid_argument for v < 2, an empty edge list, or a tuple space above
// kMaxTupleSpace.
VcaArray VarDens(const Hypergraph& h, int v, VarDensStats* stats = nullptr);

// Applies a seeded uniform vertex relabeling, runs VarDens, and maps the
// columns back, so the result is a VCA for `h` itself. seed 0 is the
// identity.
VcaArray VarDensRelabeled(const Hypergraph& h, int v, std::uint64_t seed);

}  // namespace vca

#endif  // VCA_CONSTRUCT_H_
