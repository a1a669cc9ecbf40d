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

#include "vca/coverage.h"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "vca/parallel.h"

namespace vca {
namespace {

void CheckDimensions(const VcaArray& a, const Hypergraph& h) {
  CheckArray(a);
  if (a.k != h.num_vertices()) {
    throw std::invalid_argument(fmt::format(
        "array has {} columns, hypergraph has {} vertices", a.k,
        h.num_vertices()));
  }
}

// First tuple of edge `e` not present in any row of `a`, or -1. `seen` is
// scratch storage of at least v^{|e|} entries.
long long FirstMissing(const VcaArray& a, const Edge& e,
                       std::vector<std::uint8_t>& seen) {
  seen.assign(TupleSpace(a.v, static_cast<int>(e.size())), 0);
  for (int r = 0; r < a.n; ++r) seen[TupleIndex(e, a.row(r), a.v)] = 1;
  auto it = std::find(seen.begin(), seen.end(), 0);
  return it == seen.end() ? -1 : static_cast<long long>(it - seen.begin());
}

VerifyResult Witness(const VcaArray& a, const Hypergraph& h, int edge) {
  VerifyResult result;
  if (edge < 0) return result;
  std::vector<std::uint8_t> seen;
  long long missing = FirstMissing(a, h.edge(edge), seen);
  result.covered = false;
  result.edge = edge;
  result.missing = TupleFromIndex(static_cast<std::uint64_t>(missing),
                                  static_cast<int>(h.edge(edge).size()), a.v);
  return result;
}

}  // namespace

void CheckArray(const VcaArray& a) {
  if (a.n < 0 || a.k < 0 || a.v < 2 ||
      a.cells.size() != static_cast<std::size_t>(a.n) * a.k) {
    throw std::invalid_argument(fmt::format(
        "malformed array n={} k={} v={} cells={}", a.n, a.k, a.v,
        a.cells.size()));
  }
  for (int cell : a.cells) {
    if (cell < 0 || cell >= a.v) {
      throw std::invalid_argument(
          fmt::format("cell value {} outside [0, {})", cell, a.v));
    }
  }
}

std::uint64_t TupleIndex(const Edge& e, std::span<const int> row, int v) {
  std::uint64_t index = 0;
  for (int col : e) index = index * v + row[col];
  return index;
}

std::vector<int> TupleFromIndex(std::uint64_t index, int width, int v) {
  std::vector<int> tuple(width);
  for (int i = width - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(index % v);
    index /= v;
  }
  return tuple;
}

std::uint64_t TupleSpace(int v, int width) {
  std::uint64_t space = 1;
  for (int i = 0; i < width; ++i) {
    space *= v;
    if (space > kMaxTupleSpace) {
      throw std::invalid_argument(fmt::format(
          "tuple space {}^{} exceeds the 2^24 limit", v, width));
    }
  }
  return space;
}

VerifyResult Verify(const VcaArray& a, const Hypergraph& h) {
  CheckDimensions(a, h);
  const int m = h.num_edges();
  for (const Edge& e : h.edges()) TupleSpace(a.v, static_cast<int>(e.size()));
  int first_bad = INT_MAX;
#pragma omp parallel num_threads(WorkerCount())
  {
    std::vector<std::uint8_t> seen;
#pragma omp for schedule(dynamic, 8) reduction(min : first_bad)
    for (int e = 0; e < m; ++e) {
      if (e < first_bad && FirstMissing(a, h.edge(e), seen) >= 0) {
        first_bad = e;
      }
    }
  }
  return Witness(a, h, first_bad == INT_MAX ? -1 : first_bad);
}

namespace serial {

VerifyResult Verify(const VcaArray& a, const Hypergraph& h) {
  CheckDimensions(a, h);
  std::vector<std::uint8_t> seen;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (FirstMissing(a, h.edge(e), seen) >= 0) return Witness(a, h, e);
  }
  return VerifyResult{};
}

}  // namespace serial

CoverageState::CoverageState(const Hypergraph& h, int v)
    : h_(h), v_(v), rank_(h.num_edges() == 0 ? 0 : Rank(h)) {
  if (v < 2) throw std::invalid_argument("alphabet size must be >= 2");
  TupleSpace(v, rank_);
  offset_.push_back(0);
  for (const Edge& e : h_.edges()) {
    std::uint64_t space = TupleSpace(v, static_cast<int>(e.size()));
    offset_.push_back(offset_.back() + space);
    uncovered_.push_back(space);
    total_uncovered_ += space;
  }
  bits_.assign(offset_.back(), 0);
}

std::uint64_t CoverageState::AddRow(std::span<const int> row) {
  std::uint64_t fresh = 0;
  for (int e = 0; e < h_.num_edges(); ++e) {
    std::uint8_t& bit = bits_[offset_[e] + TupleIndex(h_.edge(e), row, v_)];
    if (bit == 0) {
      bit = 1;
      --uncovered_[e];
      ++fresh;
    }
  }
  total_uncovered_ -= fresh;
  return fresh;
}

std::uint64_t ConsistentUncovered(const CoverageState& state, int edge,
                                  const PartialRow& partial) {
  const Edge& e = state.hypergraph().edge(edge);
  const int v = state.v();
  const int width = static_cast<int>(e.size());
  if (state.uncovered(edge) == 0) return 0;
  // Odometer over the unassigned positions of the edge.
  std::vector<int> free_positions;
  std::vector<int> tuple(width);
  for (int i = 0; i < width; ++i) {
    int symbol = partial[e[i]];
    if (symbol == kUnset) {
      free_positions.push_back(i);
      tuple[i] = 0;
    } else {
      tuple[i] = symbol;
    }
  }
  std::uint64_t count = 0;
  while (true) {
    std::uint64_t index = 0;
    for (int symbol : tuple) index = index * v + symbol;
    if (!state.covered(edge, index)) ++count;
    std::size_t p = 0;
    while (p < free_positions.size() && ++tuple[free_positions[p]] == v) {
      tuple[free_positions[p++]] = 0;
    }
    if (p == free_positions.size()) break;
  }
  return count;
}

std::uint64_t ScaledDensity(const CoverageState& state,
                            const PartialRow& partial) {
  const Hypergraph& h = state.hypergraph();
  if (static_cast<int>(partial.size()) != h.num_vertices()) {
    throw std::invalid_argument("partial row length differs from k");
  }
  std::uint64_t total = 0;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (state.uncovered(e) == 0) continue;
    int unset = 0;
    for (int col : h.edge(e)) unset += partial[col] == kUnset;
    std::uint64_t scale = 1;
    for (int i = 0; i < state.rank() - unset; ++i) scale *= state.v();
    total += ConsistentUncovered(state, e, partial) * scale;
  }
  return total;
}

double Density(const CoverageState& state, const PartialRow& partial) {
  double denominator = 1;
  for (int i = 0; i < state.rank(); ++i) denominator *= state.v();
  return static_cast<double>(ScaledDensity(state, partial)) / denominator;
}

}  // namespace vca
