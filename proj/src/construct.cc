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

#include "vca/construct.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "vca/rng.h"

namespace vca {
namespace {

// Whether every v^{|e|} tuple appears. `stamp` is scratch space reused across
// calls; `epoch` must differ between calls sharing it.
bool EdgeCovered(const VcaArray& a, const Edge& e,
                 std::vector<std::uint32_t>& stamp, std::uint32_t epoch) {
  const std::uint64_t space = TupleSpace(a.v, static_cast<int>(e.size()));
  if (static_cast<std::uint64_t>(a.n) < space) return false;
  if (stamp.size() < space) stamp.resize(space, 0);
  std::uint64_t distinct = 0;
  for (int r = 0; r < a.n && distinct < space; ++r) {
    std::uint32_t& s = stamp[TupleIndex(e, a.row(r), a.v)];
    if (s != epoch) {
      s = epoch;
      ++distinct;
    }
  }
  return distinct == space;
}

std::uint64_t Power(int base, int exponent) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// tally[s] += uncovered tuples of `edge` consistent with `partial` and with
// column `col` (unset in `partial`) set to s, times `scale`.
void TallyBySymbol(const CoverageState& state, int edge, int col,
                   const PartialRow& partial, std::uint64_t scale,
                   std::vector<std::uint64_t>& tally) {
  const Edge& e = state.hypergraph().edge(edge);
  const int v = state.v();
  const int width = static_cast<int>(e.size());
  std::vector<int> free_positions;
  std::vector<int> tuple(width);
  int col_position = -1;
  for (int i = 0; i < width; ++i) {
    if (e[i] == col) col_position = i;
    int symbol = partial[e[i]];
    if (symbol == kUnset) {
      free_positions.push_back(i);
      tuple[i] = 0;
    } else {
      tuple[i] = symbol;
    }
  }
  while (true) {
    std::uint64_t index = 0;
    for (int symbol : tuple) index = index * v + symbol;
    if (!state.covered(edge, index)) tally[tuple[col_position]] += scale;
    std::size_t p = 0;
    while (p < free_positions.size() && ++tuple[free_positions[p]] == v) {
      tuple[free_positions[p++]] = 0;
    }
    if (p == free_positions.size()) break;
  }
}

}  // namespace

VcaArray RandomFill(const Hypergraph& h, int v, int n, std::uint64_t seed) {
  if (v < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (n < 0) throw std::invalid_argument("row count must be >= 0");
  VcaArray a(n, h.num_vertices(), v);
  Rng rng(seed);
  for (int& cell : a.cells) cell = static_cast<int>(rng.Uniform(v));
  return a;
}

MoserTardosResult MoserTardos(const Hypergraph& h, int v, int n,
                              std::uint64_t seed, long long max_rounds) {
  if (v < 2) throw std::invalid_argument("alphabet size must be >= 2");
  if (n < 0) throw std::invalid_argument("row count must be >= 0");
  MoserTardosResult result;
  result.array = VcaArray(n, h.num_vertices(), v);
  Rng rng(seed);
  for (int& cell : result.array.cells) cell = static_cast<int>(rng.Uniform(v));

  const IncidenceIndex index(h);
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;
  std::set<int> violated;
  for (int e = 0; e < h.num_edges(); ++e) {
    if (!EdgeCovered(result.array, h.edge(e), stamp, ++epoch)) violated.insert(e);
  }
  while (!violated.empty()) {
    if (result.rounds >= max_rounds) return result;
    const int e = *violated.begin();
    for (int r = 0; r < n; ++r) {
      for (int col : h.edge(e)) {
        result.array.at(r, col) = static_cast<int>(rng.Uniform(v));
      }
    }
    ++result.rounds;
    // Only events sharing a column with e can change state.
    std::vector<int> affected = IntersectingEdges(h, index, e);
    affected.push_back(e);
    for (int f : affected) {
      if (EdgeCovered(result.array, h.edge(f), stamp, ++epoch)) {
        violated.erase(f);
      } else {
        violated.insert(f);
      }
    }
  }
  result.success = true;
  return result;
}

long long VarDensRowLimit(long long num_edges, int t, int v) {
  if (num_edges < 1) throw std::invalid_argument("need at least one edge");
  const std::uint64_t per_row = TupleSpace(v, t);
  std::uint64_t uncovered = static_cast<std::uint64_t>(num_edges) * per_row;
  long long rows = 0;
  while (uncovered > 0) {
    uncovered -= (uncovered + per_row - 1) / per_row;
    ++rows;
  }
  return rows;
}

VcaArray VarDens(const Hypergraph& h, int v, VarDensStats* stats) {
  if (h.num_edges() == 0) throw std::invalid_argument("hypergraph has no edges");
  CoverageState state(h, v);
  const int k = h.num_vertices();
  const int rank = state.rank();
  const IncidenceIndex index(h);
  const long long limit = VarDensRowLimit(h.num_edges(), rank, v);
  const std::uint64_t full_scale = Power(v, rank);

  std::vector<std::vector<int>> rows;
  std::vector<int> order(k);
  std::vector<int> active(k);
  std::vector<std::uint64_t> tally(v);
  while (state.total_uncovered() > 0) {
    PartialRow partial(k, kUnset);
    const std::uint64_t expectation = ScaledDensity(state, partial);

    for (int c = 0; c < k; ++c) {
      active[c] = 0;
      for (int e : index.incident(c)) active[c] += state.uncovered(e) > 0;
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return active[a] > active[b]; });

    for (int col : order) {
      std::fill(tally.begin(), tally.end(), 0);
      for (int e : index.incident(col)) {
        if (state.uncovered(e) == 0) continue;
        int unset = 0;
        for (int c : h.edge(e)) unset += partial[c] == kUnset;
        // After fixing `col`, the edge has unset - 1 free columns.
        TallyBySymbol(state, e, col, partial, Power(v, rank - unset + 1), tally);
      }
      partial[col] = static_cast<int>(
          std::max_element(tally.begin(), tally.end()) - tally.begin());
    }

    const std::uint64_t fresh = state.AddRow(partial);
    if (fresh * full_scale < expectation) {
      throw std::logic_error(fmt::format(
          "row {} covered {} new tuples, below its expectation {}/{}",
          rows.size(), fresh, expectation, full_scale));
    }
    if (stats != nullptr) {
      stats->new_coverage.push_back(fresh);
      stats->scaled_expectation.push_back(expectation);
    }
    rows.push_back(std::move(partial));
    if (static_cast<long long>(rows.size()) > limit) {
      throw std::logic_error(
          fmt::format("density greedy exceeded its row guarantee {}", limit));
    }
  }

  VcaArray a(static_cast<int>(rows.size()), k, v);
  for (int r = 0; r < a.n; ++r) {
    std::copy(rows[r].begin(), rows[r].end(), a.cells.begin() + static_cast<std::ptrdiff_t>(r) * k);
  }
  return a;
}

VcaArray VarDensRelabeled(const Hypergraph& h, int v, std::uint64_t seed) {
  const int k = h.num_vertices();
  std::vector<int> label(k);
  std::iota(label.begin(), label.end(), 0);
  if (seed != 0) {
    Rng rng(seed);
    for (int i = k - 1; i > 0; --i) {
      std::swap(label[i], label[rng.Uniform(static_cast<std::uint64_t>(i) + 1)]);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(h.num_edges());
  for (const Edge& e : h.edges()) {
    Edge mapped;
    for (int vertex : e) mapped.push_back(label[vertex]);
    edges.push_back(std::move(mapped));
  }
  VcaArray relabeled = VarDens(Hypergraph(k, std::move(edges)), v);
  VcaArray a(relabeled.n, k, v);
  for (int r = 0; r < a.n; ++r) {
    for (int c = 0; c < k; ++c) a.at(r, c) = relabeled.at(r, label[c]);
  }
  return a;
}

}  // namespace vca
