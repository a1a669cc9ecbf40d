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

#ifndef VCA_COVERAGE_H_
#define VCA_COVERAGE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "vca/hypergraph.h"

namespace vca {

// n x k array over Z_v, row-major.
struct VcaArray {
  int n = 0;
  int k = 0;
  int v = 2;
  std::vector<int> cells;

  VcaArray() = default;
  VcaArray(int rows, int cols, int alphabet)
      : n(rows), k(cols), v(alphabet),
        cells(static_cast<std::size_t>(rows) * cols, 0) {}

  int& at(int row, int col) { return cells[static_cast<std::size_t>(row) * k + col]; }
  int at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * k + col];
  }
  std::span<const int> row(int r) const {
    return {cells.data() + static_cast<std::size_t>(r) * k,
            static_cast<std::size_t>(k)};
  }

  friend bool operator==(const VcaArray&, const VcaArray&) = default;
};

// Throws std::invalid_argument on inconsistent dimensions or a cell outside
// [0, v).
void CheckArray(const VcaArray& a);

// Index of the tuple an edge sees: symbols in edge order, first vertex most
// significant, so numeric order is lexicographic order.
std::uint64_t TupleIndex(const Edge& e, std::span<const int> row, int v);
std::vector<int> TupleFromIndex(std::uint64_t index, int width, int v);

// v^width; throws std::invalid_argument when it exceeds kMaxTupleSpace.
std::uint64_t TupleSpace(int v, int width);
inline constexpr std::uint64_t kMaxTupleSpace = std::uint64_t{1} << 24;

struct VerifyResult {
  bool covered = true;
  int edge = -1;             // lowest-index uncovered edge
  std::vector<int> missing;  // lexicographically first missing tuple of it
};

// Exhaustive coverage check. Edges are scanned by an OpenMP kernel and the
// lowest uncovered edge index is found by reduction, so the witness matches
// serial::Verify. Throws std::invalid_argument when a.k != h.num_vertices()
// or the array is malformed.
VerifyResult Verify(const VcaArray& a, const Hypergraph& h);

// Tuples already covered by the processed rows, per edge, as bitmaps of size
// v^{|e|}. Construction throws std::invalid_argument when a bitmap would
// exceed kMaxTupleSpace entries.
class CoverageState {
 public:
  CoverageState(const Hypergraph& h, int v);

  // Marks the row's tuples; returns how many were newly covered.
  std::uint64_t AddRow(std::span<const int> row);

  const Hypergraph& hypergraph() const { return h_; }
  int v() const { return v_; }
  int rank() const { return rank_; }

  bool covered(int edge, std::uint64_t tuple) const {
    return bits_[offset_[edge] + tuple] != 0;
  }
  std::uint64_t uncovered(int edge) const { return uncovered_[edge]; }
  std::uint64_t total_uncovered() const { return total_uncovered_; }
  std::uint64_t tuple_space(int edge) const {
    return offset_[edge + 1] - offset_[edge];
  }

  friend bool operator==(const CoverageState&, const CoverageState&) = default;

 private:
  Hypergraph h_;
  int v_;
  int rank_;
  std::vector<std::uint64_t> offset_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint64_t> uncovered_;
  std::uint64_t total_uncovered_ = 0;
};

// Partial row: kUnset marks an unassigned column.
inline constexpr int kUnset = -1;
using PartialRow = std::vector<int>;

// Uncovered tuples of `edge` consistent with the fixed columns of `partial`.
std::uint64_t ConsistentUncovered(const CoverageState& state, int edge,
                                  const PartialRow& partial);

// Expected number of newly covered tuples when the unassigned columns are
// filled uniformly at random, scaled by v^rank so it is an exact integer:
// sum over edges of ConsistentUncovered * v^(rank - #unassigned columns of e).
std::uint64_t ScaledDensity(const CoverageState& state,
                            const PartialRow& partial);

// ScaledDensity / v^rank.
double Density(const CoverageState& state, const PartialRow& partial);

namespace serial {
VerifyResult Verify(const VcaArray& a, const Hypergraph& h);
}  // namespace serial

}  // namespace vca

#endif  // VCA_COVERAGE_H_
