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

#ifndef VCA_HYPERGRAPH_H_
#define VCA_HYPERGRAPH_H_

#include <optional>
#include <string>
#include <vector>

namespace vca {

// A hyperedge is stored as a strictly increasing list of vertex indices.
using Edge = std::vector<int>;

// Coverage-requirement structure H = (V, E) with V = {0, ..., k-1}.
//
// The constructor canonicalizes every edge (sorts its vertices) but does not
// check the invariants; call `Validate` for that. Edge order is preserved.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Returns std::nullopt when every invariant holds (vertices in range, no empty
// edge, no repeated vertex, no duplicate edge), otherwise a description of the
// first violation found in edge order.
std::optional<std::string> Validate(const Hypergraph& h);

// Largest edge cardinality. Throws std::invalid_argument on an empty edge list.
int Rank(const Hypergraph& h);

// Indices j != edge_index whose edge shares at least one vertex with
// edge `edge_index`, in increasing order.
std::vector<int> IntersectingEdges(const Hypergraph& h, int edge_index);

// Vertex -> incident edge indices. Optional acceleration structure for large
// instances; every list is sorted.
class IncidenceIndex {
 public:
  explicit IncidenceIndex(const Hypergraph& h);

  const std::vector<int>& incident(int vertex) const {
    return incident_[vertex];
  }

 private:
  std::vector<std::vector<int>> incident_;
};

// Same result as `IntersectingEdges` using an incidence index.
std::vector<int> IntersectingEdges(const Hypergraph& h,
                                   const IncidenceIndex& index, int edge_index);

// |Gamma(e)| for every edge e. OpenMP kernel over edges; see
// serial::NeighborCounts for the reference.
std::vector<int> NeighborCounts(const Hypergraph& h);

// d = max over edges of the number of other edges it intersects.
// Throws std::invalid_argument on an empty edge list.
int DependencyDegree(const Hypergraph& h);

// Assignment of every edge to one class; every edge in class c has
// cardinality class_rank[c].
struct EdgeClassPartition {
  std::vector<int> class_of;
  std::vector<int> class_rank;

  int num_classes() const { return static_cast<int>(class_rank.size()); }
};

// One class per distinct edge cardinality, classes ordered by cardinality.
EdgeClassPartition PartitionByCardinality(const Hypergraph& h);

// counts[i][j] = max over edges a in class i of the number of class-j edges
// (other than a) that intersect a.
struct DependencyMatrix {
  std::vector<std::vector<int>> counts;

  int size() const { return static_cast<int>(counts.size()); }
  int RowSum(int row) const;

  friend bool operator==(const DependencyMatrix&,
                         const DependencyMatrix&) = default;
};

// Throws std::invalid_argument when the partition does not match `h`
// (wrong length, class index out of range, or cardinality mismatch).
DependencyMatrix ClassifyEdges(const Hypergraph& h,
                               const EdgeClassPartition& classes);

namespace serial {

// O(|E|^2 t) pairwise reference implementations.
std::vector<int> NeighborCounts(const Hypergraph& h);
DependencyMatrix ClassifyEdges(const Hypergraph& h,
                               const EdgeClassPartition& classes);

}  // namespace serial

}  // namespace vca

#endif  // VCA_HYPERGRAPH_H_
