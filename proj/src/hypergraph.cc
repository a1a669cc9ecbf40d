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

#include "vca/hypergraph.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "vca/parallel.h"

namespace vca {
namespace {

// Both edges are sorted, so a merge walk decides intersection.
bool Intersects(const Edge& a, const Edge& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

void CheckEdgeIndex(const Hypergraph& h, int edge_index) {
  if (edge_index < 0 || edge_index >= h.num_edges()) {
    throw std::out_of_range(fmt::format("edge index {} out of range [0, {})",
                                        edge_index, h.num_edges()));
  }
}

void CheckPartition(const Hypergraph& h, const EdgeClassPartition& classes) {
  if (static_cast<int>(classes.class_of.size()) != h.num_edges()) {
    throw std::invalid_argument(
        fmt::format("partition covers {} edges, hypergraph has {}",
                    classes.class_of.size(), h.num_edges()));
  }
  for (int e = 0; e < h.num_edges(); ++e) {
    int c = classes.class_of[e];
    if (c < 0 || c >= classes.num_classes()) {
      throw std::invalid_argument(
          fmt::format("edge {} assigned to unknown class {}", e, c));
    }
    if (static_cast<int>(h.edge(e).size()) != classes.class_rank[c]) {
      throw std::invalid_argument(
          fmt::format("edge {} has cardinality {} but class {} has rank {}", e,
                      h.edge(e).size(), c, classes.class_rank[c]));
    }
  }
}

}  // namespace

Hypergraph::Hypergraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  for (Edge& e : edges_) std::sort(e.begin(), e.end());
}

std::optional<std::string> Validate(const Hypergraph& h) {
  if (h.num_vertices() < 0) {
    return fmt::format("negative vertex count {}", h.num_vertices());
  }
  std::set<Edge> seen;
  for (int i = 0; i < h.num_edges(); ++i) {
    const Edge& e = h.edge(i);
    if (e.empty()) return fmt::format("edge {} is empty", i);
    for (int vertex : e) {
      if (vertex < 0 || vertex >= h.num_vertices()) {
        return fmt::format("edge {}: vertex {} out of range [0, {})", i,
                           vertex, h.num_vertices());
      }
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      return fmt::format("edge {} repeats a vertex", i);
    }
    if (!seen.insert(e).second) {
      return fmt::format("edge {} duplicates an earlier edge {{{}}}", i,
                         fmt::join(e, ","));
    }
  }
  return std::nullopt;
}

int Rank(const Hypergraph& h) {
  if (h.num_edges() == 0) {
    throw std::invalid_argument("rank of a hypergraph with no edges");
  }
  std::size_t rank = 0;
  for (const Edge& e : h.edges()) rank = std::max(rank, e.size());
  return static_cast<int>(rank);
}

std::vector<int> IntersectingEdges(const Hypergraph& h, int edge_index) {
  CheckEdgeIndex(h, edge_index);
  std::vector<int> out;
  const Edge& a = h.edge(edge_index);
  for (int j = 0; j < h.num_edges(); ++j) {
    if (j != edge_index && Intersects(a, h.edge(j))) out.push_back(j);
  }
  return out;
}

IncidenceIndex::IncidenceIndex(const Hypergraph& h)
    : incident_(h.num_vertices()) {
  for (int e = 0; e < h.num_edges(); ++e) {
    for (int vertex : h.edge(e)) incident_[vertex].push_back(e);
  }
}

std::vector<int> IntersectingEdges(const Hypergraph& h,
                                   const IncidenceIndex& index,
                                   int edge_index) {
  CheckEdgeIndex(h, edge_index);
  std::vector<int> out;
  for (int vertex : h.edge(edge_index)) {
    const std::vector<int>& inc = index.incident(vertex);
    out.insert(out.end(), inc.begin(), inc.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  out.erase(std::remove(out.begin(), out.end(), edge_index), out.end());
  return out;
}

std::vector<int> NeighborCounts(const Hypergraph& h) {
  const IncidenceIndex index(h);
  const int m = h.num_edges();
  std::vector<int> counts(m, 0);
#pragma omp parallel num_threads(WorkerCount())
  {
    // Stamp array: mark[j] == e + 1 iff edge j was already counted for e.
    std::vector<int> mark(m, 0);
#pragma omp for schedule(dynamic, 16)
    for (int e = 0; e < m; ++e) {
      int count = 0;
      for (int vertex : h.edge(e)) {
        for (int j : index.incident(vertex)) {
          if (j != e && mark[j] != e + 1) {
            mark[j] = e + 1;
            ++count;
          }
        }
      }
      counts[e] = count;
    }
  }
  return counts;
}

int DependencyDegree(const Hypergraph& h) {
  if (h.num_edges() == 0) {
    throw std::invalid_argument("dependency degree of an empty edge list");
  }
  std::vector<int> counts = NeighborCounts(h);
  return *std::max_element(counts.begin(), counts.end());
}

EdgeClassPartition PartitionByCardinality(const Hypergraph& h) {
  std::vector<int> sizes;
  for (const Edge& e : h.edges()) sizes.push_back(static_cast<int>(e.size()));
  std::vector<int> ranks = sizes;
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
  EdgeClassPartition out;
  out.class_rank = ranks;
  for (int size : sizes) {
    out.class_of.push_back(static_cast<int>(
        std::lower_bound(ranks.begin(), ranks.end(), size) - ranks.begin()));
  }
  return out;
}

int DependencyMatrix::RowSum(int row) const {
  int sum = 0;
  for (int c : counts[row]) sum += c;
  return sum;
}

DependencyMatrix ClassifyEdges(const Hypergraph& h,
                               const EdgeClassPartition& classes) {
  CheckPartition(h, classes);
  const int c = classes.num_classes();
  const int m = h.num_edges();
  const IncidenceIndex index(h);
  // Per-edge class histograms, then a serial max-reduction per class.
  std::vector<std::vector<int>> per_edge(m, std::vector<int>(c, 0));
#pragma omp parallel num_threads(WorkerCount())
  {
    std::vector<int> mark(m, 0);
#pragma omp for schedule(dynamic, 16)
    for (int e = 0; e < m; ++e) {
      for (int vertex : h.edge(e)) {
        for (int j : index.incident(vertex)) {
          if (j != e && mark[j] != e + 1) {
            mark[j] = e + 1;
            ++per_edge[e][classes.class_of[j]];
          }
        }
      }
    }
  }
  DependencyMatrix out{std::vector<std::vector<int>>(c, std::vector<int>(c, 0))};
  for (int e = 0; e < m; ++e) {
    std::vector<int>& row = out.counts[classes.class_of[e]];
    for (int j = 0; j < c; ++j) row[j] = std::max(row[j], per_edge[e][j]);
  }
  return out;
}

namespace serial {

std::vector<int> NeighborCounts(const Hypergraph& h) {
  std::vector<int> counts(h.num_edges(), 0);
  for (int i = 0; i < h.num_edges(); ++i) {
    for (int j = i + 1; j < h.num_edges(); ++j) {
      if (Intersects(h.edge(i), h.edge(j))) {
        ++counts[i];
        ++counts[j];
      }
    }
  }
  return counts;
}

DependencyMatrix ClassifyEdges(const Hypergraph& h,
                               const EdgeClassPartition& classes) {
  CheckPartition(h, classes);
  const int c = classes.num_classes();
  DependencyMatrix out{std::vector<std::vector<int>>(c, std::vector<int>(c, 0))};
  for (int i = 0; i < h.num_edges(); ++i) {
    std::vector<int> hist(c, 0);
    for (int j = 0; j < h.num_edges(); ++j) {
      if (j != i && Intersects(h.edge(i), h.edge(j))) {
        ++hist[classes.class_of[j]];
      }
    }
    std::vector<int>& row = out.counts[classes.class_of[i]];
    for (int k = 0; k < c; ++k) row[k] = std::max(row[k], hist[k]);
  }
  return out;
}

}  // namespace serial
}  // namespace vca
