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

#ifndef VCA_GENERATORS_H_
#define VCA_GENERATORS_H_

#include <cstdint>

#include "vca/design.h"
#include "vca/hypergraph.h"

namespace vca {

// K_k^{(t)}: all t-subsets of [0, k) in lexicographic order.
Hypergraph CompleteUniform(int k, int t);

// Edge i = {i, i+1, ..., i+t-1} mod k for i in [0, k). Throws
// std::invalid_argument unless 1 <= t < k (or k == t == 1), since t >= k
// would repeat the same edge k times.
Hypergraph CyclicConsecutive(int k, int t);

struct TriangulationSeedSpec {
  int k = 4;
  std::uint64_t rng_seed = 0;
};

// Faces of a random triangulation of the sphere on k >= 4 vertices: start
// from the tetrahedron, then k - 4 times subdivide a uniformly chosen face
// with a new vertex joined to its corners. The subdivided face is replaced in
// place and the two new faces are appended. Deterministic in the seed.
Hypergraph RandomTriangulation(const TriangulationSeedSpec& spec);

// A 2-(k,3,1) design for k = 1 or 3 (mod 6), k >= 7 (Bose construction for
// k = 3 mod 6, Skolem construction for k = 1 mod 6).
DesignBlocks SteinerTripleSystem(int k);

struct ClassifiedHypergraph {
  Hypergraph hypergraph;
  EdgeClassPartition classes;
};

// The mixed-strength hypergraph on 11 "letter" vertices (0-10) and 4 "digit"
// vertices (11-14): the four triples of digits, plus every pair not inside a
// triple. Classes: 0 = letter-letter pairs (55), 1 = letter-digit pairs (44),
// 2 = digit triples (4); edges are listed class by class.
ClassifiedHypergraph H15();

}  // namespace vca

#endif  // VCA_GENERATORS_H_
