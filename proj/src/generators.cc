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

#include "vca/generators.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

#include "vca/rng.h"

namespace vca {

Hypergraph CompleteUniform(int k, int t) {
  if (t < 1 || t > k) {
    throw std::invalid_argument(
        fmt::format("complete_uniform needs 1 <= t <= k, got k={} t={}", k, t));
  }
  std::vector<Edge> edges;
  Edge pick(t);
  for (int i = 0; i < t; ++i) pick[i] = i;
  while (true) {
    edges.push_back(pick);
    int i = t - 1;
    while (i >= 0 && pick[i] == k - t + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Hypergraph(k, std::move(edges));
}

Hypergraph CyclicConsecutive(int k, int t) {
  if (t < 1 || t > k || (t == k && k > 1)) {
    throw std::invalid_argument(fmt::format(
        "cyclic_consecutive needs 1 <= t < k (duplicate edges otherwise), "
        "got k={} t={}",
        k, t));
  }
  std::vector<Edge> edges;
  edges.reserve(k);
  for (int i = 0; i < k; ++i) {
    Edge e;
    for (int j = 0; j < t; ++j) e.push_back((i + j) % k);
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, std::move(edges));
}

Hypergraph RandomTriangulation(const TriangulationSeedSpec& spec) {
  if (spec.k < 4) {
    throw std::invalid_argument(
        fmt::format("random_triangulation needs k >= 4, got {}", spec.k));
  }
  std::vector<std::array<int, 3>> faces = {
      {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  Rng rng(spec.rng_seed);
  for (int w = 4; w < spec.k; ++w) {
    std::size_t f = rng.Uniform(faces.size());
    auto [a, b, c] = faces[f];
    faces[f] = {a, b, w};
    faces.push_back({a, c, w});
    faces.push_back({b, c, w});
  }
  std::vector<Edge> edges;
  edges.reserve(faces.size());
  for (const auto& f : faces) edges.push_back(Edge(f.begin(), f.end()));
  return Hypergraph(spec.k, std::move(edges));
}

namespace {

// Bose: k = 3n, n odd. Points (x, i) -> x + n*i over Z_n x Z_3, with the
// idempotent commutative quasigroup x o y = (x + y)(n + 1)/2 mod n.
std::vector<Edge> BoseTriples(int k) {
  const int n = k / 3;
  auto point = [n](int x, int i) { return x + n * (i % 3); };
  auto op = [n](int x, int y) {
    return static_cast<int>((static_cast<long long>(x + y) * ((n + 1) / 2)) % n);
  };
  std::vector<Edge> blocks;
  for (int x = 0; x < n; ++x) blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        blocks.push_back({point(x, i), point(y, i), point(op(x, y), i + 1)});
      }
    }
  }
  return blocks;
}

// Skolem: k = 3n + 1, n = 2m. Points: infinity -> k - 1, (x, i) -> x + n*i.
// Half-idempotent commutative quasigroup of order n: relabel the sum x + y
// mod n by s -> s/2 for even s and m + (s-1)/2 for odd s.
std::vector<Edge> SkolemTriples(int k) {
  const int n = (k - 1) / 3;
  const int m = n / 2;
  const int infinity = k - 1;
  auto point = [n](int x, int i) { return x + n * (i % 3); };
  auto op = [n, m](int x, int y) {
    int s = (x + y) % n;
    return s % 2 == 0 ? s / 2 : m + (s - 1) / 2;
  };
  std::vector<Edge> blocks;
  for (int x = 0; x < m; ++x) blocks.push_back({point(x, 0), point(x, 1), point(x, 2)});
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < m; ++x) {
      blocks.push_back({infinity, point(x + m, i), point(x, i + 1)});
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        blocks.push_back({point(x, i), point(y, i), point(op(x, y), i + 1)});
      }
    }
  }
  return blocks;
}

}  // namespace

DesignBlocks SteinerTripleSystem(int k) {
  if (k < 7 || (k % 6 != 1 && k % 6 != 3)) {
    throw std::invalid_argument(fmt::format(
        "no Steiner triple system construction for k={} (need k = 1, 3 mod 6, "
        "k >= 7)",
        k));
  }
  DesignBlocks d;
  d.params = DesignParams{.s = 2, .k = k, .t = 3, .lambda = 1};
  d.blocks = k % 6 == 3 ? BoseTriples(k) : SkolemTriples(k);
  for (Edge& b : d.blocks) std::sort(b.begin(), b.end());
  return d;
}

ClassifiedHypergraph H15() {
  constexpr int kLetters = 11;
  constexpr int kDigits = 4;
  std::vector<Edge> edges;
  std::vector<int> class_of;
  for (int a = 0; a < kLetters; ++a) {
    for (int b = a + 1; b < kLetters; ++b) {
      edges.push_back({a, b});
      class_of.push_back(0);
    }
  }
  for (int a = 0; a < kLetters; ++a) {
    for (int digit = 0; digit < kDigits; ++digit) {
      edges.push_back({a, kLetters + digit});
      class_of.push_back(1);
    }
  }
  Hypergraph digits_k4 = CompleteUniform(kDigits, 3);
  for (const Edge& triple : digits_k4.edges()) {
    Edge e;
    for (int digit : triple) e.push_back(kLetters + digit);
    edges.push_back(std::move(e));
    class_of.push_back(2);
  }
  return ClassifiedHypergraph{
      .hypergraph = Hypergraph(kLetters + kDigits, std::move(edges)),
      .classes = EdgeClassPartition{.class_of = std::move(class_of),
                                    .class_rank = {2, 2, 3}},
  };
}

}  // namespace vca
