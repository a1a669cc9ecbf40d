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

#ifndef VCA_BOUNDS_H_
#define VCA_BOUNDS_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "vca/design.h"
#include "vca/exact.h"
#include "vca/hypergraph.h"

namespace vca {

// A row-count upper bound. n_int is the ceiling of n_real.
struct BoundReport {
  std::string name;     // which bound produced the value
  long double n_real = 0;
  long long n_int = 0;
  std::string inputs;   // echo of the parameters, e.g. "d=36 t=3 v=2"
};

// ln(v^t / (v^t - 1)), evaluated as -log1p(-v^-t).
long double LogCoverageRatio(int v, int t);

// Upper bound on the probability that a fixed t-set of columns of a uniform
// random n-row array over Z_v misses some t-tuple: v^t (1 - v^-t)^n, as a log.
long double LogMissProbability(int v, int t, long double n);

// Symmetric local lemma: (ln(d+1) + t ln v + 1) / ln(v^t/(v^t-1)).
// Throws std::invalid_argument unless d >= 0, t >= 1, v >= 2.
BoundReport NProbSymmetric(long long d, int t, int v);

// Taylor relaxation of NProbSymmetric: v^t (ln(d+1) + t ln v + 1).
BoundReport NProbTaylor(long long d, int t, int v);

// Density greedy guarantee: (ln e + t ln v) / ln(v^t/(v^t-1)). e >= 1.
BoundReport NDens(long long e, int t, int v);

// Taylor relaxation of NDens: v^t (ln e + t ln v).
BoundReport NDensTaylor(long long e, int t, int v);

// Inclusion-exclusion count of blocks meeting a fixed block of an
// s-(k,t,lambda) design, truncated after 2*floor((s-1)/2)+1 terms.
struct DesignDependency {
  Rational d;
  // True when the truncated sum equals the full inclusion-exclusion for a
  // design without repeated blocks (s = t-1, and the dropped i = s term
  // vanishes or nothing is dropped).
  bool exact = false;
};
DesignDependency DesignDependencyBound(const DesignParams& p);

// Max over blocks of the number of other blocks sharing a point.
int DesignDependencyExact(const DesignBlocks& d);

// NProbSymmetric with d from DesignDependencyBound. The real-valued d is used
// inside the logarithm, so inadmissible parameter sets still evaluate.
BoundReport NProbDesign(const DesignParams& p, int v);

// NDens with e = b, the number of blocks.
BoundReport NDensDesign(const DesignParams& p, int v, long long b);

// lambda * C(k, s) / C(t, s): block count implied by the parameters.
Rational DesignBlockCount(const DesignParams& p);

// Bad events grouped into classes. Class i events have probability at most
// p_i(n) = v^{t_i} (1 - v^{-t_i})^n and depend on at most dep[i][j] class-j
// events.
struct EventClassSystem {
  std::vector<int> class_rank;
  DependencyMatrix dep;
  int v = 2;

  int num_classes() const { return static_cast<int>(class_rank.size()); }
};

// Throws std::invalid_argument unless v >= 2, every rank >= 1, dep is square
// with matching dimension, and every entry is non-negative.
void CheckEventClassSystem(const EventClassSystem& sys);

EventClassSystem MakeEventClassSystem(const Hypergraph& h,
                                      const EdgeClassPartition& classes, int v);

// Class-file format: line 1 "v", line 2 the class ranks, then one line per
// dependency-matrix row. Throws FormatError on malformed input.
EventClassSystem ReadEventClassSystem(std::istream& in);
void WriteEventClassSystem(std::ostream& out, const EventClassSystem& sys);

// General local lemma condition for per-class weights x:
// p_i(n) <= x_i prod_j (1 - x_j)^{dep[i][j]} for every class i.
// Throws std::invalid_argument when some x_i lies outside (0, 1) or n <= 0.
bool LllFeasibleGeneral(const EventClassSystem& sys, long double n,
                        const std::vector<double>& x);

// Smallest n with p_i(n) <= 1/8 and sum_j dep[i][j] p_j(n) <= 1/4 for every
// class, by bisection.
BoundReport NAsymmetricLll(const EventClassSystem& sys);

}  // namespace vca

#endif  // VCA_BOUNDS_H_
