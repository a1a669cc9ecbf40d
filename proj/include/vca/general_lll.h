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

#ifndef VCA_GENERAL_LLL_H_
#define VCA_GENERAL_LLL_H_

#include <optional>
#include <vector>

#include "vca/bounds.h"

namespace vca {

struct GeneralLllOptions {
  // Bisection stops once the bracket is narrower than this many rows.
  double tolerance = 0.01;
  // Upper end of the search; 0 selects the symmetric bound of the system,
  // where x_i = 1/(d+1) is always a witness.
  double n_cap = 0;
  // Starting points per dimension on the log-spaced grid over
  // (min_start, max_start); 0 picks the smallest count giving at least
  // min_starts points in total.
  int grid_points = 0;
  int min_starts = 32;
  double min_start = 1e-6;
  double max_start = 0.5;
  int max_iterations = 4000;
};

struct GeneralLllResult {
  bool found = false;
  BoundReport report;      // valid when found
  std::vector<double> witness;  // x with LllFeasibleGeneral(sys, n_real, x)
};

// Best achievable slack of the general local lemma at n:
// max over x of min_i [ln x_i + sum_j dep[i][j] ln(1 - x_j) - ln p_i(n)].
struct SlackOptimum {
  double margin = 0;
  std::vector<double> x;
};

// Multi-start Nelder-Mead over logit(x). The starts run under OpenMP; the
// result is the best start by (margin, start index), independent of
// scheduling. serial::MaximizeSlack is the single-threaded reference.
SlackOptimum MaximizeSlack(const EventClassSystem& sys, double n,
                           const GeneralLllOptions& options = {});

// Outer bisection on n over [1, cap]: n is accepted when the optimized
// witness has non-negative slack and passes LllFeasibleGeneral. Returns
// found == false when no witness exists at the cap.
GeneralLllResult NGeneralLll(const EventClassSystem& sys,
                             const GeneralLllOptions& options = {});

// Symmetric bound specialized to a class system: d = max row sum,
// t = max rank.
BoundReport NProbSymmetric(const EventClassSystem& sys);

namespace serial {
SlackOptimum MaximizeSlack(const EventClassSystem& sys, double n,
                           const GeneralLllOptions& options = {});
}  // namespace serial

}  // namespace vca

#endif  // VCA_GENERAL_LLL_H_
