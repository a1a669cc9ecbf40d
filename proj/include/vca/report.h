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

#ifndef VCA_REPORT_H_
#define VCA_REPORT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vca/bounds.h"
#include "vca/general_lll.h"
#include "vca/hypergraph.h"

namespace vca {

// One alphabet size of a bound comparison. Percentages are improvements over
// the symmetric bound, 100 (n_s - n_x) / n_s, from real-valued n.
struct BoundTableRow {
  int v = 2;
  long double n_s = 0;
  std::optional<long double> n_g;     // empty when no witness under the cap
  long double n_a = 0;
  std::optional<long double> n_dens;  // empty when |E| is unknown
  std::optional<long double> p_gs;
  long double p_as = 0;
};

// n_s uses d = DependencyDegree(h) and t = Rank(h); n_dens uses e = |E|.
std::vector<BoundTableRow> BoundTable(const Hypergraph& h,
                                      const EdgeClassPartition& classes,
                                      std::span<const int> v_values,
                                      const GeneralLllOptions& options = {});

// Same from a class system alone (its own v is ignored). n_s uses the largest
// row sum and rank; n_dens needs the edge count.
std::vector<BoundTableRow> BoundTable(const EventClassSystem& sys,
                                      std::optional<long long> num_edges,
                                      std::span<const int> v_values,
                                      const GeneralLllOptions& options = {});

// Header "v,n_s,n_g,n_a,n_dens,p_gs,p_as"; two decimals, or full precision
// when `precise`. Missing values are empty fields.
std::string BoundTableCsv(std::span<const BoundTableRow> rows, bool precise);

// Symmetric and density bounds for (t-1)-(k,t,1) designs, evaluated from
// the parameters.
struct SteinerRow {
  int t = 3;
  int k = 7;
  Rational d_plus_1;  // argument of the logarithm in the symmetric bound
  long double n_prob = 0;
  Rational blocks;    // argument of the logarithm in the density bound
  long double n_dens = 0;
};

std::vector<SteinerRow> SteinerTable(std::span<const int> k_values,
                                     std::span<const int> t_values, int v);

// Header "t,k,d_plus_1,n_prob,b,n_dens"; the logarithm arguments are exact
// rationals.
std::string SteinerTableCsv(std::span<const SteinerRow> rows, bool precise);

// Natural logs of the density guarantee (ceiled), the general local lemma
// bound, and the mean VarDens size over relabeling trials.
struct FigureRow {
  int v = 2;
  long double ln_dens_bound = 0;
  std::optional<long double> ln_n_g;
  std::optional<long double> ln_vardens_mean;  // empty when trials == 0
};

// Trial i runs VarDensRelabeled with seed + i; trials run under OpenMP.
std::vector<FigureRow> FigureData(const Hypergraph& h,
                                  const EdgeClassPartition& classes,
                                  std::span<const int> v_values, int trials,
                                  std::uint64_t seed,
                                  const GeneralLllOptions& options = {});

// Header "v,ln_n_dens,ln_n_g[,ln_vardens]"; the run column is present only
// when some row has it.
std::string FigureDataCsv(std::span<const FigureRow> rows, bool precise);

}  // namespace vca

#endif  // VCA_REPORT_H_
