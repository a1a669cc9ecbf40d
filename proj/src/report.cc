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

#include "vca/report.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "vca/construct.h"
#include "vca/parallel.h"

namespace vca {
namespace {

std::string Number(long double x, bool precise) {
  return precise ? fmt::format("{:.17g}", static_cast<double>(x))
                 : fmt::format("{:.2f}", static_cast<double>(x));
}

std::string Number(const std::optional<long double>& x, bool precise) {
  return x ? Number(*x, precise) : std::string();
}

long double Improvement(long double base, long double better) {
  return 100.0L * (base - better) / base;
}

BoundTableRow Row(const EventClassSystem& sys, const BoundReport& symmetric,
                  std::optional<long long> num_edges, int rank,
                  const GeneralLllOptions& options) {
  BoundTableRow row;
  row.v = sys.v;
  row.n_s = symmetric.n_real;
  GeneralLllResult general = NGeneralLll(sys, options);
  if (general.found) {
    row.n_g = general.report.n_real;
    row.p_gs = Improvement(row.n_s, *row.n_g);
  }
  row.n_a = NAsymmetricLll(sys).n_real;
  row.p_as = Improvement(row.n_s, row.n_a);
  if (num_edges) row.n_dens = NDens(*num_edges, rank, sys.v).n_real;
  return row;
}

}  // namespace

std::vector<BoundTableRow> BoundTable(const Hypergraph& h,
                                      const EdgeClassPartition& classes,
                                      std::span<const int> v_values,
                                      const GeneralLllOptions& options) {
  const int d = DependencyDegree(h);
  const int t = Rank(h);
  std::vector<BoundTableRow> rows;
  for (int v : v_values) {
    EventClassSystem sys = MakeEventClassSystem(h, classes, v);
    rows.push_back(Row(sys, NProbSymmetric(d, t, v), h.num_edges(), t, options));
  }
  return rows;
}

std::vector<BoundTableRow> BoundTable(const EventClassSystem& sys,
                                      std::optional<long long> num_edges,
                                      std::span<const int> v_values,
                                      const GeneralLllOptions& options) {
  std::vector<BoundTableRow> rows;
  for (int v : v_values) {
    EventClassSystem at_v = sys;
    at_v.v = v;
    const int t = *std::max_element(sys.class_rank.begin(), sys.class_rank.end());
    rows.push_back(Row(at_v, NProbSymmetric(at_v), num_edges, t, options));
  }
  return rows;
}

std::string BoundTableCsv(std::span<const BoundTableRow> rows, bool precise) {
  std::string out = "v,n_s,n_g,n_a,n_dens,p_gs,p_as\n";
  for (const BoundTableRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.v, Number(r.n_s, precise),
                       Number(r.n_g, precise), Number(r.n_a, precise),
                       Number(r.n_dens, precise), Number(r.p_gs, precise),
                       Number(r.p_as, precise));
  }
  return out;
}

std::vector<SteinerRow> SteinerTable(std::span<const int> k_values,
                                     std::span<const int> t_values, int v) {
  std::vector<SteinerRow> rows;
  for (int t : t_values) {
    for (int k : k_values) {
      DesignParams p{.s = t - 1, .k = k, .t = t, .lambda = 1};
      SteinerRow row;
      row.t = t;
      row.k = k;
      row.d_plus_1 = DesignDependencyBound(p).d + 1;
      row.n_prob = NProbDesign(p, v).n_real;
      row.blocks = DesignBlockCount(p);
      long double ln_b = std::log(ToLongDouble(row.blocks));
      row.n_dens = (ln_b + t * std::log(static_cast<long double>(v))) /
                   LogCoverageRatio(v, t);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string SteinerTableCsv(std::span<const SteinerRow> rows, bool precise) {
  std::string out = "t,k,d_plus_1,n_prob,b,n_dens\n";
  for (const SteinerRow& r : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", r.t, r.k, ToString(r.d_plus_1),
                       Number(r.n_prob, precise), ToString(r.blocks),
                       Number(r.n_dens, precise));
  }
  return out;
}

std::vector<FigureRow> FigureData(const Hypergraph& h,
                                  const EdgeClassPartition& classes,
                                  std::span<const int> v_values, int trials,
                                  std::uint64_t seed,
                                  const GeneralLllOptions& options) {
  const int t = Rank(h);
  std::vector<FigureRow> rows;
  for (int v : v_values) {
    FigureRow row;
    row.v = v;
    row.ln_dens_bound = std::log(
        static_cast<long double>(NDens(h.num_edges(), t, v).n_int));
    GeneralLllResult general =
        NGeneralLll(MakeEventClassSystem(h, classes, v), options);
    if (general.found) row.ln_n_g = std::log(general.report.n_real);
    if (trials > 0) {
      std::vector<long long> sizes(trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(WorkerCount())
      for (int i = 0; i < trials; ++i) {
        sizes[i] = VarDensRelabeled(h, v, seed + static_cast<std::uint64_t>(i)).n;
      }
      long double mean = 0;
      for (long long n : sizes) mean += n;
      row.ln_vardens_mean = std::log(mean / trials);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string FigureDataCsv(std::span<const FigureRow> rows, bool precise) {
  const bool runs = std::any_of(rows.begin(), rows.end(), [](const FigureRow& r) {
    return r.ln_vardens_mean.has_value();
  });
  std::string out = runs ? "v,ln_n_dens,ln_n_g,ln_vardens\n" : "v,ln_n_dens,ln_n_g\n";
  for (const FigureRow& r : rows) {
    out += fmt::format("{},{},{}", r.v, Number(r.ln_dens_bound, precise),
                       Number(r.ln_n_g, precise));
    if (runs) out += "," + Number(r.ln_vardens_mean, precise);
    out += '\n';
  }
  return out;
}

}  // namespace vca
