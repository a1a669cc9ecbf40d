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

#include "vca/bounds.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "vca/hypergraph_io.h"

namespace vca {
namespace {

void CheckTV(int t, int v) {
  if (t < 1) throw std::invalid_argument(fmt::format("t must be >= 1, got {}", t));
  if (v < 2) throw std::invalid_argument(fmt::format("v must be >= 2, got {}", v));
}

BoundReport Report(std::string name, long double n_real, std::string inputs) {
  BoundReport r;
  r.name = std::move(name);
  r.n_real = n_real;
  r.n_int = static_cast<long long>(std::ceil(n_real));
  r.inputs = std::move(inputs);
  return r;
}

long double SymmetricNumerator(long double log_d_plus_1, int t, int v) {
  return log_d_plus_1 + t * std::log(static_cast<long double>(v)) + 1.0L;
}

}  // namespace

long double LogCoverageRatio(int v, int t) {
  CheckTV(t, v);
  return -std::log1p(-std::pow(static_cast<long double>(v), -t));
}

long double LogMissProbability(int v, int t, long double n) {
  return t * std::log(static_cast<long double>(v)) - n * LogCoverageRatio(v, t);
}

BoundReport NProbSymmetric(long long d, int t, int v) {
  CheckTV(t, v);
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  long double numerator =
      SymmetricNumerator(std::log(static_cast<long double>(d) + 1.0L), t, v);
  return Report("symmetric-lll", numerator / LogCoverageRatio(v, t),
                fmt::format("d={} t={} v={}", d, t, v));
}

BoundReport NProbTaylor(long long d, int t, int v) {
  CheckTV(t, v);
  if (d < 0) throw std::invalid_argument("d must be >= 0");
  long double numerator =
      SymmetricNumerator(std::log(static_cast<long double>(d) + 1.0L), t, v);
  return Report("symmetric-lll-taylor",
                std::pow(static_cast<long double>(v), t) * numerator,
                fmt::format("d={} t={} v={}", d, t, v));
}

BoundReport NDens(long long e, int t, int v) {
  CheckTV(t, v);
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  long double numerator = std::log(static_cast<long double>(e)) +
                          t * std::log(static_cast<long double>(v));
  return Report("density", numerator / LogCoverageRatio(v, t),
                fmt::format("e={} t={} v={}", e, t, v));
}

BoundReport NDensTaylor(long long e, int t, int v) {
  CheckTV(t, v);
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  long double numerator = std::log(static_cast<long double>(e)) +
                          t * std::log(static_cast<long double>(v));
  return Report("density-taylor",
                std::pow(static_cast<long double>(v), t) * numerator,
                fmt::format("e={} t={} v={}", e, t, v));
}

DesignDependency DesignDependencyBound(const DesignParams& p) {
  CheckDesignParams(p);
  const int terms = 2 * ((p.s - 1) / 2) + 1;
  Rational sum = 0;
  for (int i = 1; i <= terms; ++i) {
    Rational blocks_through =
        Rational(p.lambda * Binomial(p.k - i, p.s - i)) /
        Rational(Binomial(p.t - i, p.s - i));
    Rational term = Rational(Binomial(p.t, i)) * (blocks_through - 1);
    sum += (i % 2 == 1) ? term : Rational(-term);
  }
  const bool exact = p.s == p.t - 1 && (terms == p.t - 1 || p.lambda == 1);
  return DesignDependency{.d = sum, .exact = exact};
}

int DesignDependencyExact(const DesignBlocks& d) {
  if (d.blocks.empty()) return 0;
  return DependencyDegree(DesignToHypergraph(d));
}

Rational DesignBlockCount(const DesignParams& p) {
  CheckDesignParams(p);
  return Rational(p.lambda * Binomial(p.k, p.s)) / Rational(Binomial(p.t, p.s));
}

BoundReport NProbDesign(const DesignParams& p, int v) {
  CheckTV(p.t, v);
  DesignDependency dep = DesignDependencyBound(p);
  long double d_plus_1 = ToLongDouble(dep.d + 1);
  if (d_plus_1 < 1) d_plus_1 = 1;  // d >= 0 for any real design
  long double numerator = SymmetricNumerator(std::log(d_plus_1), p.t, v);
  return Report("symmetric-lll-design", numerator / LogCoverageRatio(v, p.t),
                fmt::format("{}-({},{},{}) d={} v={}", p.s, p.k, p.t, p.lambda,
                            ToString(dep.d), v));
}

BoundReport NDensDesign(const DesignParams& p, int v, long long b) {
  CheckDesignParams(p);
  BoundReport r = NDens(b, p.t, v);
  r.name = "density-design";
  r.inputs = fmt::format("{}-({},{},{}) b={} v={}", p.s, p.k, p.t, p.lambda, b, v);
  return r;
}

void CheckEventClassSystem(const EventClassSystem& sys) {
  if (sys.v < 2) throw std::invalid_argument("event system needs v >= 2");
  const int c = sys.num_classes();
  if (c == 0) throw std::invalid_argument("event system has no classes");
  for (int rank : sys.class_rank) {
    if (rank < 1) throw std::invalid_argument("class rank must be >= 1");
  }
  if (sys.dep.size() != c) {
    throw std::invalid_argument(fmt::format(
        "dependency matrix has {} rows for {} classes", sys.dep.size(), c));
  }
  for (const auto& row : sys.dep.counts) {
    if (static_cast<int>(row.size()) != c) {
      throw std::invalid_argument("dependency matrix is not square");
    }
    for (int entry : row) {
      if (entry < 0) throw std::invalid_argument("negative dependency count");
    }
  }
}

EventClassSystem MakeEventClassSystem(const Hypergraph& h,
                                      const EdgeClassPartition& classes, int v) {
  EventClassSystem sys{.class_rank = classes.class_rank,
                       .dep = ClassifyEdges(h, classes),
                       .v = v};
  CheckEventClassSystem(sys);
  return sys;
}

EventClassSystem ReadEventClassSystem(std::istream& in) {
  auto lines = io_internal::ReadIntegerLines(in);
  if (lines.size() < 2 || lines[0].size() != 1) {
    throw FormatError("class file must start with 'v' and the class ranks");
  }
  EventClassSystem sys;
  sys.v = static_cast<int>(lines[0][0]);
  sys.class_rank.assign(lines[1].begin(), lines[1].end());
  for (std::size_t i = 2; i < lines.size(); ++i) {
    sys.dep.counts.emplace_back(lines[i].begin(), lines[i].end());
  }
  try {
    CheckEventClassSystem(sys);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return sys;
}

void WriteEventClassSystem(std::ostream& out, const EventClassSystem& sys) {
  out << sys.v << '\n' << fmt::format("{}\n", fmt::join(sys.class_rank, " "));
  for (const auto& row : sys.dep.counts) {
    out << fmt::format("{}\n", fmt::join(row, " "));
  }
}

bool LllFeasibleGeneral(const EventClassSystem& sys, long double n,
                        const std::vector<double>& x) {
  CheckEventClassSystem(sys);
  if (!(n > 0)) throw std::invalid_argument("n must be positive");
  if (static_cast<int>(x.size()) != sys.num_classes()) {
    throw std::invalid_argument("one weight per class required");
  }
  for (double xi : x) {
    if (!(xi > 0.0 && xi < 1.0)) {
      throw std::invalid_argument(fmt::format("weight {} outside (0, 1)", xi));
    }
  }
  for (int i = 0; i < sys.num_classes(); ++i) {
    long double rhs = std::log(static_cast<long double>(x[i]));
    for (int j = 0; j < sys.num_classes(); ++j) {
      rhs += sys.dep.counts[i][j] * std::log1p(-static_cast<long double>(x[j]));
    }
    if (LogMissProbability(sys.v, sys.class_rank[i], n) > rhs) return false;
  }
  return true;
}

namespace {

bool AsymmetricHolds(const EventClassSystem& sys, long double n) {
  const int c = sys.num_classes();
  std::vector<long double> p(c);
  for (int i = 0; i < c; ++i) {
    p[i] = std::exp(LogMissProbability(sys.v, sys.class_rank[i], n));
  }
  for (int i = 0; i < c; ++i) {
    if (p[i] > 0.125L) return false;
    long double neighborhood = 0;
    for (int j = 0; j < c; ++j) neighborhood += sys.dep.counts[i][j] * p[j];
    if (neighborhood > 0.25L) return false;
  }
  return true;
}

}  // namespace

BoundReport NAsymmetricLll(const EventClassSystem& sys) {
  CheckEventClassSystem(sys);
  long double lo = 0;
  long double hi = 1;
  while (!AsymmetricHolds(sys, hi)) {
    lo = hi;
    hi *= 2;
  }
  // Every constraint decreases in n, so feasibility is monotone.
  for (int iter = 0; iter < 200 && hi - lo > 1e-12L * hi; ++iter) {
    long double mid = (lo + hi) / 2;
    if (AsymmetricHolds(sys, mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return Report("asymmetric-lll", hi,
                fmt::format("v={} ranks={} dep={}", sys.v,
                            fmt::join(sys.class_rank, ","),
                            fmt::join(sys.dep.counts, ";")));
}

}  // namespace vca
