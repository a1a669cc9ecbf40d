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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <fmt/format.h>

#include "test_util.h"
#include "vca/bounds.h"
#include "vca/construct.h"
#include "vca/coverage.h"
#include "vca/design.h"
#include "vca/general_lll.h"
#include "vca/generators.h"
#include "vca/hypergraph.h"
#include "vca/report.h"

namespace vca {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failure reasons for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string detail;

  void Expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

EventClassSystem H15System(int v) {
  ClassifiedHypergraph h15 = H15();
  return MakeEventClassSystem(h15.hypergraph, h15.classes, v);
}

constexpr double kNs[] = {50.10, 209.50, 556.87, 1175.17, 2152.02,
                          3578.65, 5549.38, 8161.08, 11512.91};
constexpr double kNg[] = {33.79, 148.30, 407.02, 881.51, 1643.10,
                          2777.33, 4367.67, 6440.68, 9171.64};
constexpr double kNa[] = {34.38, 153.17, 421.87, 910.49, 1693.86,
                          2850.50, 4461.93, 6612.28, 9387.96};

Check DependencyMatrixOfH15() {
  Check c;
  auto start = Clock::now();
  ClassifiedHypergraph h15 = H15();
  DependencyMatrix m = ClassifyEdges(h15.hypergraph, h15.classes);
  double elapsed = Seconds(start);
  c.Expect(m.counts == std::vector<std::vector<int>>{{18, 8, 0}, {10, 13, 3}, {0, 33, 3}},
           "matrix differs");
  c.Expect(elapsed < 1, fmt::format("took {:.3f}s", elapsed));
  c.detail = fmt::format("{:.3f}s", elapsed);
  return c;
}

Check SymmetricColumn() {
  Check c;
  auto start = Clock::now();
  double worst = 0;
  for (int v = 2; v <= 10; ++v) {
    long double n = NProbSymmetric(36, 3, v).n_real;
    double rounded = std::round(static_cast<double>(n) * 100) / 100;
    double gap = std::abs(rounded - kNs[v - 2]);
    worst = std::max(worst, gap);
    c.Expect(gap <= 0.01 + 1e-9, fmt::format("v={} got {:.4f}", v, static_cast<double>(n)));
  }
  double elapsed = Seconds(start);
  c.Expect(elapsed < 1, fmt::format("took {:.3f}s", elapsed));
  c.detail = fmt::format("max rounded gap {:.2f}", worst);
  return c;
}

Check AsymmetricColumn() {
  Check c;
  double worst = 0;
  for (int v = 2; v <= 10; ++v) {
    auto start = Clock::now();
    long double n = NAsymmetricLll(H15System(v)).n_real;
    double elapsed = Seconds(start);
    double rel = std::abs(static_cast<double>(n) / kNa[v - 2] - 1);
    worst = std::max(worst, rel);
    c.Expect(rel <= 0.005, fmt::format("v={} got {:.2f}", v, static_cast<double>(n)));
    c.Expect(elapsed < 1, fmt::format("v={} took {:.3f}s", v, elapsed));
  }
  c.detail = fmt::format("max relative gap {:.4f}%", 100 * worst);
  return c;
}

Check GeneralColumn() {
  Check c;
  double slowest = 0;
  std::string values;
  for (int v = 2; v <= 10; ++v) {
    EventClassSystem sys = H15System(v);
    auto start = Clock::now();
    GeneralLllResult r = NGeneralLll(sys);
    double elapsed = Seconds(start);
    slowest = std::max(slowest, elapsed);
    if (!r.found) {
      c.Expect(false, fmt::format("v={} no witness", v));
      continue;
    }
    double n = static_cast<double>(r.report.n_real);
    values += fmt::format(" {:.2f}", n);
    c.Expect(n <= kNg[v - 2] * 1.02, fmt::format("v={} got {:.2f}", v, n));
    c.Expect(LllFeasibleGeneral(sys, r.report.n_real, r.witness),
             fmt::format("v={} witness fails", v));
    c.Expect(elapsed < 60, fmt::format("v={} took {:.1f}s", v, elapsed));
  }
  c.detail = fmt::format("n_g:{}; slowest {:.2f}s", values, slowest);
  return c;
}

Check DesignFormula() {
  Check c;
  for (int k : {7, 9, 13, 25, 99}) {
    DesignDependency dep = DesignDependencyBound({.s = 2, .k = k, .t = 3, .lambda = 1});
    Rational expected = Rational(3, 2) * k - Rational(7, 2);
    c.Expect(dep.d + 1 == expected && dep.exact,
             fmt::format("k={} got {}", k, ToString(dep.d + 1)));
  }
  int checked = 0;
  for (int k = 7; k <= 99; ++k) {
    if (k % 6 != 1 && k % 6 != 3) continue;
    DesignBlocks d = SteinerTripleSystem(k);
    ++checked;
    c.Expect(Rational(DesignDependencyExact(d)) == DesignDependencyBound(d.params).d,
             fmt::format("STS({}) enumeration differs", k));
  }
  c.detail = fmt::format("{} Steiner triple systems enumerated", checked);
  return c;
}

Check DesignAsymptotics() {
  Check c;
  auto start = Clock::now();
  const DesignParams base{.s = 2, .k = 100000, .t = 3, .lambda = 1};
  DesignParams next = base;
  next.k = base.k * 10;
  const long double scale = LogCoverageRatio(2, 3);
  const long double slope =
      (NProbDesign(next, 2).n_real - NProbDesign(base, 2).n_real) / std::log(10.0L) * scale;
  const double elapsed = Seconds(start);
  // (s - 1) v^t ln k growth: unit slope in ln k after scaling by the ratio.
  c.Expect(std::abs(static_cast<double>(slope) - 1) <= 0.01,
           fmt::format("slope {:.5f}", static_cast<double>(slope)));
  c.Expect(elapsed < 1, fmt::format("took {:.3f}s", elapsed));
  c.detail = fmt::format("normalized slope {:.5f}", static_cast<double>(slope));
  return c;
}

Check CyclicIndependence() {
  Check c;
  const long double closed =
      (std::log(5.0L) + 3 * std::log(2.0L) + 1) / std::log(8.0L / 7.0L);
  long double previous_dens = 0;
  for (int k : {10, 100, 1000, 1000000}) {
    Hypergraph h = CyclicConsecutive(k, 3);
    long double n_prob = NProbSymmetric(DependencyDegree(h), Rank(h), 2).n_real;
    long double n_dens = NDens(h.num_edges(), Rank(h), 2).n_real;
    c.Expect(std::abs(n_prob - closed) < 1e-12L,
             fmt::format("k={} n_prob {:.6f}", k, static_cast<double>(n_prob)));
    c.Expect(n_dens > previous_dens, fmt::format("k={} n_dens not increasing", k));
    previous_dens = n_dens;
  }
  c.detail = fmt::format("n_prob {:.4f}", static_cast<double>(closed));
  return c;
}

struct SuiteCase {
  std::string name;
  Hypergraph h;
  int v;
};

std::vector<SuiteCase> VarDensSuite() {
  std::vector<SuiteCase> suite;
  for (auto [k, t, v] : {std::tuple{4, 3, 2}, {6, 2, 5}, {8, 3, 3}, {10, 4, 2},
                        {9, 4, 3}, {12, 2, 4}, {7, 1, 5}, {16, 1, 2}}) {
    suite.push_back({fmt::format("complete({},{})", k, t), CompleteUniform(k, t), v});
  }
  for (auto [k, t, v] : {std::tuple{10, 3, 2}, {100, 3, 2}, {50, 2, 5}, {60, 4, 3},
                        {100, 4, 4}, {25, 3, 5}, {7, 4, 2}, {99, 1, 3}}) {
    suite.push_back({fmt::format("cyclic({},{})", k, t), CyclicConsecutive(k, t), v});
  }
  int seed = 1;
  for (int k : {4, 10, 25, 50, 75, 100}) {
    for (int v = 2; v <= 5; ++v) {
      suite.push_back({fmt::format("triangulation({},seed {})", k, seed),
                       RandomTriangulation({.k = k, .rng_seed = static_cast<std::uint64_t>(seed)}),
                       v});
      ++seed;
    }
  }
  for (int k : {7, 9, 13, 15, 19, 21, 25, 45, 69, 99}) {
    suite.push_back({fmt::format("sts({})", k), DesignToHypergraph(SteinerTripleSystem(k)),
                     2 + k % 4});
  }
  for (int v = 2; v <= 5; ++v) suite.push_back({"h15", H15().hypergraph, v});
  return suite;
}

Check VarDensCertificate() {
  Check c;
  auto start = Clock::now();
  std::vector<SuiteCase> suite = VarDensSuite();
  for (const SuiteCase& sc : suite) {
    VarDensStats stats;
    VcaArray a;
    try {
      a = VarDens(sc.h, sc.v, &stats);
    } catch (const std::logic_error& e) {
      c.Expect(false, fmt::format("{} v={}: {}", sc.name, sc.v, e.what()));
      continue;
    }
    const int t = Rank(sc.h);
    c.Expect(Verify(a, sc.h).covered, fmt::format("{} v={} does not verify", sc.name, sc.v));
    c.Expect(a.n <= NDens(sc.h.num_edges(), t, sc.v).n_int,
             fmt::format("{} v={} N={} above density bound", sc.name, sc.v, a.n));
    const std::uint64_t scale = static_cast<std::uint64_t>(std::llround(std::pow(sc.v, t)));
    for (int r = 0; r < a.n; ++r) {
      c.Expect(stats.new_coverage[r] * scale >= stats.scaled_expectation[r],
               fmt::format("{} v={} row {} below expectation", sc.name, sc.v, r));
    }
  }
  double total = 0;
  int lo = 1 << 30, hi = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    int n = VarDens(RandomTriangulation({.k = 100, .rng_seed = seed}), 2).n;
    total += n;
    lo = std::min(lo, n);
    hi = std::max(hi, n);
  }
  const double mean = total / 30;
  c.Expect(mean >= 10 && mean <= 20, fmt::format("triangulation mean N {:.2f}", mean));
  const double elapsed = Seconds(start);
  c.Expect(elapsed < 600, fmt::format("took {:.1f}s", elapsed));
  c.Expect(suite.size() >= 50, "suite too small");
  c.detail = fmt::format("{} hypergraphs; k=100 triangulations N min/max/mean {}/{}/{:.2f}; {:.1f}s",
                         suite.size(), lo, hi, mean, elapsed);
  return c;
}

Check MoserTardosTermination() {
  Check c;
  std::vector<std::string> parts;
  for (const auto& [name, h] : {std::pair{std::string("h15"), H15().hypergraph},
                                {std::string("cyclic(50,3)"), CyclicConsecutive(50, 3)}}) {
    const int n = static_cast<int>(NProbSymmetric(DependencyDegree(h), Rank(h), 2).n_int);
    int successes = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      MoserTardosResult r = MoserTardos(h, 2, n, seed, 100000);
      if (!r.success) continue;
      ++successes;
      c.Expect(Verify(r.array, h).covered, fmt::format("{} seed {} success fails verify", name, seed));
    }
    c.Expect(successes >= 95, fmt::format("{}: {}/100", name, successes));
    parts.push_back(fmt::format("{} n={} {}/100", name, n, successes));
  }
  c.detail = fmt::format("{}; {}", parts[0], parts[1]);
  return c;
}

Check VerifyOracle() {
  Check c;
  std::mt19937_64 gen(20261016);
  std::uniform_int_distribution<int> k_dist(1, 8), v_dist(2, 3), n_dist(0, 30);
  int disagreements = 0, covered = 0;
  for (int instance = 0; instance < 200; ++instance) {
    const int k = k_dist(gen), v = v_dist(gen);
    Hypergraph h = testing::RandomHypergraph(gen, k, 3, 10);
    VcaArray a = testing::RandomArray(gen, n_dist(gen), k, v);
    VerifyResult got = Verify(a, h);
    VerifyResult want = testing::OracleVerify(a, h);
    covered += want.covered;
    if (got.covered != want.covered || got.edge != want.edge || got.missing != want.missing) {
      ++disagreements;
    }
  }
  c.Expect(disagreements == 0, fmt::format("{} disagreements", disagreements));
  c.detail = fmt::format("200 instances, {} covered", covered);
  return c;
}

Check FigureOrdering() {
  Check c;
  ClassifiedHypergraph h15 = H15();
  std::vector<int> v_values;
  for (int v = 2; v <= 10; ++v) v_values.push_back(v);
  std::vector<FigureRow> rows = FigureData(h15.hypergraph, h15.classes, v_values, 10, 1);
  for (const FigureRow& row : rows) {
    if (!row.ln_n_g || !row.ln_vardens_mean) {
      c.Expect(false, fmt::format("v={} missing series", row.v));
      continue;
    }
    c.Expect(*row.ln_vardens_mean < *row.ln_n_g && *row.ln_n_g < row.ln_dens_bound,
             fmt::format("v={} order {:.3f} {:.3f} {:.3f}", row.v,
                         static_cast<double>(*row.ln_vardens_mean),
                         static_cast<double>(*row.ln_n_g),
                         static_cast<double>(row.ln_dens_bound)));
  }
  c.detail = "v=2..10, 10 relabelings each";
  return c;
}

}  // namespace
}  // namespace vca

int main() {
  using vca::Check;
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"h15 dependency matrix", vca::DependencyMatrixOfH15},
      {"symmetric bound column", vca::SymmetricColumn},
      {"asymmetric bound column", vca::AsymmetricColumn},
      {"general bound column", vca::GeneralColumn},
      {"design dependency formula", vca::DesignFormula},
      {"design bound asymptotics", vca::DesignAsymptotics},
      {"cyclic length independence", vca::CyclicIndependence},
      {"density greedy certificate", vca::VarDensCertificate},
      {"resampling termination", vca::MoserTardosTermination},
      {"verify oracle equivalence", vca::VerifyOracle},
      {"bound ordering by alphabet", vca::FigureOrdering},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c = criteria[i].second();
    const bool ok = c.failures.empty();
    failed += !ok;
    std::printf("%s %2zu %-28s %s\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), c.detail.c_str());
    for (const std::string& f : c.failures) std::printf("       - %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
