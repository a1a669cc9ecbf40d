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

#include "vca/general_lll.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "vca/parallel.h"

namespace vca {
namespace {

// Evaluation is clamped to this logit range so that x stays strictly inside
// (0, 1) in double precision.
constexpr double kMinLogit = -700.0;
constexpr double kMaxLogit = 35.0;
constexpr int kMaxGridStarts = 4096;

double Softplus(double y) {
  return y > 0 ? y + std::log1p(std::exp(-y)) : std::log1p(std::exp(y));
}

double Sigmoid(double y) { return 1.0 / (1.0 + std::exp(-y)); }

class SlackObjective {
 public:
  SlackObjective(const EventClassSystem& sys, double n)
      : dep_(sys.dep.counts), log_p_(sys.num_classes()) {
    for (int i = 0; i < sys.num_classes(); ++i) {
      log_p_[i] = static_cast<double>(
          LogMissProbability(sys.v, sys.class_rank[i], n));
    }
  }

  int dim() const { return static_cast<int>(log_p_.size()); }

  // min_i [ln x_i + sum_j dep_ij ln(1 - x_j) - ln p_i] with x = sigmoid(y).
  double Margin(const std::vector<double>& y) const {
    const int c = dim();
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < c; ++i) {
      double yi = std::clamp(y[i], kMinLogit, kMaxLogit);
      double slack = -Softplus(-yi) - log_p_[i];
      for (int j = 0; j < c; ++j) {
        if (dep_[i][j] != 0) {
          slack -= dep_[i][j] * Softplus(std::clamp(y[j], kMinLogit, kMaxLogit));
        }
      }
      worst = std::min(worst, slack);
    }
    return worst;
  }

 private:
  const std::vector<std::vector<int>>& dep_;
  std::vector<double> log_p_;
};

struct Vertex {
  std::vector<double> y;
  double value;  // negated margin; minimized
};

// Nelder-Mead on -Margin with restarts from the incumbent until a restart
// stops improving.
Vertex NelderMead(const SlackObjective& f, std::vector<double> start,
                  int max_iterations) {
  const int c = f.dim();
  auto eval = [&f](const std::vector<double>& y) { return -f.Margin(y); };
  Vertex best{start, eval(start)};
  int budget = max_iterations;
  for (int restart = 0; restart < 4 && budget > 0; ++restart) {
    std::vector<Vertex> simplex;
    simplex.push_back(best);
    for (int i = 0; i < c; ++i) {
      std::vector<double> y = best.y;
      y[i] += 1.0;
      simplex.push_back({y, eval(y)});
    }
    while (budget-- > 0) {
      std::sort(simplex.begin(), simplex.end(),
                [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
      double spread = simplex.back().value - simplex.front().value;
      double size = 0;
      for (int i = 1; i <= c; ++i) {
        for (int j = 0; j < c; ++j) {
          size = std::max(size, std::abs(simplex[i].y[j] - simplex[0].y[j]));
        }
      }
      if (spread < 1e-13 && size < 1e-9) break;

      std::vector<double> centroid(c, 0.0);
      for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) centroid[j] += simplex[i].y[j] / c;
      }
      auto along = [&](double coef) {
        std::vector<double> y(c);
        for (int j = 0; j < c; ++j) {
          y[j] = centroid[j] + coef * (simplex[c].y[j] - centroid[j]);
        }
        return Vertex{y, eval(y)};
      };
      Vertex reflected = along(-1.0);
      if (reflected.value < simplex[0].value) {
        Vertex expanded = along(-2.0);
        simplex[c] = expanded.value < reflected.value ? expanded : reflected;
      } else if (reflected.value < simplex[c - 1].value) {
        simplex[c] = reflected;
      } else {
        Vertex contracted = reflected.value < simplex[c].value ? along(-0.5)
                                                               : along(0.5);
        if (contracted.value < std::min(reflected.value, simplex[c].value)) {
          simplex[c] = contracted;
        } else {
          for (int i = 1; i <= c; ++i) {
            for (int j = 0; j < c; ++j) {
              simplex[i].y[j] = simplex[0].y[j] + 0.5 * (simplex[i].y[j] - simplex[0].y[j]);
            }
            simplex[i].value = eval(simplex[i].y);
          }
        }
      }
    }
    auto it = std::min_element(
        simplex.begin(), simplex.end(),
        [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    bool improved = it->value < best.value - 1e-12;
    if (it->value < best.value) best = *it;
    if (!improved) break;
  }
  return best;
}

double Logit(double x) { return std::log(x) - std::log1p(-x); }

// Start 0 is the symmetric witness x_i = 1/(d+1); the rest form a log-spaced
// grid (or its diagonal when the grid would be too large).
std::vector<std::vector<double>> StartPoints(const EventClassSystem& sys,
                                             const GeneralLllOptions& options) {
  const int c = sys.num_classes();
  int d = 0;
  for (int i = 0; i < c; ++i) d = std::max(d, sys.dep.RowSum(i));
  std::vector<std::vector<double>> starts;
  starts.emplace_back(c, Logit(1.0 / (d + 1.0)));

  int g = options.grid_points;
  if (g <= 0) {
    g = 2;
    while (std::pow(static_cast<double>(g), c) < options.min_starts) ++g;
  }
  const double lo = std::log(options.min_start);
  const double hi = std::log(options.max_start);
  std::vector<double> levels(g);
  for (int k = 0; k < g; ++k) {
    levels[k] = Logit(std::exp(g == 1 ? hi : lo + (hi - lo) * k / (g - 1)));
  }
  if (std::pow(static_cast<double>(g), c) > kMaxGridStarts) {
    int points = std::max(options.min_starts, g);
    for (int k = 0; k < points; ++k) {
      double x = std::exp(lo + (hi - lo) * k / std::max(points - 1, 1));
      starts.emplace_back(c, Logit(x));
    }
    return starts;
  }
  std::vector<int> digit(c, 0);
  while (true) {
    std::vector<double> y(c);
    for (int j = 0; j < c; ++j) y[j] = levels[digit[j]];
    starts.push_back(std::move(y));
    int j = 0;
    while (j < c && ++digit[j] == g) digit[j++] = 0;
    if (j == c) break;
  }
  return starts;
}

SlackOptimum Pick(const std::vector<Vertex>& results) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[best].value) best = i;
  }
  SlackOptimum out;
  out.margin = -results[best].value;
  for (double y : results[best].y) {
    out.x.push_back(Sigmoid(std::clamp(y, kMinLogit, kMaxLogit)));
  }
  return out;
}

}  // namespace

SlackOptimum MaximizeSlack(const EventClassSystem& sys, double n,
                           const GeneralLllOptions& options) {
  CheckEventClassSystem(sys);
  const SlackObjective f(sys, n);
  const auto starts = StartPoints(sys, options);
  std::vector<Vertex> results(starts.size());
  const int count = static_cast<int>(starts.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(WorkerCount())
  for (int s = 0; s < count; ++s) {
    results[s] = NelderMead(f, starts[s], options.max_iterations);
  }
  return Pick(results);
}

namespace serial {

SlackOptimum MaximizeSlack(const EventClassSystem& sys, double n,
                           const GeneralLllOptions& options) {
  CheckEventClassSystem(sys);
  const SlackObjective f(sys, n);
  std::vector<Vertex> results;
  for (const auto& start : StartPoints(sys, options)) {
    results.push_back(NelderMead(f, start, options.max_iterations));
  }
  return Pick(results);
}

}  // namespace serial

BoundReport NProbSymmetric(const EventClassSystem& sys) {
  CheckEventClassSystem(sys);
  int d = 0;
  for (int i = 0; i < sys.num_classes(); ++i) d = std::max(d, sys.dep.RowSum(i));
  int t = *std::max_element(sys.class_rank.begin(), sys.class_rank.end());
  return NProbSymmetric(d, t, sys.v);
}

GeneralLllResult NGeneralLll(const EventClassSystem& sys,
                             const GeneralLllOptions& options) {
  CheckEventClassSystem(sys);
  auto accept = [&](double n, SlackOptimum& opt) {
    opt = MaximizeSlack(sys, n, options);
    return opt.margin >= 0 && LllFeasibleGeneral(sys, n, opt.x);
  };

  GeneralLllResult result;
  double hi = options.n_cap > 0
                  ? options.n_cap
                  : static_cast<double>(NProbSymmetric(sys).n_real);
  SlackOptimum witness;
  if (!accept(hi, witness)) return result;

  double lo = 1.0;
  SlackOptimum probe;
  if (accept(lo, probe)) {
    hi = lo;
    witness = probe;
  }
  while (hi - lo > options.tolerance) {
    double mid = 0.5 * (lo + hi);
    if (accept(mid, probe)) {
      hi = mid;
      witness = probe;
    } else {
      lo = mid;
    }
  }
  result.found = true;
  result.witness = witness.x;
  result.report.name = "general-lll";
  result.report.n_real = hi;
  result.report.n_int = static_cast<long long>(std::ceil(hi));
  result.report.inputs =
      fmt::format("v={} ranks={} x={}", sys.v, fmt::join(sys.class_rank, ","),
                  fmt::join(witness.x, ","));
  return result;
}

}  // namespace vca
