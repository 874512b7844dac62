// Copyright 2026 the noisyrec authors
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

#include "noisyrec/verification.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "noisyrec/allocation.hpp"
#include "noisyrec/constructions.hpp"
#include "noisyrec/experiment.hpp"
#include "noisyrec/gaussian.hpp"
#include "noisyrec/montecarlo.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/rng.hpp"
#include "noisyrec/symmetry.hpp"

namespace noisyrec::verification {

namespace {

constexpr double kAlphas[] = {0.1, 0.25, 0.4};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

CheckLine check(std::string label, bool passed, std::string detail) {
  return CheckLine{std::move(label), passed, std::move(detail)};
}

void finish(CriterionResult& result) {
  result.passed = true;
  for (const CheckLine& line : result.checks) {
    result.passed = result.passed && line.passed;
  }
}

// ---------------------------------------------------------------------------
// Long-double reference for the standard normal CDF.

long double erf_series(long double z) {
  // Maclaurin series erf(z) = 2/sqrt(pi) * sum (-1)^n z^(2n+1) / (n!(2n+1)).
  const long double z2 = z * z;
  long double power = z;
  long double sum = z;
  for (int n = 1; n < 256; ++n) {
    power *= -z2 / n;
    const long double add = power / (2 * n + 1);
    sum += add;
    if (std::abs(add) < 1e-25L * std::abs(sum)) break;
  }
  return sum * 2.0L / std::sqrt(std::acos(-1.0L));
}

long double erfc_continued_fraction(long double z) {
  // erfc(z) = exp(-z^2)/sqrt(pi) / (z + K(a_n/z)), a_n = n/2, via the
  // modified Lentz algorithm. Converges quickly for z >= 2.
  const long double tiny = 1e-40L;
  long double f = z;
  long double c = z;
  long double d = 0.0L;
  for (int n = 1; n < 512; ++n) {
    const long double a = 0.5L * n;
    d = z + a * d;
    if (d == 0.0L) d = tiny;
    c = z + a / c;
    if (c == 0.0L) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0L) < 1e-22L) break;
  }
  return std::exp(-z * z) / std::sqrt(std::acos(-1.0L)) / f;
}

}  // namespace

double std_normal_cdf_oracle(double x) {
  const long double sqrt2 = std::sqrt(2.0L);
  long double phi;
  if (std::abs(x) <= 4.0) {
    phi = 0.5L * (1.0L + erf_series(static_cast<long double>(x) / sqrt2));
  } else {
    const long double tail =
        0.5L * erfc_continued_fraction(std::abs(static_cast<long double>(x)) / sqrt2);
    phi = x < 0.0 ? tail : 1.0L - tail;
  }
  phi = std::clamp(phi, 0.0L, 1.0L);
  return static_cast<double>(phi);
}

namespace {

// ---------------------------------------------------------------------------
// Criterion 1: extremal attainment and the 2*alpha cap.

CriterionResult run_extremal_attainment(const VerifyOptions& options) {
  CriterionResult result{
      "extremal-attainment",
      "extremal construction attains every feasible share; random experiments "
      "respect the 2*alpha cap",
      false,
      {}};
  for (double a : kAlphas) {
    const Prior prior(a);
    double worst = 0.0;
    double worst_p = 0.0;
    for (int k = 0;; ++k) {
      const double p = std::min(k * 0.05, 2.0 * a);
      const Experiment exp = extremal_share_experiment(prior, p);
      const double share = minority_share(exp, prior, TieBreak::FavorMinority);
      if (std::abs(share - p) > worst) {
        worst = std::abs(share - p);
        worst_p = p;
      }
      if (p >= 2.0 * a) break;
    }
    result.checks.push_back(check(
        "attainment alpha=" + fmt(a), worst <= 1e-12,
        "max |share - p| = " + fmt(worst) + " at p = " + fmt(worst_p)));
  }
  for (double a : kAlphas) {
    const Prior prior(a);
    std::size_t violations = 0;
    double max_share = 0.0;
    for (std::size_t i = 0; i < options.general_runs_per_alpha; ++i) {
      Rng rng(options.seed + i);
      const std::size_t n = 2 + rng.next_below(9);  // |S| in [2, 10]
      const Experiment exp = random_experiment(n, rng.next_u64());
      const double share = minority_share(exp, prior, TieBreak::FavorMinority);
      max_share = std::max(max_share, share);
      if (share > 2.0 * a + 1e-12) ++violations;
    }
    result.checks.push_back(check(
        "cap alpha=" + fmt(a), violations == 0,
        fmt(static_cast<double>(options.general_runs_per_alpha)) +
            " random experiments, max share " + fmt(max_share) +
            " vs cap " + fmt(2.0 * a) + ", violations " +
            std::to_string(violations)));
  }
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 2: concave closure of the indicator.

double brute_force_closure(const PiecewiseValue& f, double prior) {
  // Two-point Bayes-plausible splits on a 1e-3 grid.
  constexpr int kGrid = 1000;
  double best = 0.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double x1 = i * 1e-3;
    if (x1 > prior) break;
    for (int j = kGrid; j >= 0; --j) {
      const double x2 = j * 1e-3;
      if (x2 < prior) break;
      if (x2 <= x1) continue;
      const double weight_high = (prior - x1) / (x2 - x1);
      const double value = (1.0 - weight_high) * f(x1) + weight_high * f(x2);
      best = std::max(best, value);
    }
  }
  return best;
}

CriterionResult run_concave_closure(const VerifyOptions&) {
  CriterionResult result{
      "concave-closure",
      "closure of the allocation indicator equals 2*alpha and matches the "
      "two-point brute force",
      false,
      {}};
  const PiecewiseValue indicator = PiecewiseValue::indicator_at_half();
  double worst_exact = 0.0, worst_brute = 0.0;
  double worst_exact_a = 0.0, worst_brute_a = 0.0;
  for (int j = 1; j <= 99; ++j) {
    const double a = j * 0.005;
    const double closure = concave_closure_at(indicator, a);
    if (std::abs(closure - 2.0 * a) > worst_exact) {
      worst_exact = std::abs(closure - 2.0 * a);
      worst_exact_a = a;
    }
    const double brute = brute_force_closure(indicator, a);
    if (std::abs(closure - brute) > worst_brute) {
      worst_brute = std::abs(closure - brute);
      worst_brute_a = a;
    }
  }
  result.checks.push_back(check(
      "closure equals 2*alpha", worst_exact <= 1e-12,
      "99 priors, max |closure - 2*alpha| = " + fmt(worst_exact) +
          " at alpha = " + fmt(worst_exact_a)));
  result.checks.push_back(check(
      "closure matches brute force", worst_brute <= 1e-3,
      "max |closure - brute| = " + fmt(worst_brute) + " at alpha = " +
          fmt(worst_brute_a)));
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 3: the conjectured symmetric share bound.

CriterionResult run_symmetric_share_bound(const VerifyOptions& options) {
  CriterionResult result{
      "symmetric-share-bound",
      "random symmetric experiments: share <= alpha, pairwise inequality, "
      "vertex attainment",
      false,
      {}};
  for (double a : kAlphas) {
    const Prior prior(a);
    const std::size_t runs = options.symmetric_runs_per_alpha;
    std::size_t share_violations = 0, pair_violations = 0,
                partner_violations = 0;
    double max_share = 0.0;
    std::string first_violation;
    for (std::size_t i = 0; i < runs; ++i) {
      Rng rng(options.seed + i);
      const std::size_t n_pairs = 1 + rng.next_below(8);
      const std::size_t n_fixed = rng.next_below(4);
      const SymmetricExperiment se =
          random_symmetric_experiment(prior, n_pairs, n_fixed, rng.next_u64());
      const PairwiseShareReport report =
          verify_pairwise_share_bound(se.experiment, prior, se.involution);
      max_share = std::max(max_share, report.share);
      if (!report.aggregate_ok) {
        ++share_violations;
        if (first_violation.empty()) {
          first_violation = "first at draw " + std::to_string(i) + " (pairs " +
                            std::to_string(n_pairs) + ", fixed " +
                            std::to_string(n_fixed) + "): share " +
                            fmt(report.share);
        }
      }
      if (!report.pairs_ok) ++pair_violations;
      if (!report.partners_ok) ++partner_violations;
    }
    const std::string suffix =
        " in " + std::to_string(runs) + " draws at alpha = " + fmt(a);
    result.checks.push_back(check(
        "share bound alpha=" + fmt(a), share_violations == 0,
        std::to_string(share_violations) + " violations of share <= alpha" +
            suffix + "; max share " + fmt(max_share) +
            " (attainable supremum 2a(1-a) = " + fmt(2.0 * a * (1.0 - a)) +
            ")" + (first_violation.empty() ? "" : "; " + first_violation)));
    result.checks.push_back(check(
        "pairwise inequality alpha=" + fmt(a), pair_violations == 0,
        std::to_string(pair_violations) +
            " experiments with P[s] > (a/(1-a))P[l(s)] on a served signal" +
            suffix));
    result.checks.push_back(check(
        "pair partners alpha=" + fmt(a), partner_violations == 0,
        "for every served signal the partner is majority-served (" +
            std::to_string(partner_violations) + " violations" + suffix + ")"));
  }
  for (double a : kAlphas) {
    const Prior prior(a);
    const SymmetricExperiment vertex = symmetric_vertex_experiment(prior);
    const double share =
        minority_share(vertex.experiment, prior, TieBreak::FavorMinority);
    result.checks.push_back(check(
        "vertex attainment alpha=" + fmt(a), std::abs(share - a) <= 1e-12,
        "vertex share " + fmt(share) + " vs alpha " + fmt(a) + " (delta " +
            fmt(share - a) + ")"));
  }
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 4: utility triangles.

CriterionResult run_utility_triangles(const VerifyOptions& options) {
  CriterionResult result{
      "utility-triangles",
      "triangle vertices attained by their constructions; empirical clouds "
      "contained",
      false,
      {}};
  for (double a : kAlphas) {
    const Prior prior(a);
    const UtilityTriangle general = general_utility_triangle(prior);
    const UtilityTriangle symmetric = symmetric_utility_triangle(prior);

    const GroupUtilities none =
        group_utilities(uninformative(prior), prior, TieBreak::FavorMinority);
    const GroupUtilities full =
        group_utilities(perfect(prior), prior, TieBreak::FavorMinority);
    const GroupUtilities tilted = group_utilities(
        extremal_share_experiment(prior, 2.0 * a), prior,
        TieBreak::FavorMinority);
    const GroupUtilities vertex = group_utilities(
        symmetric_vertex_experiment(prior).experiment, prior,
        TieBreak::FavorMinority);

    const double third_general = (1.0 - 2.0 * a) / (1.0 - a);
    const double third_symmetric = 1.0 - a / (2.0 * (1.0 - a));
    const double err =
        std::max({std::abs(none.u_min - 0.0), std::abs(none.u_maj - 1.0),
                  std::abs(full.u_min - 1.0), std::abs(full.u_maj - 1.0),
                  std::abs(tilted.u_min - 1.0),
                  std::abs(tilted.u_maj - third_general),
                  std::abs(vertex.u_min - 0.5),
                  std::abs(vertex.u_maj - third_symmetric)});
    result.checks.push_back(check(
        "vertex attainment alpha=" + fmt(a), err <= 1e-12,
        "max vertex deviation " + fmt(err) + "; extremal vertex (" +
            fmt(tilted.u_min) + ", " + fmt(tilted.u_maj) +
            "), symmetric vertex (" + fmt(vertex.u_min) + ", " +
            fmt(vertex.u_maj) + ")"));

    const auto count_outside = [](const UtilityTriangle& tri,
                                  const std::vector<std::array<double, 2>>&
                                      cloud) {
      std::size_t outside = 0;
      std::array<double, 2> worst{0.0, 0.0};
      double worst_excess = 0.0;
      for (const auto& pt : cloud) {
        if (!contains(tri, pt, 1e-9)) {
          ++outside;
          for (std::size_t i = 0; i < 3; ++i) {
            const auto& va = tri.vertices[i];
            const auto& vb = tri.vertices[(i + 1) % 3];
            const double ex = vb[0] - va[0], ey = vb[1] - va[1];
            const double cross =
                ex * (pt[1] - va[1]) - ey * (pt[0] - va[0]);
            const double dist = -cross / std::hypot(ex, ey);
            if (dist > worst_excess) {
              worst_excess = dist;
              worst = pt;
            }
          }
        }
      }
      return std::tuple{outside, worst, worst_excess};
    };

    const auto general_cloud =
        empirical_cloud(prior, options.cloud_points, 10, false, options.seed);
    const auto [g_out, g_worst, g_excess] = count_outside(general, general_cloud);
    result.checks.push_back(check(
        "general cloud alpha=" + fmt(a), g_out == 0,
        std::to_string(g_out) + " of " + std::to_string(general_cloud.size()) +
            " points outside the general triangle" +
            (g_out ? " (worst (" + fmt(g_worst[0]) + ", " + fmt(g_worst[1]) +
                         ") by " + fmt(g_excess) + ")"
                   : "")));

    const auto symmetric_cloud =
        empirical_cloud(prior, options.cloud_points, 10, true, options.seed);
    const auto [s_out, s_worst, s_excess] =
        count_outside(symmetric, symmetric_cloud);
    result.checks.push_back(check(
        "symmetric cloud alpha=" + fmt(a), s_out == 0,
        std::to_string(s_out) + " of " +
            std::to_string(symmetric_cloud.size()) +
            " points outside the symmetric triangle" +
            (s_out ? " (worst (" + fmt(s_worst[0]) + ", " + fmt(s_worst[1]) +
                         ") by " + fmt(s_excess) +
                         "); points beyond the share = alpha edge"
                   : "")));
  }
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 5: Gaussian closed forms against the simulation oracle.

CriterionResult run_gaussian_oracle(const VerifyOptions& options) {
  CriterionResult result{
      "gaussian-oracle",
      "closed-form share and utilities agree with seeded simulation within 4 "
      "standard errors",
      false,
      {}};
  const Prior prior(0.25);
  for (double kappa : {0.5, 1.0, 2.0}) {
    const GaussianModel m(prior, kappa);
    const SimReport mc = simulate_gaussian(m, TieBreak::FavorMinority,
                                           options.mc_samples, options.seed);
    const double share = minority_share(m);
    const double u_min = minority_utility(m);
    const double u_maj = majority_utility(m);
    const bool share_ok = std::abs(share - mc.share_hat) <= 4.0 * mc.share_se;
    const bool u_min_ok = std::abs(u_min - mc.u_min_hat) <= 4.0 * mc.u_min_se;
    const bool u_maj_ok = std::abs(u_maj - mc.u_maj_hat) <= 4.0 * mc.u_maj_se;
    result.checks.push_back(check(
        "kappa=" + fmt(kappa), share_ok && u_min_ok && u_maj_ok,
        "share " + fmt(share) + " vs " + fmt(mc.share_hat) + " (se " +
            fmt(mc.share_se) + "), u_min " + fmt(u_min) + " vs " +
            fmt(mc.u_min_hat) + " (se " + fmt(mc.u_min_se) + "), u_maj " +
            fmt(u_maj) + " vs " + fmt(mc.u_maj_hat) + " (se " +
            fmt(mc.u_maj_se) + ")"));
  }
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 6: monotonicity and derivative agreement.

double survival(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// Derivative of Phi(arg(kappa)) by central differences, computed on the
// survival function when the argument is positive so the difference stays
// resolvable near Phi ~ 1.
template <typename Arg>
double stable_phi_derivative(Arg&& arg, double kappa) {
  const double h = 1e-5 * kappa;
  const double a_mid = arg(kappa);
  if (a_mid > 0.0) {
    return -(survival(arg(kappa + h)) - survival(arg(kappa - h))) / (2.0 * h);
  }
  return (std_normal_cdf(arg(kappa + h)) - std_normal_cdf(arg(kappa - h))) /
         (2.0 * h);
}

CriterionResult run_monotonicity(const VerifyOptions&) {
  CriterionResult result{
      "monotonicity",
      "share and minority utility non-increasing in kappa; analytic "
      "derivatives non-positive and matching finite differences",
      false,
      {}};
  std::vector<double> grid;
  for (int k = 1; k <= 60; ++k) grid.push_back(k * 0.05);

  for (double a : kAlphas) {
    const Prior prior(a);
    const std::vector<SweepRow> rows = sweep(prior, grid);

    bool share_mono = true, u_min_mono = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      share_mono = share_mono && rows[i].share <= rows[i - 1].share + 1e-15;
      u_min_mono = u_min_mono && rows[i].u_min <= rows[i - 1].u_min + 1e-15;
    }
    result.checks.push_back(check("share non-increasing alpha=" + fmt(a),
                                  share_mono,
                                  "60-point grid kappa in [0.05, 3]"));
    result.checks.push_back(check("u_min non-increasing alpha=" + fmt(a),
                                  u_min_mono,
                                  "60-point grid kappa in [0.05, 3]"));

    double max_deriv = -1.0;
    double worst_rel_share = 0.0, worst_rel_util = 0.0;
    const double log_odds = std::log(a / (1.0 - a));
    for (double kappa : grid) {
      const GaussianModel m(prior, kappa);
      const double du = utility_derivative(m);
      max_deriv = std::max(max_deriv, du);

      const auto arg_min = [log_odds](double k) {
        return 0.5 / k + k * log_odds;
      };
      const auto arg_maj = [log_odds](double k) {
        return -0.5 / k + k * log_odds;
      };
      const double fd_util = stable_phi_derivative(arg_min, kappa);
      const double rel_util = std::abs(fd_util - du) /
                              std::max(std::abs(du), 1e-300);
      worst_rel_util = std::max(worst_rel_util, rel_util);

      const double ds = share_derivative(m);
      const double fd_share = a * stable_phi_derivative(arg_min, kappa) +
                              (1.0 - a) * stable_phi_derivative(arg_maj, kappa);
      const double rel_share = std::abs(fd_share - ds) /
                               std::max(std::abs(ds), 1e-300);
      worst_rel_share = std::max(worst_rel_share, rel_share);
    }
    result.checks.push_back(check(
        "utility derivative non-positive alpha=" + fmt(a), max_deriv <= 1e-12,
        "max d(u_min)/d(kappa) on grid = " + fmt(max_deriv)));
    result.checks.push_back(check(
        "derivatives match finite differences alpha=" + fmt(a),
        worst_rel_share <= 1e-6 && worst_rel_util <= 1e-6,
        "worst relative error: share " + fmt(worst_rel_share) + ", utility " +
            fmt(worst_rel_util)));
  }
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 7: discretized Gaussian cross-validation.

CriterionResult run_discretization(const VerifyOptions& options) {
  CriterionResult result{
      "discretization",
      "discretized Gaussian is symmetric, matches the closed-form share, and "
      "the share identity holds on evaluated experiments",
      false,
      {}};
  const Prior prior(0.25);
  const GaussianModel m(prior, 1.0);
  const SymmetricExperiment se = discretize(m, 400, 6.0);

  result.checks.push_back(check("discretized model symmetric",
                                is_symmetric(se.experiment, se.involution),
                                "400 bins, half-width 6, tol 1e-9"));

  const double discrete =
      minority_share(se.experiment, prior, TieBreak::FavorMinority);
  const double closed = minority_share(m);
  result.checks.push_back(check(
      "discrete share matches closed form", std::abs(discrete - closed) <= 1e-3,
      "discrete " + fmt(discrete) + " vs closed " + fmt(closed)));

  double worst_identity = 0.0;
  const auto check_identity = [&worst_identity](const Experiment& exp,
                                                const Prior& p) {
    for (TieBreak tb : {TieBreak::FavorMinority, TieBreak::FavorMajority}) {
      const double share = minority_share(exp, p, tb);
      const GroupUtilities gu = group_utilities(exp, p, tb);
      const double identity =
          p.alpha() * gu.u_min + p.majority() * (1.0 - gu.u_maj);
      worst_identity = std::max(worst_identity, std::abs(share - identity));
    }
  };
  check_identity(se.experiment, prior);
  check_identity(uninformative(prior), prior);
  check_identity(perfect(prior), prior);
  check_identity(extremal_share_experiment(prior, 0.5), prior);
  check_identity(symmetric_vertex_experiment(prior).experiment, prior);
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng(options.seed + i);
    const Prior p(0.01 + 0.48 * rng.next_double());
    const std::size_t n = 2 + rng.next_below(9);
    check_identity(random_experiment(n, rng.next_u64()), p);
  }
  result.checks.push_back(check(
      "share identity", worst_identity <= 1e-12,
      "max |share - (a*u_min + (1-a)(1-u_maj))| = " + fmt(worst_identity)));
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 8: allocation optimality against brute force.

CriterionResult run_allocation_optimality(const VerifyOptions& options) {
  CriterionResult result{
      "allocation-optimality",
      "threshold allocation attains the brute-force optimum over all "
      "deterministic assignments",
      false,
      {}};
  double worst = 0.0;
  for (std::size_t i = 0; i < options.optimality_runs; ++i) {
    Rng rng(options.seed + i);
    const Prior prior(0.01 + 0.48 * rng.next_double());
    const std::size_t n = 2 + rng.next_below(11);  // |S| in [2, 12]
    const Experiment exp = random_experiment(n, rng.next_u64());

    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      double welfare = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        welfare += (mask >> s) & 1
                       ? prior.alpha() * exp.lik_min()[s]
                       : prior.majority() * exp.lik_maj()[s];
      }
      best = std::max(best, welfare);
    }
    const double achieved = expected_welfare(
        exp, prior, allocate(exp, prior, TieBreak::FavorMinority));
    worst = std::max(worst, std::abs(achieved - best));
  }
  result.checks.push_back(check(
      "welfare optimality", worst <= 1e-12,
      std::to_string(options.optimality_runs) +
          " random experiments, max |allocated - brute force| = " +
          fmt(worst)));
  finish(result);
  return result;
}

// ---------------------------------------------------------------------------
// Criterion 9: normal CDF accuracy.

CriterionResult run_normal_cdf_accuracy(const VerifyOptions&) {
  CriterionResult result{
      "normal-cdf-accuracy",
      "std_normal_cdf matches the long-double reference within 1e-12 on "
      "[-8, 8]",
      false,
      {}};
  double worst = 0.0, worst_x = 0.0;
  for (int k = 0; k <= 1600; ++k) {
    const double x = -8.0 + k * 0.01;
    const double err = std::abs(std_normal_cdf(x) - std_normal_cdf_oracle(x));
    if (err > worst) {
      worst = err;
      worst_x = x;
    }
  }
  result.checks.push_back(check(
      "cdf accuracy", worst <= 1e-12,
      "1601-point grid, max error " + fmt(worst) + " at x = " + fmt(worst_x)));
  finish(result);
  return result;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = {
      "extremal-attainment",   "concave-closure", "symmetric-share-bound",
      "utility-triangles",     "gaussian-oracle", "monotonicity",
      "discretization",        "allocation-optimality",
      "normal-cdf-accuracy"};
  return ids;
}

CriterionResult run_criterion(std::string_view id,
                              const VerifyOptions& options) {
  if (id == "extremal-attainment") return run_extremal_attainment(options);
  if (id == "concave-closure") return run_concave_closure(options);
  if (id == "symmetric-share-bound") return run_symmetric_share_bound(options);
  if (id == "utility-triangles") return run_utility_triangles(options);
  if (id == "gaussian-oracle") return run_gaussian_oracle(options);
  if (id == "monotonicity") return run_monotonicity(options);
  if (id == "discretization") return run_discretization(options);
  if (id == "allocation-optimality")
    return run_allocation_optimality(options);
  if (id == "normal-cdf-accuracy") return run_normal_cdf_accuracy(options);
  throw OutOfRange("unknown verification criterion: " + std::string(id));
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& options) {
  std::vector<CriterionResult> results;
  results.reserve(criterion_ids().size());
  for (const std::string& id : criterion_ids()) {
    results.push_back(run_criterion(id, options));
  }
  return results;
}

void print_criterion(std::ostream& out, const CriterionResult& result) {
  out << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << " - "
      << result.title << '\n';
  for (const CheckLine& line : result.checks) {
    if (!line.passed) {
      out << "       failed: " << line.label << " - " << line.detail << '\n';
    }
  }
}

}  // namespace noisyrec::verification
