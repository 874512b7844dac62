#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "noisyrec/allocation.hpp"
#include "noisyrec/constructions.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/rng.hpp"
#include "support.hpp"

using namespace noisyrec;

namespace {

// Independent oracle: best value over two-point Bayes-plausible splits on a
// 1e-3 grid.
double brute_closure(const PiecewiseValue& f, double prior) {
  double best = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x1 = i * 1e-3;
    if (x1 > prior) break;
    for (int j = 1000; j >= 0; --j) {
      const double x2 = j * 1e-3;
      if (x2 < prior) break;
      if (x2 <= x1) continue;
      const double w = (prior - x1) / (x2 - x1);
      best = std::max(best, (1.0 - w) * f(x1) + w * f(x2));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("piecewise representation keeps point values and segments apart") {
  const PiecewiseValue f = PiecewiseValue::indicator_at_half();
  CHECK(f(0.0) == 0.0);
  CHECK(f(0.499) == 0.0);
  CHECK(f(0.5) == 1.0);   // closed at 1/2
  CHECK(f(0.501) == 1.0);
  CHECK(f(1.0) == 1.0);
  CHECK_THROWS_AS((void)f(1.5), OutOfRange);

  const PiecewiseValue g = PiecewiseValue::affine(0.2, 0.3);
  CHECK(g(0.0) == 0.2);
  CHECK(g(0.4) == doctest::Approx(0.32).epsilon(1e-15));
  CHECK(g(1.0) == 0.5);
}

TEST_CASE("piecewise validation") {
  using Segment = PiecewiseValue::Segment;
  CHECK_THROWS_AS(PiecewiseValue({0.0, 0.5}, {Segment{}}, {0.0, 0.0}),
                  InvalidPiecewiseValue);
  CHECK_THROWS_AS(PiecewiseValue({0.0, 0.5, 0.5, 1.0},
                                 {Segment{}, Segment{}, Segment{}},
                                 {0.0, 0.0, 0.0, 0.0}),
                  InvalidPiecewiseValue);
  CHECK_THROWS_AS(PiecewiseValue({0.0, 1.0}, {}, {0.0, 0.0}),
                  InvalidPiecewiseValue);
}

TEST_CASE("concave closure of the indicator is the tent") {
  const PiecewiseValue indicator = PiecewiseValue::indicator_at_half();
  for (int j = 1; j <= 49; ++j) {
    const double a = j * 0.01;
    CHECK(concave_closure_at(indicator, a) == 2.0 * a);
  }
  CHECK(concave_closure_at(indicator, 0.25) == 0.5);
  CHECK(concave_closure_at(indicator, 0.5) == 1.0);
  CHECK(concave_closure_at(indicator, 0.75) == 1.0);
  CHECK(concave_closure_at(indicator, 0.0) == 0.0);
}

TEST_CASE("affine functions are their own closure") {
  const PiecewiseValue f = PiecewiseValue::affine(0.2, 0.3);
  for (double prior : {0.0, 0.3, 0.5, 1.0}) {
    CHECK(concave_closure_at(f, prior) ==
          doctest::Approx(f(prior)).epsilon(1e-15));
  }
}

TEST_CASE("two-step closure agrees with the brute-force oracle") {
  using Segment = PiecewiseValue::Segment;
  const PiecewiseValue two_step(
      {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0},
      {Segment{0.0, 0.0}, Segment{0.4, 0.0}, Segment{1.0, 0.0}},
      {0.0, 0.4, 1.0, 1.0});
  // The hull chord from (0, 0) to (2/3, 1) dominates the adjacent
  // breakpoints; its value at 1/2 is 3/4.
  const double closure = concave_closure_at(two_step, 0.5);
  CHECK(closure == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(std::abs(closure - brute_closure(two_step, 0.5)) <= 1e-3);
  CHECK(std::abs(concave_closure_at(two_step, 0.25) -
                 brute_closure(two_step, 0.25)) <= 1e-3);
}

TEST_CASE("closure dominates the function and is midpoint concave") {
  using Segment = PiecewiseValue::Segment;
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    // Random three-piece function with jumps.
    const double b1 = 0.2 + 0.2 * rng.next_double();
    const double b2 = 0.6 + 0.2 * rng.next_double();
    std::vector<Segment> segments;
    std::vector<double> values;
    for (int s = 0; s < 3; ++s) {
      segments.push_back(
          Segment{rng.next_double(), rng.next_double() - 0.5});
    }
    for (int v = 0; v < 4; ++v) values.push_back(rng.next_double());
    const PiecewiseValue f({0.0, b1, b2, 1.0}, segments, values);

    std::vector<double> closure;
    for (int g = 0; g <= 100; ++g) {
      const double x = g * 0.01;
      const double c = concave_closure_at(f, x);
      CHECK(c >= f(x) - 1e-12);
      closure.push_back(c);
    }
    for (int g = 1; g < 100; ++g) {
      CHECK(closure[g] >=
            0.5 * (closure[g - 1] + closure[g + 1]) - 1e-12);
    }
  }
}

TEST_CASE("max minority share is twice the prior") {
  CHECK(max_minority_share(Prior(0.25)) == 0.5);
  CHECK(max_minority_share(Prior(0.1)) ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK(max_minority_share(Prior(1e-9)) ==
        doctest::Approx(2e-9).epsilon(1e-12));
}

TEST_CASE("max minority share is attained by the extremal construction") {
  for (double a : {0.05, 0.1, 0.25, 0.4, 0.45}) {
    const Prior prior(a);
    const double cap = max_minority_share(prior);
    const double attained = minority_share(
        extremal_share_experiment(prior, 2.0 * a), prior,
        TieBreak::FavorMinority);
    CHECK(std::abs(cap - attained) <= 1e-12);
  }
}

TEST_CASE("general triangle vertices") {
  const UtilityTriangle tri = general_utility_triangle(Prior(0.25));
  // Counterclockwise: (0,1), (1, (1-2a)/(1-a)), (1,1).
  CHECK(tri.vertices[0][0] == 0.0);
  CHECK(tri.vertices[0][1] == 1.0);
  CHECK(tri.vertices[1][0] == 1.0);
  CHECK(tri.vertices[1][1] ==
        doctest::Approx(0.6666666666666666).epsilon(1e-15));
  CHECK(tri.vertices[2][0] == 1.0);
  CHECK(tri.vertices[2][1] == 1.0);
  CHECK(tri.constructors[1] == "extremal(p=2*alpha)");

  CHECK(general_utility_triangle(Prior(0.4)).vertices[1][1] ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(general_utility_triangle(Prior(1e-9)).vertices[1][1] ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("symmetric triangle vertices") {
  const UtilityTriangle tri = symmetric_utility_triangle(Prior(0.25));
  CHECK(tri.vertices[1][0] == 0.5);
  CHECK(tri.vertices[1][1] ==
        doctest::Approx(0.8333333333333334).epsilon(1e-15));
  CHECK(tri.constructors[1] == "symmetric-vertex");
  CHECK(symmetric_utility_triangle(Prior(0.4)).vertices[1][1] ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(symmetric_utility_triangle(Prior(1e-6)).vertices[1][1] -
                 1.0) <= 1e-5);
}

TEST_CASE("triangle containment") {
  const UtilityTriangle tri = general_utility_triangle(Prior(0.25));
  CHECK(contains(tri, {0.5, 0.9}, 1e-9));
  CHECK_FALSE(contains(tri, {0.5, 0.5}, 1e-9));
  for (const auto& v : tri.vertices) {
    CHECK(contains(tri, v, 1e-9));
  }
  CHECK(contains(tri, {0.5, 0.9 - 1e-12}, 1e-9));
}

TEST_CASE("symmetric triangle lies inside the general triangle") {
  for (double a : {0.05, 0.1, 0.25, 0.4, 0.45}) {
    const UtilityTriangle general = general_utility_triangle(Prior(a));
    const UtilityTriangle symmetric = symmetric_utility_triangle(Prior(a));
    for (const auto& v : symmetric.vertices) {
      CHECK(contains(general, v, 1e-9));
    }
  }
}

TEST_CASE("empirical clouds are deterministic and validated") {
  const Prior prior(0.25);
  const auto a = empirical_cloud(prior, 100, 10, false, 7);
  const auto b = empirical_cloud(prior, 100, 10, false, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i][0] == b[i][0]);
    CHECK(a[i][1] == b[i][1]);
  }
  CHECK_THROWS_AS((void)empirical_cloud(prior, 0, 10, false, 7), OutOfRange);
  CHECK_THROWS_AS((void)empirical_cloud(prior, 10, 1, false, 7), OutOfRange);
}

TEST_CASE("general clouds stay inside the general triangle") {
  for (double a : {0.1, 0.25, 0.4}) {
    const Prior prior(a);
    const UtilityTriangle tri = general_utility_triangle(prior);
    for (const auto& pt : empirical_cloud(prior, 2000, 10, false, 42)) {
      CHECK(contains(tri, pt, 1e-9));
    }
  }
}

TEST_CASE("symmetric clouds respect the true cap but exit the triangle") {
  const Prior prior(0.25);
  const UtilityTriangle general = general_utility_triangle(prior);
  const UtilityTriangle symmetric = symmetric_utility_triangle(prior);
  const auto cloud = empirical_cloud(prior, 2000, 10, true, 42);
  std::size_t outside = 0;
  for (const auto& pt : cloud) {
    // Bound (b) and the 2a(1-a) share cap hold for every symmetric
    // experiment; the conjectured symmetric triangle does not.
    CHECK(contains(general, pt, 1e-9));
    const double share =
        prior.alpha() * pt[0] + prior.majority() * (1.0 - pt[1]);
    CHECK(share <= 2.0 * prior.alpha() * prior.majority() + 1e-12);
    if (!contains(symmetric, pt, 1e-9)) ++outside;
  }
  CHECK(outside > 0);  // the share = alpha edge is crossed
}

TEST_CASE("random experiment generator shape") {
  const Experiment exp = random_experiment(5, 3);
  CHECK(exp.size() == 5);
  const Experiment again = random_experiment(5, 3);
  for (std::size_t s = 0; s < 5; ++s) {
    CHECK(exp.lik_min()[s] == again.lik_min()[s]);
  }
  CHECK_THROWS_AS((void)random_experiment(0, 1), OutOfRange);
}
