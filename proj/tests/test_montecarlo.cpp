#include <cmath>

#include <doctest.h>

#include "noisyrec/constructions.hpp"
#include "noisyrec/montecarlo.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/rng.hpp"
#include "support.hpp"

using namespace noisyrec;

TEST_CASE("discrete simulation is deterministic per seed") {
  const Prior prior(0.25);
  const Experiment exp = symmetric_vertex_experiment(prior).experiment;
  const SimReport a =
      simulate_discrete(exp, prior, TieBreak::FavorMinority, 100000, 7);
  const SimReport b =
      simulate_discrete(exp, prior, TieBreak::FavorMinority, 100000, 7);
  CHECK(a.share_hat == b.share_hat);
  CHECK(a.u_min_hat == b.u_min_hat);
  CHECK(a.u_maj_hat == b.u_maj_hat);
  CHECK(a.n_minority == b.n_minority);

  const SimReport c =
      simulate_discrete(exp, prior, TieBreak::FavorMinority, 100000, 8);
  CHECK(a.share_hat != c.share_hat);  // different stream
}

TEST_CASE("discrete estimates converge to the allocation metrics") {
  const Prior prior(0.25);
  SUBCASE("perfect experiment") {
    const SimReport r = simulate_discrete(perfect(prior), prior,
                                          TieBreak::FavorMinority, 100000, 42);
    CHECK(std::abs(r.share_hat - 0.25) <= 3.0 * r.share_se);
    CHECK(r.n_minority + r.n_majority == r.n_samples);
  }
  SUBCASE("symmetric vertex experiment") {
    const Experiment exp = symmetric_vertex_experiment(prior).experiment;
    const SimReport r = simulate_discrete(exp, prior,
                                          TieBreak::FavorMinority, 1000000, 42);
    CHECK(std::abs(r.u_min_hat - 0.5) <= 3.0 * r.u_min_se);
    CHECK(std::abs(r.share_hat - 0.25) <= 3.0 * r.share_se);
    CHECK(std::abs(r.u_maj_hat - 5.0 / 6.0) <= 3.0 * r.u_maj_se);
  }
}

TEST_CASE("discrete oracle agreement on random experiments") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Prior prior(0.05 + 0.4 * rng.next_double());
    const Experiment exp =
        random_experiment(2 + rng.next_below(7), rng.next_u64());
    const SimReport r = simulate_discrete(exp, prior,
                                          TieBreak::FavorMinority, 1000000,
                                          1000 + seed);
    const double exact = minority_share(exp, prior, TieBreak::FavorMinority);
    CHECK(std::abs(r.share_hat - exact) <= 4.0 * std::max(r.share_se, 1e-9));
  }
}

TEST_CASE("gaussian simulation tracks the closed forms within 3 SE") {
  const Prior prior(0.25);
  for (double kappa : {0.5, 1.0, 2.0}) {
    const GaussianModel m(prior, kappa);
    const SimReport r =
        simulate_gaussian(m, TieBreak::FavorMinority, 1000000, 42);
    CHECK(std::abs(r.share_hat - minority_share(m)) <= 3.0 * r.share_se);
    CHECK(std::abs(r.u_min_hat - minority_utility(m)) <= 3.0 * r.u_min_se);
    CHECK(std::abs(r.u_maj_hat - majority_utility(m)) <= 3.0 * r.u_maj_se);
  }
}

TEST_CASE("standard errors follow the binomial formula") {
  const Prior prior(0.25);
  const SimReport r = simulate_discrete(perfect(prior), prior,
                                        TieBreak::FavorMinority, 10000, 42);
  CHECK(r.share_se ==
        doctest::Approx(std::sqrt(r.share_hat * (1.0 - r.share_hat) / 10000.0))
            .epsilon(1e-12));
  CHECK(r.u_min_se ==
        doctest::Approx(std::sqrt(r.u_min_hat * (1.0 - r.u_min_hat) /
                                  static_cast<double>(r.n_minority)))
            .epsilon(1e-12));
}

TEST_CASE("a group with no realized samples reports nan standard error") {
  const Prior prior(1e-4);
  const Experiment exp = perfect(prior);
  // Ten samples at alpha = 1e-4: overwhelmingly no minority draw.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SimReport r =
        simulate_discrete(exp, prior, TieBreak::FavorMinority, 10, seed);
    if (r.n_minority == 0) {
      CHECK(r.u_min_hat == 0.0);
      CHECK(std::isnan(r.u_min_se));
      return;
    }
  }
  FAIL("no seed produced an empty minority group");
}

TEST_CASE("sample count must be positive") {
  const Prior prior(0.25);
  CHECK_THROWS_AS((void)simulate_discrete(perfect(prior), prior,
                                          TieBreak::FavorMinority, 0, 1),
                  OutOfRange);
  CHECK_THROWS_AS((void)simulate_gaussian(GaussianModel(prior, 1.0),
                                          TieBreak::FavorMinority, 0, 1),
                  OutOfRange);
}
