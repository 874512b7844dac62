#include <cmath>

#include <doctest.h>

#include "noisyrec/allocation.hpp"
#include "noisyrec/constructions.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/rng.hpp"
#include "support.hpp"

using namespace noisyrec;
using testsupport::rows;

TEST_CASE("identical rows serve the majority everywhere") {
  const Prior prior(0.25);
  const Experiment exp = rows({0.3, 0.7}, {0.3, 0.7});
  for (TieBreak tb : {TieBreak::FavorMinority, TieBreak::FavorMajority}) {
    const AllocationRule rule = allocate(exp, prior, tb);
    CHECK(rule.assignment[0] == AgentType::Majority);
    CHECK(rule.assignment[1] == AgentType::Majority);
    CHECK(minority_share(exp, prior, tb) == 0.0);
    const GroupUtilities gu = group_utilities(exp, prior, tb);
    CHECK(gu.u_min == 0.0);
    CHECK(gu.u_maj == 1.0);
  }
}

TEST_CASE("perfect experiment reveals the type") {
  const Prior prior(0.25);
  const Experiment exp = perfect(prior);
  const AllocationRule rule = allocate(exp, prior);
  CHECK(rule.assignment[0] == AgentType::Minority);
  CHECK(rule.assignment[1] == AgentType::Majority);
  const GroupUtilities gu = group_utilities(exp, prior);
  CHECK(gu.u_min == 1.0);
  CHECK(gu.u_maj == 1.0);
  CHECK(minority_share(exp, prior) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("symmetric vertex allocation under the minority tie-break") {
  const Prior prior(0.25);
  const Experiment exp = symmetric_vertex_experiment(prior).experiment;
  const AllocationRule rule = allocate(exp, prior, TieBreak::FavorMinority);
  CHECK(rule.assignment[0] == AgentType::Minority);
  CHECK(rule.assignment[1] == AgentType::Majority);
  CHECK(rule.assignment[2] == AgentType::Majority);
  CHECK(minority_share(exp, prior, TieBreak::FavorMinority) == 0.25);
  const GroupUtilities gu = group_utilities(exp, prior);
  CHECK(gu.u_min == 0.5);
  CHECK(gu.u_maj == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("the extremal boundary signal flips with the tie-break") {
  const Prior prior(0.25);
  const Experiment exp = extremal_share_experiment(prior, 0.5);
  CHECK(minority_share(exp, prior, TieBreak::FavorMinority) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(minority_share(exp, prior, TieBreak::FavorMajority) == 0.0);
}

TEST_CASE("zero-probability signals go to the majority") {
  const Prior prior(0.25);
  const Experiment exp = rows({1.0, 0.0}, {1.0, 0.0});
  const AllocationRule rule = allocate(exp, prior, TieBreak::FavorMinority);
  CHECK(rule.assignment[1] == AgentType::Majority);
}

TEST_CASE("extremal utilities attain the tilted vertex") {
  const Prior prior(0.25);
  const GroupUtilities gu =
      group_utilities(extremal_share_experiment(prior, 0.5), prior);
  CHECK(gu.u_min == 1.0);
  CHECK(gu.u_maj == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("lower bound check on the triangle boundary") {
  const Prior prior(0.25);
  CHECK(lower_bound_check(GroupUtilities{0.0, 1.0}, prior));
  CHECK(lower_bound_check(GroupUtilities{1.0, 2.0 / 3.0}, prior));
  CHECK(lower_bound_check(GroupUtilities{0.5, 5.0 / 6.0}, prior));
  CHECK_FALSE(lower_bound_check(GroupUtilities{0.4, 0.5}, prior));
}

TEST_CASE("share identity holds exactly for random experiments") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const Prior prior(0.01 + 0.48 * rng.next_double());
    const Experiment exp =
        random_experiment(2 + rng.next_below(9), rng.next_u64());
    for (TieBreak tb : {TieBreak::FavorMinority, TieBreak::FavorMajority}) {
      const double share = minority_share(exp, prior, tb);
      const GroupUtilities gu = group_utilities(exp, prior, tb);
      const double identity =
          prior.alpha() * gu.u_min + prior.majority() * (1.0 - gu.u_maj);
      CHECK(std::abs(share - identity) <= 1e-12);
    }
  }
}

TEST_CASE("threshold allocation is welfare optimal against brute force") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const Prior prior(0.01 + 0.48 * rng.next_double());
    const std::size_t n = 2 + rng.next_below(5);  // up to 6 signals
    const Experiment exp = random_experiment(n, rng.next_u64());
    double best = 0.0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      double welfare = 0.0;
      for (std::size_t s = 0; s < n; ++s) {
        welfare += (mask >> s) & 1 ? prior.alpha() * exp.lik_min()[s]
                                   : prior.majority() * exp.lik_maj()[s];
      }
      best = std::max(best, welfare);
    }
    const double achieved =
        expected_welfare(exp, prior, allocate(exp, prior));
    CHECK(std::abs(achieved - best) <= 1e-12);
  }
}

TEST_CASE("the minority tie-break never serves less") {
  for (std::uint64_t seed = 300; seed < 400; ++seed) {
    Rng rng(seed);
    const Prior prior(0.01 + 0.48 * rng.next_double());
    const Experiment exp =
        random_experiment(2 + rng.next_below(9), rng.next_u64());
    CHECK(minority_share(exp, prior, TieBreak::FavorMinority) >=
          minority_share(exp, prior, TieBreak::FavorMajority));
  }
}

TEST_CASE("lower bound holds for random optimal allocations") {
  for (std::uint64_t seed = 500; seed < 700; ++seed) {
    Rng rng(seed);
    const Prior prior(0.01 + 0.48 * rng.next_double());
    const Experiment exp =
        random_experiment(2 + rng.next_below(9), rng.next_u64());
    for (TieBreak tb : {TieBreak::FavorMinority, TieBreak::FavorMajority}) {
      CHECK(lower_bound_check(group_utilities(exp, prior, tb), prior));
    }
  }
}

TEST_CASE("expected welfare rejects a rule of the wrong size") {
  const Prior prior(0.25);
  const Experiment exp = perfect(prior);
  CHECK_THROWS_AS(
      (void)expected_welfare(exp, prior,
                             AllocationRule{{AgentType::Minority}}),
      SizeMismatch);
}
