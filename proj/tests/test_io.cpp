#include <cmath>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "noisyrec/constructions.hpp"
#include "noisyrec/gaussian.hpp"
#include "noisyrec/io.hpp"
#include "noisyrec/region.hpp"
#include "noisyrec/rng.hpp"
#include "support.hpp"

using namespace noisyrec;

TEST_CASE("experiment json round trip is lossless") {
  const Prior prior(0.25);
  auto [exp, inv] = symmetric_vertex_experiment(prior);
  const ExperimentBundle bundle{prior, std::move(exp), std::move(inv)};

  std::stringstream buffer;
  write_experiment_json(buffer, bundle);
  const ExperimentBundle back = read_experiment_json(buffer);

  CHECK(back.prior.alpha() == bundle.prior.alpha());
  REQUIRE(back.experiment.size() == bundle.experiment.size());
  for (std::size_t s = 0; s < back.experiment.size(); ++s) {
    CHECK(back.experiment.lik_min()[s] == bundle.experiment.lik_min()[s]);
    CHECK(back.experiment.lik_maj()[s] == bundle.experiment.lik_maj()[s]);
    CHECK(back.experiment.space().label(s) ==
          bundle.experiment.space().label(s));
  }
  REQUIRE(back.involution.has_value());
  CHECK((*back.involution)(0) == 1);
}

TEST_CASE("random experiments round trip bit-exactly") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    noisyrec::Rng rng(seed);
    const Prior prior(0.01 + 0.48 * rng.next_double());
    const ExperimentBundle bundle{
        prior, noisyrec::random_experiment(2 + rng.next_below(9),
                                           rng.next_u64()),
        std::nullopt};
    std::stringstream buffer;
    write_experiment_json(buffer, bundle);
    const ExperimentBundle back = read_experiment_json(buffer);
    CHECK(back.prior.alpha() == bundle.prior.alpha());
    REQUIRE(back.experiment.size() == bundle.experiment.size());
    for (std::size_t s = 0; s < back.experiment.size(); ++s) {
      CHECK(back.experiment.lik_min()[s] == bundle.experiment.lik_min()[s]);
      CHECK(back.experiment.lik_maj()[s] == bundle.experiment.lik_maj()[s]);
    }
  }
}

TEST_CASE("embedding survives the round trip") {
  const Prior prior(0.25);
  const SignalSpace space({"lo", "hi"}, {{{0.0, 1.0}, {1.0, -1.0}}});
  const ExperimentBundle bundle{
      prior, Experiment(space, {0.5, 0.5}, {0.25, 0.75}), std::nullopt};
  std::stringstream buffer;
  write_experiment_json(buffer, bundle);
  const ExperimentBundle back = read_experiment_json(buffer);
  REQUIRE(back.experiment.space().embedding().has_value());
  CHECK((*back.experiment.space().embedding())[1][1] == -1.0);
}

TEST_CASE("schema violations name the failed invariant") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_experiment_json(in);
  };
  SUBCASE("row sum violation") {
    CHECK_THROWS_WITH_AS(
        (void)parse(R"({"alpha":0.25,"signals":["a","b"],
                        "lik_min":[0.5,0.4],"lik_maj":[0.5,0.5]})"),
        doctest::Contains("row sum"), InvalidExperiment);
  }
  SUBCASE("alpha out of range") {
    CHECK_THROWS_AS((void)parse(R"({"alpha":0.6,"signals":["a"],
                                    "lik_min":[1.0],"lik_maj":[1.0]})"),
                    InvalidPrior);
  }
  SUBCASE("missing field") {
    CHECK_THROWS_AS((void)parse(R"({"alpha":0.25,"signals":["a"],
                                    "lik_min":[1.0]})"),
                    InvalidExperiment);
  }
  SUBCASE("malformed json") {
    CHECK_THROWS_AS((void)parse("{"), InvalidExperiment);
  }
  SUBCASE("involution must be self-inverse") {
    CHECK_THROWS_AS(
        (void)parse(R"({"alpha":0.25,"signals":["a","b","c"],
                        "lik_min":[0.2,0.3,0.5],"lik_maj":[0.2,0.3,0.5],
                        "involution":[1,2,0]})"),
        InvalidInvolution);
  }
  SUBCASE("involution length must match") {
    CHECK_THROWS_AS(
        (void)parse(R"({"alpha":0.25,"signals":["a","b"],
                        "lik_min":[0.5,0.5],"lik_maj":[0.5,0.5],
                        "involution":[0]})"),
        InvalidInvolution);
  }
}

TEST_CASE("sim report json uses null for undefined standard errors") {
  SimReport report;
  report.n_samples = 10;
  report.seed = 3;
  report.share_hat = 0.1;
  report.share_se = 0.01;
  report.u_min_hat = 0.0;
  report.u_min_se = std::nan("");
  report.u_maj_hat = 1.0;
  report.u_maj_se = 0.0;
  const std::string text = sim_report_json(report);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["u_min_se"].is_null());
  CHECK(j["share_se"].get<double>() == 0.01);
  CHECK(j["seed"].get<std::uint64_t>() == 3);
}

TEST_CASE("format_double survives a parse round trip") {
  for (double v : {1.0 / 3.0, 0.1, 2.0 / 3.0, 1e-300, 123456.789,
                   0.8333333333333334}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("sweep csv layout") {
  const Prior prior(0.25);
  const std::vector<double> grid = {0.5, 1.0};
  const std::vector<SweepRow> rows = sweep(prior, grid);
  std::ostringstream out;
  write_sweep_csv(out, rows);
  std::istringstream in(out.str());
  std::string header, line1, line2, extra;
  std::getline(in, header);
  std::getline(in, line1);
  std::getline(in, line2);
  CHECK(header == "kappa,x_star,share,u_min,u_maj");
  CHECK_FALSE(std::getline(in, extra));
  // First column parses back to the kappa value.
  CHECK(std::stod(line1.substr(0, line1.find(','))) == 0.5);
}

TEST_CASE("vertices and cloud csv layout") {
  const Prior prior(0.25);
  std::ostringstream vertices;
  write_vertices_csv(vertices, general_utility_triangle(prior));
  CHECK(vertices.str().starts_with("u_min,u_maj,constructor\n"));
  CHECK(vertices.str().find("extremal(p=2*alpha)") != std::string::npos);

  std::ostringstream cloud;
  const std::vector<std::array<double, 2>> points = {{0.25, 0.75}};
  write_cloud_csv(cloud, points);
  CHECK(cloud.str() == "u_min,u_maj\n0.25,0.75\n");
}
