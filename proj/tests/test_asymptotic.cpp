#include <doctest.h>

#include "panc/asymptotic.hpp"

using namespace panc;

TEST_CASE("leading coefficients of the channel averages") {
  CHECK(q_average_coefficient({1.0}) == doctest::Approx(0.25));
  CHECK(q_average_coefficient({1.0, 1.0}) == doctest::Approx(3.0 / 16.0));
  CHECK(q_average_coefficient({1.0, 1.0, 1.0}) == doctest::Approx(5.0 / 32.0));
  CHECK(q_average_coefficient({2.0, 0.5, 4.0}) == doctest::Approx(5.0 / 128.0));
  CHECK_THROWS_AS(q_average_coefficient({}), std::invalid_argument);
  CHECK_THROWS_AS(q_average_coefficient({1.0, -1.0}), std::invalid_argument);
}

TEST_CASE("exact channel average approaches the leading term") {
  const double rho = 1e5;
  for (const std::vector<double>& g : {std::vector<double>{0.7}, {1.0, 2.0}, {0.5, 1.5, 3.0}}) {
    const double lead = q_average_coefficient(g) * std::pow(rho, -static_cast<double>(g.size()));
    CHECK(q_average_exact(g, rho) == doctest::Approx(lead).epsilon(0.01));
  }
  // Single link in closed form: (1 - sqrt(g rho / (1 + g rho))) / 2.
  CHECK(q_average_exact({1.0}, 10.0) == doctest::Approx(0.5 * (1.0 - std::sqrt(10.0 / 11.0))).epsilon(1e-10));
}

TEST_CASE("sampled channel averages agree with the exact integral") {
  const std::vector<double> g = {1.0, 0.6};
  const ImportanceEstimate is = q_average_importance(g, 100.0, 200000, 3);
  const double ex = q_average_exact(g, 100.0);
  CHECK(std::fabs(is.mean - ex) <= 4.0 * is.std_error);
  const ImportanceEstimate pl = q_average_plain(g, 3.0, 200000, 4);
  CHECK(std::fabs(pl.mean - q_average_exact(g, 3.0)) <= 4.0 * pl.std_error);
  CHECK_THROWS_AS(q_average_plain(g, 3.0, 1, 4), std::invalid_argument);
}

TEST_CASE("minimum of exponentials is exponential with added rates") {
  CHECK(min_exponential_mean(1.0, 1.0, 1.0) == doctest::Approx(1.0 / 3.0));
  CounterRng rng(71, 0);
  std::vector<double> mins;
  for (int i = 0; i < 100000; ++i) mins.push_back(std::min(rng.exponential(2.0), rng.exponential(0.5)));
  CHECK(ks_distance_exponential(mins, min_exponential_mean(2.0, 0.5, INFINITY)) <= 0.01);
  CHECK(ks_distance_exponential(mins, 2.0) > 0.1);
}

TEST_CASE("Chernoff bound dominates the pairwise error") {
  for (double d2 : {0.1, 1.0, 4.0, 16.0})
    for (double s2 : {0.05, 0.3, 1.0}) CHECK(q1(std::sqrt(d2) / (2.0 * std::sqrt(s2))) <= chernoff_pep_bound(d2, s2));
  // Sampled pairwise error between two points at distance 1 in noise 0.1.
  CounterRng rng(72, 0);
  const int n = 200000;
  int wrong = 0;
  for (int i = 0; i < n; ++i)
    if (0.5 + std::sqrt(0.1) * rng.normal() < 0.0) ++wrong;
  CHECK(static_cast<double>(wrong) / n <= chernoff_pep_bound(1.0, 0.1));
}

TEST_CASE("expansion orders") {
  const LinkGammas g;
  CHECK(pep_panc_unscaled(Transition::T1toT4, g).leading_order() == 1);
  CHECK(pep_panc_unscaled(Transition::T1toT2, g, LevelOrder::Equal).leading_order() == 1);
  CHECK(pep_cxnc(true, Transition::T1toT2, g).leading_order() == 1);
  CHECK(pep_cxnc(true, Transition::T1toT2, g).value(100.0) == doctest::Approx(0.25 / 100.0));
  CHECK(pep_cxnc(false, Transition::T1toT2, g).leading_order() == 2);
  CHECK_THROWS_AS(pep_cxnc(true, Transition::T1toT4, g), std::invalid_argument);
  const LinkGammas sym = link_gammas(NodeGeometry{});
  CHECK(sym.g1R == doctest::Approx(sym.g2R));
}

TEST_CASE("slope fit recovers synthetic power laws") {
  std::vector<SweepResult> rows;
  for (double snr = 0.0; snr <= 30.0; snr += 2.0) {
    const double rho = std::pow(10.0, snr / 10.0);
    rows.push_back({snr, SchemeId::OriginOpt, "mc", 0.3 * std::pow(rho, -2.0), 0.0, 1000000000000ULL, 1});
    rows.push_back({snr, SchemeId::CXNC, "mc", 0.3 * std::pow(rho, -1.0), 0.0, 1000000000000ULL, 1});
  }
  CHECK(diversity_slope(rows, SchemeId::OriginOpt, 20.0, 30.0).slope == doctest::Approx(2.0));
  CHECK(diversity_slope(rows, SchemeId::CXNC, 20.0, 30.0).slope == doctest::Approx(1.0));
  CHECK(diversity_slope(rows, SchemeId::CXNC, 20.0, 30.0).points == 6);
  CHECK_THROWS_AS(diversity_slope(rows, SchemeId::CXNC, 20.0, 25.0), std::invalid_argument);
  CHECK_THROWS_AS(diversity_slope(rows, SchemeId::Genie, 20.0, 30.0), InsufficientData);
  // Points at or below 10 / trials are unresolved and dropped.
  for (auto& r : rows) r.trials = 1000;
  CHECK_THROWS_AS(diversity_slope(rows, SchemeId::OriginOpt, 20.0, 30.0), InsufficientData);
}
