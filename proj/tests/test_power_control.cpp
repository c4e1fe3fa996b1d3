#include <doctest.h>

#include "panc/monte_carlo.hpp"
#include "panc/power_control.hpp"

using namespace panc;

namespace {

ChannelRealization draw(std::uint64_t k) {
  CounterRng rng(51, k);
  return sample_channels(NodeGeometry{}, rng);
}

}  // namespace

TEST_CASE("scaling factor examples") {
  CHECK(scaling_factor({2.0, 8.0, SnrMode::Instantaneous}) == doctest::Approx(0.25));
  CHECK(scaling_factor({9.0, 8.0, SnrMode::Instantaneous}) == 1.0);
  CHECK(scaling_factor({0.0, 8.0, SnrMode::Instantaneous}) == 0.0);
  CHECK(scaling_factor({3.0, 0.0, SnrMode::Instantaneous}) == 0.0);
  CHECK_THROWS_AS(scaling_factor({-1.0, 1.0, SnrMode::Instantaneous}), std::invalid_argument);
}

TEST_CASE("link SNRs use the weakest source-relay combination") {
  ChannelRealization ch;
  ch.h1R = {1.0, 0.0};
  ch.h2R = {-0.8, 0.1};
  ch.sigma2 = 0.5;
  CHECK(gamma_sr(ch) == doctest::Approx(std::norm(ch.h1R + ch.h2R) / 0.5));
  ch.hRD = 2.0;
  CHECK(link_snrs(ch, 1.5).gamma_rd == doctest::Approx(1.5 * 4.0 / 0.5));
  CHECK(link_snrs_statistical(ch, 1.5, 3.0).gamma_rd == doctest::Approx(9.0));
}

TEST_CASE("MAC bound: approximation below the union bound, both vanish at high SNR") {
  ChannelRealization ch = draw(1);
  ch.sigma2 = 0.3;
  const MacBound m = mac_upper_bound(ch);
  CHECK(m.approx <= m.upper);
  ch.sigma2 = 1e-8;
  CHECK(mac_upper_bound(ch).upper < 1e-12);
}

TEST_CASE("all-distance closed form: budget and equal diagonals") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    const ChannelRealization ch = draw(k);
    const PowerPair p = optimize_powers_exact(ch, 1.0);
    if (p.clamped) continue;
    CHECK(p.a * p.a + p.b * p.b == doctest::Approx(2.0).epsilon(1e-12));
    const DistanceTerms d = distance_terms(ch, p.a, p.b);
    CHECK(d.diag23 == doctest::Approx(d.diag14).epsilon(1e-10));
  }
}

TEST_CASE("all-distance closed form maximizes the shorter diagonal on the budget circle") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const ChannelRealization ch = draw(k);
    const PowerPair p = optimize_powers_exact(ch, 1.0);
    if (p.clamped) continue;
    auto diag = [&](double a, double b) {
      const DistanceTerms d = distance_terms(ch, a, b);
      return std::min(d.diag14, d.diag23);
    };
    double best = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const double t = 2.0 * kPi * i / 20000.0;
      best = std::max(best, diag(std::sqrt(2.0) * std::cos(t), std::sqrt(2.0) * std::sin(t)));
    }
    CHECK(diag(p.a, p.b) >= (1.0 - 1e-6) * best);
  }
}

TEST_CASE("rectangle-edge closed form: equal edges, budget, grid optimality") {
  for (std::uint64_t k = 0; k < 100; ++k) {
    const ChannelRealization ch = draw(k);
    const PowerPair p = optimize_powers_ct(ch, 1.0);
    CHECK(p.a * p.a + p.b * p.b == doctest::Approx(2.0).epsilon(1e-12));
    const DistanceTerms d = distance_terms(ch, p.a, p.b);
    if (!p.clamped) CHECK(d.side12 == doctest::Approx(d.side13).epsilon(1e-10));
    const PowerPair g = grid_oracle(ch, 1.0, Objective::CtMinEdge, 512);
    CHECK(objective_value(ch, p.a, p.b, Objective::CtMinEdge) >=
          (1.0 - 1e-3) * objective_value(ch, g.a, g.b, Objective::CtMinEdge));
  }
}

TEST_CASE("rectangle-edge closed form clamps to the budget") {
  ChannelRealization ch;
  ch.h1D = 3.0;
  ch.h2D = 0.1;
  ch.hRD = 0.5;
  const PowerPair p = optimize_powers_ct(ch, 1.0);
  CHECK(p.clamped);
  CHECK(p.a * p.a + p.b * p.b == doctest::Approx(2.0));
  CHECK(p.a == doctest::Approx(p.b));
}

TEST_CASE("baseline levels and oracle arguments") {
  const PowerPair p = baseline_powers(0.0, 1.0);
  CHECK(p.a == 0.0);
  CHECK(p.b == doctest::Approx(std::sqrt(2.0)));
  const PowerPair q = baseline_powers(0.3, 2.0);
  CHECK(q.a * q.a + q.b * q.b == doctest::Approx(4.0));
  CHECK_THROWS_AS(baseline_powers(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(grid_oracle(ChannelRealization{}, 1.0, Objective::CtMinEdge, 100), std::invalid_argument);
}
