#include <doctest.h>

#include "panc/monte_carlo.hpp"

using namespace panc;

TEST_CASE("counter streams are deterministic and distinct") {
  CounterRng a(1, 2, 3), b(1, 2, 3), c(1, 2, 4), d(2, 2, 3);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next_u64();
    CHECK(x == b.next_u64());
    CHECK(x != c.next_u64());
    CHECK(x != d.next_u64());
  }
}

TEST_CASE("uniform and normal moments") {
  CounterRng r(9, 0);
  const int n = 400000;
  double su = 0.0, sn = 0.0, sn2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = r.uniform();
    CHECK_FALSE(u <= 0.0);
    su += u;
    const double z = r.normal();
    sn += z;
    sn2 += z * z;
  }
  CHECK(su / n == doctest::Approx(0.5).epsilon(0.005));
  CHECK(std::fabs(sn / n) < 0.01);
  CHECK(sn2 / n == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("sampled link powers follow the path-loss means") {
  const NodeGeometry g;
  CounterRng rng(61, 0);
  const int n = 200000;
  double s1 = 0.0, s2 = 0.0, s3 = 0.0, s4 = 0.0, s5 = 0.0;
  for (int i = 0; i < n; ++i) {
    const ChannelRealization ch = sample_channels(g, rng);
    s1 += std::norm(ch.h1R);
    s2 += std::norm(ch.h2R);
    s3 += ch.h1D * ch.h1D;
    s4 += ch.h2D * ch.h2D;
    s5 += ch.hRD * ch.hRD;
  }
  CHECK(s1 / n == doctest::Approx(g.gain(g.S1, g.R)).epsilon(0.01));
  CHECK(s2 / n == doctest::Approx(g.gain(g.S2, g.R)).epsilon(0.01));
  CHECK(s3 / n == doctest::Approx(g.gain(g.S1, g.D)).epsilon(0.01));
  CHECK(s4 / n == doctest::Approx(g.gain(g.S2, g.D)).epsilon(0.01));
  CHECK(s5 / n == doctest::Approx(g.gain(g.R, g.D)).epsilon(0.01));
}

TEST_CASE("scheme names round-trip") {
  for (SchemeId s : kAllSchemes) CHECK(parse_scheme(scheme_name(s)) == s);
  CHECK_THROWS_AS(parse_scheme("XOR"), std::invalid_argument);
}

TEST_CASE("noiseless observations decode to the sent pair") {
  CounterRng rng(62, 0);
  const ChannelRealization ch = sample_channels(NodeGeometry{}, rng);
  for (SchemeId id : kAllSchemes) {
    const SchemeSetup s = make_scheme(id, ch, 1.0, 0.3, 0.8);
    for (int i = 0; i < 4; ++i) {
      const cplx y = ch.h1R * double(kPairs[i].x1) + ch.h2R * double(kPairs[i].x2);
      CHECK(relay_detect(y, ch) == i);
      CHECK(dest_detect(s.hyp[i].x, s.hyp[i].y, s) == i);
    }
  }
}

TEST_CASE("scheme setups") {
  CounterRng rng(63, 0);
  ChannelRealization ch = sample_channels(NodeGeometry{}, rng);
  const SchemeSetup g = make_scheme(SchemeId::Genie, ch, 1.0, 0.3, 0.8);
  CHECK(g.genie);
  CHECK(g.alpha == 1.0);
  const SchemeSetup x = make_scheme(SchemeId::CXNC, ch, 2.0, 0.3, 0.8);
  CHECK(x.cxnc);
  CHECK(x.forwarded[0] == doctest::Approx(std::sqrt(2.0) * ch.hRD));
  CHECK(x.forwarded[1] == doctest::Approx(-std::sqrt(2.0) * ch.hRD));
  const SchemeSetup o = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.3, 0.8);
  CHECK(o.alpha == doctest::Approx(scaling_factor(link_snrs(ch, 1.0))));
  CHECK(o.forwarded[0] == doctest::Approx(std::sqrt(o.alpha) * o.p.a * ch.hRD));
  CHECK(make_scheme(SchemeId::OriginOptNoAlpha, ch, 1.0, 0.3, 0.8).alpha == 1.0);
}

TEST_CASE("binomial confidence interval") {
  CHECK(ci95_binomial(0.1, 10000) == doctest::Approx(1.96 * 0.003));
  CHECK(ci95_binomial(0.5, 0) == 0.0);
}

TEST_CASE("sweep results do not depend on the thread count") {
  McConfig c;
  c.snr_db = {0.0, 10.0};
  c.schemes = {SchemeId::OriginOpt, SchemeId::CXNC, SchemeId::Random};
  c.channels = 64;
  c.symbols = 50;
  c.exact = true;
  c.ct = true;
  c.analytic_channels = 8;
  c.threads = 1;
  const SweepOutput a = run_sweep(c);
  c.threads = 3;
  const SweepOutput b = run_sweep(c);
  REQUIRE(a.rows.size() == b.rows.size());
  CHECK(a.rows.size() == 2 * 3 * 3);
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].method == b.rows[i].method);
    if (std::isnan(a.rows[i].sper)) {
      CHECK(std::isnan(b.rows[i].sper));
      CHECK(a.rows[i].scheme == SchemeId::CXNC);
      CHECK(a.rows[i].method == "ct");
    } else {
      CHECK(a.rows[i].sper == b.rows[i].sper);
    }
  }
  for (std::size_t s = 0; s < 2; ++s)
    for (std::size_t k = 0; k < 3; ++k) CHECK(total(a.confusion[s][k]) == 64 * 50);
}

TEST_CASE("fixed-channel simulation is blocked by index, not by thread") {
  CounterRng rng(64, 0);
  const ChannelRealization ch = sample_channels(NodeGeometry{}, rng);
  const SchemeSetup s = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.5, 0.5);
  const auto a = simulate_fixed_channel(ch, s, {3.0, 6.0}, 150000, 5, 1);
  const auto b = simulate_fixed_channel(ch, s, {3.0, 6.0}, 150000, 5, 4);
  CHECK(a == b);
  CHECK(total(a[0]) == 150000);
}

TEST_CASE("invalid sweep configurations") {
  McConfig c;
  c.snr_db = {0.0};
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);  // no schemes
  c.schemes = {SchemeId::Fixed};
  c.snr_db = {5.0, 5.0};
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
  c.snr_db = {5.0};
  c.channels = 0;
  CHECK_THROWS_AS(run_sweep(c), std::invalid_argument);
  NodeGeometry g;
  g.R = g.D;
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);
}
