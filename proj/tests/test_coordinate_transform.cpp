#include <doctest.h>

#include "panc/coordinate_transform.hpp"
#include "panc/monte_carlo.hpp"

using namespace panc;

namespace {

ChannelRealization draw(std::uint64_t k, double snr_db) {
  CounterRng rng(41, k);
  ChannelRealization ch = sample_channels(NodeGeometry{}, rng);
  ch.sigma2 = std::pow(10.0, -snr_db / 10.0);
  return ch;
}

void check_rectangle(const Constellation& c, const CtTransform& t) {
  const double tol = 1e-9 * std::max(1.0, norm(c.V[0]));
  CHECK(std::fabs(dist(t.Vbar[0], t.Vbar[1]) - dist(c.V[0], c.V[1])) <= tol);
  CHECK(std::fabs(dist(t.Vbar[0], t.Vbar[2]) - dist(c.V[0], c.V[2])) <= tol);
  const Vec2 e1 = t.Vbar[1] - t.Vbar[0], e2 = t.Vbar[2] - t.Vbar[0];
  CHECK(std::fabs(dot(e1, e2)) <= 1e-9 * norm(e1) * norm(e2));
  const Mat2 cov = transformed_noise_cov(t);
  CHECK(std::fabs(cov.b) <= 1e-9 * cov.max_abs());
  CHECK(cov.a == doctest::Approx(1.0 / t.lambda1).epsilon(1e-9));
  CHECK(cov.d == doctest::Approx(1.0 / t.lambda2).epsilon(1e-9));
}

}  // namespace

TEST_CASE("cone index matches the cone regions") {
  CounterRng rng(42, 0);
  for (int t = 0; t < 2000; ++t) {
    const Vec2 z{rng.normal(), rng.normal()};
    CHECK(cone_region(cone_index(z)).contains(z, 1e-15));
  }
  CHECK_THROWS_AS(cone_region(4), std::out_of_range);
}

TEST_CASE("relay and destination transforms give rectangles with whitened axes") {
  for (std::uint64_t k = 0; k < 200; ++k) {
    const ChannelRealization ch = draw(k, 10.0);
    const Constellation irc = build_irc(ch);
    check_rectangle(irc, ct_relay(ch));
    const SchemeSetup s = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.5, 0.5);
    check_rectangle(build_idc(ch, s.p), ct_dest(ch, s.p));
  }
}

TEST_CASE("printed relay transform is twice the numerical inverse") {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const ChannelRealization ch = draw(k, 7.0);
    const CtTransform t = ct_relay(ch);
    const Mat2 p = printed_a_relay(ch), q = t.A_inv * 2.0;
    CHECK(p.a == doctest::Approx(q.a).epsilon(1e-10));
    CHECK(p.b == doctest::Approx(q.b).epsilon(1e-10));
    CHECK(p.c == doctest::Approx(q.c).epsilon(1e-10));
    CHECK(p.d == doctest::Approx(q.d).epsilon(1e-10));
  }
}

TEST_CASE("printed eigenvalues match the numerical decomposition") {
  const ChannelRealization ch = draw(3, 9.0);
  const CtTransform t = ct_relay(ch);
  const auto l = printed_eigenvalues(t.B);
  CHECK(l[0] == doctest::Approx(t.lambda1).epsilon(1e-10));
  CHECK(l[1] == doctest::Approx(t.lambda2).epsilon(1e-10));
  CHECK(printed_q(t.B).det() == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("cone detector probabilities against simulation") {
  for (std::uint64_t k = 0; k < 3; ++k) {
    const double snr = 4.0 + 4.0 * static_cast<double>(k);
    const ChannelRealization ch = draw(20 + k, snr);
    const SchemeSetup s = make_scheme(SchemeId::CtOpt, ch, 1.0, 0.5, 0.5);
    const CtTransform rt = ct_relay(ch), dt = ct_dest(ch, s.p);
    const CtBreakdown b = sper_ct(ch, s.p);
    CHECK(b.relay.max_row_defect() <= 1e-9);

    const Constellation irc = build_irc(ch);
    const double sr = std::sqrt(0.5 * ch.sigma2), sd = std::sqrt(ch.sigma2);
    CounterRng rng(43, k);
    const std::uint64_t n = 200000;
    std::uint64_t err = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
      const int i = static_cast<int>(rng.next_u64() & 3ULL);
      const Vec2 yr{irc.V[i].x + sr * rng.normal(), irc.V[i].y + sr * rng.normal()};
      const int r = ct_detect(rt, yr);
      const Vec2 m = mislabeled_point(ch, s.p, kPairs[i], panc_level(r, s.p));
      const Vec2 yd{m.x + sd * rng.normal(), m.y + sd * rng.normal()};
      if (ct_detect(dt, yd) != i) ++err;
    }
    const double mc = static_cast<double>(err) / n;
    CHECK(std::fabs(mc - b.total) <= 4.0 * std::sqrt(b.total * (1.0 - b.total) / n));
  }
}

TEST_CASE("cone detector is never better than the ML detector") {
  for (std::uint64_t k = 0; k < 30; ++k) {
    const ChannelRealization ch = draw(60 + k, 3.0 + static_cast<double>(k));
    const RelayLevelDistribution ml = relay_level_probs(build_irc(ch), ch.sigma2);
    const RelayLevelDistribution cone = ct_level_probs(ct_relay(ch));
    double ml_ok = 0.0, cone_ok = 0.0;
    for (int i = 0; i < 4; ++i) {
      ml_ok += ml.p[i][i];
      cone_ok += cone.p[i][i];
    }
    CHECK(cone_ok <= ml_ok + 1e-9);
  }
}
