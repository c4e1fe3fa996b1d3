#include <doctest.h>

#include "panc/exact_sper.hpp"
#include "panc/monte_carlo.hpp"

using namespace panc;

namespace {

ChannelRealization draw(std::uint64_t k, double snr_db) {
  CounterRng rng(31, k);
  ChannelRealization ch = sample_channels(NodeGeometry{}, rng);
  ch.sigma2 = std::pow(10.0, -snr_db / 10.0);
  return ch;
}

// |mc - exact| within z binomial standard deviations.
void check_against_mc(const ChannelRealization& ch, SchemeId id, double exact, double snr_db,
                      std::uint64_t trials, std::uint64_t seed) {
  const SchemeSetup s = make_scheme(id, ch, 1.0, 0.37, 0.61);
  const Confusion c = simulate_fixed_channel(ch, s, {snr_db}, trials, seed, 1)[0];
  const double mc = static_cast<double>(errors(c)) / static_cast<double>(total(c));
  const double sd = std::sqrt(std::max(exact * (1.0 - exact), 1e-12) / static_cast<double>(trials));
  CHECK(std::fabs(mc - exact) <= 4.0 * sd);
}

}  // namespace

TEST_CASE("relay distribution rows sum to one and match the oracle") {
  for (std::uint64_t k = 0; k < 10; ++k) {
    const ChannelRealization ch = draw(k, 5.0 + 2.0 * static_cast<double>(k));
    const Constellation irc = build_irc(ch);
    const RelayLevelDistribution rel = relay_level_probs(irc, ch.sigma2);
    CHECK(rel.max_row_defect() <= 1e-9);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        const double s2 = 0.5 * ch.sigma2;
        const double o = gaussian_region_prob({irc.V[i], Mat2::diag(s2, s2)}, voronoi_cell(irc, j)).p;
        CHECK(std::fabs(rel.p[i][j] - o) <= 1e-8);
      }
  }
}

TEST_CASE("nearest-point cells reject coincident hypotheses") {
  const std::array<Vec2, 4> pts = {Vec2{0, 0}, Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}};
  CHECK_THROWS_AS(nearest_point_cell(pts, 0), DegenerateConstellation);
}

TEST_CASE("exact SPER equals the four-term average and stays within limits") {
  const ChannelRealization ch = draw(3, 12.0);
  const SchemeSetup s = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.5, 0.5);
  const SperBreakdown b = sper_exact(ch, s.p);
  CHECK(b.total == doctest::Approx(sper_from_breakdown(b)));
  CHECK(b.total > 0.0);
  CHECK(b.total < 0.75);
  for (int i = 0; i < 4; ++i) {
    double r = 0.0;
    for (int k = 0; k < 4; ++k) r += b.relay.p[i][k] * b.dest[i][k];
    CHECK(b.conditional[i] == doctest::Approx(r));
  }
}

TEST_CASE("exact SPER vanishes at high SNR and approaches 3/4 at very low SNR") {
  ChannelRealization ch = draw(4, 60.0);
  const SchemeSetup s = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.5, 0.5);
  CHECK(sper_exact(ch, s.p).total < 1e-12);
  ch.sigma2 = 1e6;
  CHECK(sper_exact(ch, s.p).total == doctest::Approx(0.75).epsilon(0.01));
}

TEST_CASE("exact SPER against fixed-channel simulation") {
  for (std::uint64_t k = 0; k < 3; ++k) {
    const double snr = 5.0 + 5.0 * static_cast<double>(k);
    const ChannelRealization ch = draw(10 + k, snr);
    const SchemeSetup s = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.37, 0.61);
    check_against_mc(ch, SchemeId::OriginOpt, sper_exact(ch, s.p).total, snr, 200000, 100 + k);
    const SchemeSetup g = make_scheme(SchemeId::Genie, ch, 1.0, 0.37, 0.61);
    check_against_mc(ch, SchemeId::Genie, sper_exact_genie(ch, g.p).total, snr, 200000, 200 + k);
    const SchemeSetup x = make_scheme(SchemeId::CXNCAlpha, ch, 1.0, 0.37, 0.61);
    check_against_mc(ch, SchemeId::CXNCAlpha, sper_exact_cxnc(ch, x.alpha, 1.0), snr, 200000, 300 + k);
  }
}

TEST_CASE("a perfect relay distribution reproduces the genie value") {
  const ChannelRealization ch = draw(5, 8.0);
  const SchemeSetup s = make_scheme(SchemeId::OriginOpt, ch, 1.0, 0.5, 0.5);
  RelayLevelDistribution perfect;
  for (int i = 0; i < 4; ++i) perfect.p[i][i] = 1.0;
  CHECK(sper_exact_given_relay(ch, s.p, perfect).total == doctest::Approx(sper_exact_genie(ch, s.p).total));
}
