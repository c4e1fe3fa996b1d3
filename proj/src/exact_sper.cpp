#include "panc/exact_sper.hpp"

namespace panc {

double RelayLevelDistribution::max_row_defect() const {
  double worst = 0.0;
  for (const auto& row : p) {
    double s = 0.0;
    for (double v : row) s += v;
    worst = std::max(worst, std::fabs(s - 1.0));
  }
  return worst;
}

ConvexRegion nearest_point_cell(const std::array<Vec2, 4>& pts, int i) {
  ConvexRegion r;
  for (int j = 0; j < 4; ++j) {
    if (j == i) continue;
    const Vec2 n = pts[j] - pts[i];
    if (norm2(n) == 0.0) throw DegenerateConstellation("coincident hypothesis points");
    r.planes.push_back({n, 0.5 * (norm2(pts[j]) - norm2(pts[i]))});
  }
  return r;
}

RelayLevelDistribution relay_level_probs(const Constellation& irc, double sigma2) {
  const double s2 = 0.5 * sigma2;
  RelayLevelDistribution out;
  for (int k = 0; k < 4; ++k) {
    const ConvexRegion cell = voronoi_cell(irc, k);
    for (int i = 0; i < 4; ++i) {
      const auto dec = decompose_cell(irc.V[i], s2, cell);
      out.p[i][k] = (i == k) ? 1.0 - cell_complement_probability(dec) : cell_probability(dec);
    }
  }
  return out;
}

double dest_conditional_error(const std::array<Vec2, 4>& hyp, int true_pair, const Vec2& mean,
                              double sigma2) {
  const ConvexRegion cell = nearest_point_cell(hyp, true_pair);
  return cell_complement_probability(decompose_cell(mean, sigma2, cell));
}

namespace {

// Generic assembly: relay decision j moves the destination mean to
// (x of the true pair, forwarded_y[j]).
SperBreakdown assemble(const ChannelRealization& ch, const std::array<Vec2, 4>& hyp,
                       const std::array<double, 4>& forwarded_y,
                       const RelayLevelDistribution& relay) {
  SperBreakdown b;
  b.relay = relay;
  for (int i = 0; i < 4; ++i) {
    const double x = std::sqrt(ch.E1) * ch.h1D * kPairs[i].x1 + std::sqrt(ch.E2) * ch.h2D * kPairs[i].x2;
    double cond = 0.0;
    for (int k = 0; k < 4; ++k) {
      if (relay.p[i][k] == 0.0) {
        b.dest[i][k] = 0.0;
        if (i != k) continue;
      }
      b.dest[i][k] = dest_conditional_error(hyp, i, {x, forwarded_y[k]}, ch.sigma2);
      cond += b.dest[i][k] * relay.p[i][k];
    }
    b.conditional[i] = cond;
  }
  b.total = sper_from_breakdown(b);
  return b;
}

std::array<double, 4> panc_forwarded(const ChannelRealization& ch, const PowerPair& p) {
  std::array<double, 4> y{};
  for (int k = 0; k < 4; ++k) y[k] = std::sqrt(p.alpha) * panc_level(k, p) * ch.hRD;
  return y;
}

}  // namespace

double sper_from_breakdown(const SperBreakdown& b) {
  return 0.25 * (b.conditional[0] + b.conditional[1] + b.conditional[2] + b.conditional[3]);
}

SperBreakdown sper_exact(const ChannelRealization& ch, const PowerPair& p) {
  const Constellation irc = build_irc(ch);
  SperBreakdown b = sper_exact_given_relay(ch, p, relay_level_probs(irc, ch.sigma2));
  b.relay_case = irc.case_tag;
  return b;
}

SperBreakdown sper_exact_given_relay(const ChannelRealization& ch, const PowerPair& p,
                                     const RelayLevelDistribution& relay) {
  const Constellation idc = build_idc(ch, p);
  SperBreakdown b = assemble(ch, idc.V, panc_forwarded(ch, p), relay);
  b.dest_case = idc.case_tag;
  return b;
}

SperBreakdown sper_exact_genie(const ChannelRealization& ch, const PowerPair& p) {
  const Constellation idc = build_idc(ch, p);
  RelayLevelDistribution perfect;
  for (int i = 0; i < 4; ++i) perfect.p[i][i] = 1.0;
  SperBreakdown b = assemble(ch, idc.V, panc_forwarded(ch, p), perfect);
  b.dest_case = idc.case_tag;
  return b;
}

double sper_exact_cxnc(const ChannelRealization& ch, double alpha, double ER) {
  return sper_exact_cxnc_given_relay(ch, alpha, ER, relay_level_probs(build_irc(ch), ch.sigma2));
}

double sper_exact_cxnc_given_relay(const ChannelRealization& ch, double alpha, double ER,
                                   const RelayLevelDistribution& relay) {
  const double amp = std::sqrt(alpha * ER) * ch.hRD;
  std::array<Vec2, 4> hyp;
  std::array<double, 4> fwd{};
  for (int k = 0; k < 4; ++k) {
    const double xr = kPairs[k].x1 * kPairs[k].x2;
    fwd[k] = amp * xr;
    hyp[k] = {std::sqrt(ch.E1) * ch.h1D * kPairs[k].x1 + std::sqrt(ch.E2) * ch.h2D * kPairs[k].x2,
              amp * xr};
  }
  return assemble(ch, hyp, fwd, relay).total;
}

}  // namespace panc
