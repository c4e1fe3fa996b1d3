#pragma once
// Exact instantaneous symbol-pair error rate from the relay and destination
// constellation geometry.

#include <array>

#include "panc/geometry.hpp"
#include "panc/wedge.hpp"

namespace panc {

using Matrix4 = std::array<std::array<double, 4>, 4>;

// p[i][k]: probability that the relay decides level k (index order +a, +b, -b,
// -a, equal to the decided pair index) when pair i was sent.
struct RelayLevelDistribution {
  Matrix4 p{};
  // Largest |row sum - 1| over the four rows.
  double max_row_defect() const;
};

struct SperBreakdown {
  double total = 0.0;
  std::array<double, 4> conditional{};  // P(E | T_i)
  Matrix4 dest{};                       // P(E | relay level k, T_i)
  RelayLevelDistribution relay;
  CaseTag relay_case = CaseTag::Six;
  CaseTag dest_case = CaseTag::Six;
};

// Relay distribution from the exact ML cells of the IRC (noise variance
// sigma2 / 2 per dimension).
RelayLevelDistribution relay_level_probs(const Constellation& irc, double sigma2);

// 1 - P(correct cell) at the destination for a Gaussian centred on `mean`
// (noise variance sigma2 per dimension). `hyp` are the four hypothesis points
// of the destination detector.
double dest_conditional_error(const std::array<Vec2, 4>& hyp, int true_pair, const Vec2& mean,
                              double sigma2);

// ML cell of point i among four arbitrary distinct points.
ConvexRegion nearest_point_cell(const std::array<Vec2, 4>& pts, int i);

SperBreakdown sper_exact(const ChannelRealization& ch, const PowerPair& p);

// Same, reusing a relay distribution already computed for this channel and noise level.
SperBreakdown sper_exact_given_relay(const ChannelRealization& ch, const PowerPair& p,
                                     const RelayLevelDistribution& relay);

// Relay forced to the correct level.
SperBreakdown sper_exact_genie(const ChannelRealization& ch, const PowerPair& p);

// Conventional XOR forwarding: relay sends sqrt(alpha * ER) * x1 * x2.
double sper_exact_cxnc(const ChannelRealization& ch, double alpha, double ER);
double sper_exact_cxnc_given_relay(const ChannelRealization& ch, double alpha, double ER,
                                   const RelayLevelDistribution& relay);

// Direct four-term average without the T1/T4, T2/T3 symmetry shortcut.
double sper_from_breakdown(const SperBreakdown& b);

}  // namespace panc
