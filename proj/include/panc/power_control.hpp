#pragma once
// Relay power scaling and the max-min choice of the two relay amplitudes.

#include "panc/geometry.hpp"

namespace panc {

enum class SnrMode { Instantaneous, Statistical };

struct LinkSnrs {
  double gamma_sr = 0.0;  // weakest of the three source-relay SNRs
  double gamma_rd = 0.0;
  SnrMode mode = SnrMode::Instantaneous;
};

// gamma_sr = min(E1|h1R|^2, E2|h2R|^2, |sqrt(E1) h1R + sqrt(E2) h2R|^2) / sigma2.
double gamma_sr(const ChannelRealization& ch);

// Instantaneous: ER |hRD|^2 / sigma2. Statistical: ER * mean_gain_rd / sigma2.
LinkSnrs link_snrs(const ChannelRealization& ch, double ER);
LinkSnrs link_snrs_statistical(const ChannelRealization& ch, double ER, double mean_gain_rd);

// min(gamma_sr / gamma_rd, 1); 0 when gamma_rd == 0 (relay silent).
double scaling_factor(const LinkSnrs& s);

struct MacBound {
  double upper = 0.0;   // sum of the three pairwise Q terms
  double approx = 0.0;  // single Q term at the weakest SNR
};
MacBound mac_upper_bound(const ChannelRealization& ch);

// Squared distances of the destination constellation as functions of (a, b).
struct DistanceTerms {
  double side12, side13, diag23, diag14;
  double min_all() const;
  double min_sides() const;
};
DistanceTerms distance_terms(const ChannelRealization& ch, double a, double b);

enum class Objective { ExactMinPair, CtMinEdge };
double objective_value(const ChannelRealization& ch, double a, double b, Objective obj);

// Closed form maximizing the minimum over all four distances.
// a = sqrt(E + (c1 - c2) / (8 H^2)), b = sqrt(E + (c2 - c1) / (8 H^2)).
PowerPair optimize_powers_exact(const ChannelRealization& ch, double ER);

// Closed form maximizing the shorter edge of the rectangle surrogate.
PowerPair optimize_powers_ct(const ChannelRealization& ch, double ER);

// Exhaustive search: the full budget circle at 4 * resolution angles plus an
// interior polar grid, followed by golden-section refinement on the circle.
PowerPair grid_oracle(const ChannelRealization& ch, double ER, Objective obj, int resolution);

// a = u01 * sqrt(2 ER), b = sqrt(2 ER - a^2).
PowerPair baseline_powers(double u01, double ER);

}  // namespace panc
