#pragma once
// Rectangle transform of a parallelogram constellation and the cone detector
// it induces.

#include <array>

#include "panc/exact_sper.hpp"
#include "panc/geometry.hpp"

namespace panc {

struct CtTransform {
  Mat2 A_inv;  // original -> rectangle, side lengths preserved
  Mat2 A;      // rectangle -> original
  Mat2 B;      // A^T Sigma^-1 A, precision of the rectangle coordinates
  Mat2 Q;      // rotation, rows are eigenvectors of B
  Mat2 C;      // Q * A_inv
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double s2 = 0.0;               // per-dimension noise variance before transforming
  std::array<Vec2, 4> Vbar;      // transformed vertices
  std::array<int, 4> cone_of{};  // cone index occupied by each transformed vertex
};

// Cones around the origin: 0 below (y <= -|x|), 1 right, 2 above, 3 left.
ConvexRegion cone_region(int cone);
int cone_index(const Vec2& z);

// Generic construction for a constellation observed in isotropic noise s2.
CtTransform make_ct(const Constellation& c, double s2);

CtTransform ct_relay(const ChannelRealization& ch);
CtTransform ct_dest(const ChannelRealization& ch, const PowerPair& p);

// Covariance of the transformed noise, C * s2 I * C^T (equals diag(1/l1, 1/l2)).
Mat2 transformed_noise_cov(const CtTransform& t);

// Relay level distribution for the cone detector.
RelayLevelDistribution ct_level_probs(const CtTransform& t);

// Decision for an observation z in original coordinates; returns a pair index.
int ct_detect(const CtTransform& t, const Vec2& z);

struct CtBreakdown {
  double total = 0.0;
  RelayLevelDistribution relay;
  Matrix4 dest{};
};

CtBreakdown sper_ct(const ChannelRealization& ch, const PowerPair& p);

// Cone-detector SPER with a precomputed relay distribution (identity for a
// perfect relay).
CtBreakdown sper_ct_given_relay(const ChannelRealization& ch, const PowerPair& p,
                                const RelayLevelDistribution& relay);

// Reference closed-form matrices, kept for comparison with the numerical
// construction. The relay forms assume E1 = E2 = 1.
Mat2 printed_a_relay(const ChannelRealization& ch);
Mat2 printed_a_inv_relay(const ChannelRealization& ch);
Mat2 printed_b_relay(const ChannelRealization& ch);
Mat2 printed_a_inv_dest(const ChannelRealization& ch, const PowerPair& p);
Mat2 printed_b_dest(const ChannelRealization& ch, const PowerPair& p);
// (1/2)(B11 + B22 +- sqrt(B11^2 + B22^2 + 4 B12^2 - 2 B11 B22)).
std::array<double, 2> printed_eigenvalues(const Mat2& B);
// Symmetric eigenvector matrix with eigenvectors as columns (det = -1).
Mat2 printed_q(const Mat2& B);

}  // namespace panc
