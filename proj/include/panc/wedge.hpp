#pragma once
// Wedge probabilities of an isotropic Gaussian and the decomposition of a
// convex decision cell into wedge terms.
//
// Distances are normalized as d = |V - M|^2 / (2 s^2), where s^2 is the
// per-dimension noise variance and V the Gaussian mean. Angles are measured at
// the wedge apex M from the extension of the segment V -> M beyond M.

#include <atomic>
#include <cstdint>
#include <vector>

#include "panc/linalg.hpp"
#include "panc/special_functions.hpp"

namespace panc {

// Mass of the wedge at M between the extension ray and a ray at angle phi,
// 0 <= phi <= pi/2.
double wedge_mass(double d, double phi);

// Same wedge for phi in [0, pi], using the half-plane complement past pi/2.
double wedge_mass_extended(double d, double phi);

// Reference closed-form prototypes. All results are clamped to [0, 1]; the *_raw variants
// return the unclamped value.
double p_w1(double d_ik, double phi1, double phi2);
double p_w2(double d_ik, double phi1, double phi2);
double p_w3(double d_ij, double d_ik, double phi1, double phi2, double phi3, double phi4, int m,
            int n);
double p_w4(double d_ik, double phi1, double phi2);
double p_w5(double d_ik, double d_ij, double phi1, double phi2, double phi3, double phi4);
double p_w1_raw(double d_ik, double phi1, double phi2);
double p_w2_raw(double d_ik, double phi1, double phi2);
double p_w4_raw(double d_ik, double phi1, double phi2);
double p_w5_raw(double d_ik, double d_ij, double phi1, double phi2, double phi3, double phi4);

// Straddling wedge (rays on both sides of the extension), written as the sum
// of two one-sided wedges.
double p_w2_sum_form(double d_ik, double phi1, double phi2);

// Number of prototype evaluations whose pre-clamp value left [0, 1] by more
// than 1e-9.
std::uint64_t wedge_clamp_violations();
void reset_wedge_clamp_violations();

enum class Prototype { W1, W2, W3, W4, W5, Tail };

struct WedgeSpec {
  Prototype prototype = Prototype::W1;
  double sign = 1.0;
  double d1 = 0.0;  // W1/W2/W4: d_ik; W3: d_ij; W5: d_ik; Tail: unused
  double d2 = 0.0;  // W3: d_ik; W5: d_ij
  double phi[4] = {0.0, 0.0, 0.0, 0.0};
  int m = 1;
  int n = 1;
  double tail_arg = 0.0;  // Tail: argument of q1
};

double evaluate(const WedgeSpec& w);

struct CellDecomposition {
  bool mean_inside = false;
  std::vector<WedgeSpec> terms;  // each term is the shadow mass beyond one boundary piece
};

// Split a convex cell into signed shadow terms: P(cell) = [mean inside] + sum(terms).
CellDecomposition decompose_cell(const Vec2& mean, double s2, const ConvexRegion& cell);

double cell_probability(const CellDecomposition& dec);

// 1 - P(cell), summed directly when the mean lies inside the cell.
double cell_complement_probability(const CellDecomposition& dec);

// Convenience wrapper for an isotropic GaussianSpec.
double cell_probability(const GaussianSpec& g, const ConvexRegion& cell);

}  // namespace panc
