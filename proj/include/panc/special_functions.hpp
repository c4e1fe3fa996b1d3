#pragma once
// Gaussian tail kernels, adaptive quadrature, and a bivariate Gaussian
// region-probability oracle.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "panc/linalg.hpp"

namespace panc {

inline constexpr double kPi = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod (7/15) quadrature.

namespace detail {

inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
double gk15(F& f, double a, double b, double& err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double rk = fc * kWgk[7];
  double rg = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    rk += kWgk[j] * s;
    if (j % 2 == 1) rg += kWg[j / 2] * s;
  }
  err = std::fabs((rk - rg) * h);
  return rk * h;
}

}  // namespace detail

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

// Global adaptive bisection: the interval with the largest error estimate is
// split until the total error meets max(abs_tol, rel_tol * |I|).
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol, double rel_tol,
                           int max_intervals = 2000) {
  struct Piece {
    double a, b, v, e;
  };
  QuadratureResult out;
  if (a == b) return out;
  std::vector<Piece> pieces;
  pieces.reserve(64);
  double e0 = 0.0;
  const double v0 = detail::gk15(f, a, b, e0);
  pieces.push_back({a, b, v0, e0});
  double total = v0;
  double total_err = e0;
  while (total_err > std::max(abs_tol, rel_tol * std::fabs(total)) &&
         static_cast<int>(pieces.size()) < max_intervals) {
    auto worst = std::max_element(pieces.begin(), pieces.end(),
                                  [](const Piece& p, const Piece& q) { return p.e < q.e; });
    const Piece p = *worst;
    const double m = 0.5 * (p.a + p.b);
    if (!(m > p.a && m < p.b)) break;
    double el = 0.0, er = 0.0;
    const double vl = detail::gk15(f, p.a, m, el);
    const double vr = detail::gk15(f, m, p.b, er);
    *worst = {p.a, m, vl, el};
    pieces.push_back({m, p.b, vr, er});
    total = 0.0;
    total_err = 0.0;
    for (const auto& q : pieces) {
      total += q.v;
      total_err += q.e;
    }
  }
  out.value = total;
  out.error = total_err;
  out.intervals = static_cast<int>(pieces.size());
  return out;
}

// ---------------------------------------------------------------------------
// Q-functions.

// Standard Gaussian tail probability, via erfc.
double q1(double x);

// Craig's form (1/pi) * int_0^{pi/2} exp(-x^2 / (2 sin^2 t)) dt, evaluated by
// quadrature; kept as an independent check on q1.
double q1_craig(double x);

// (1/pi) * int_0^{upper} exp(-x^2 / (2 sin^2 t)) dt for upper in [0, pi/2].
double q2_angle(double x, double upper);

// Two-dimensional Q-function with equal arguments, upper integration limit
// arctan(sqrt((1 + rho) / (1 - rho))).
double q2(double x, double rho);

// P(lo < Z < hi) for a standard normal Z, without cancellation in the tails.
double normal_interval(double lo, double hi);

// ---------------------------------------------------------------------------
// Gaussian region probability oracle.

struct GaussianSpec {
  Vec2 mean;
  Mat2 cov;  // symmetric positive definite
};

// Closed half-plane { z : dot(n, z) <= c }.
struct HalfPlane {
  Vec2 n;
  double c = 0.0;
  bool contains(const Vec2& z, double tol = 0.0) const { return dot(n, z) <= c + tol; }
  double slack(const Vec2& z) const { return c - dot(n, z); }
};

struct ConvexRegion {
  std::vector<HalfPlane> planes;
  bool contains(const Vec2& z, double tol = 0.0) const {
    for (const auto& h : planes)
      if (!h.contains(z, tol)) return false;
    return true;
  }
};

// Portion of a boundary line that actually bounds the region:
// { origin + t * dir : t in [t0, t1] }, dir a unit vector, t0/t1 possibly
// infinite. The region lies on the side where dot(n, z) <= c.
struct BoundaryPiece {
  int plane = -1;
  Vec2 origin;
  Vec2 dir;
  double t0 = -std::numeric_limits<double>::infinity();
  double t1 = std::numeric_limits<double>::infinity();
};

// Boundary pieces of positive length, one per non-redundant half-plane.
std::vector<BoundaryPiece> region_boundary(const ConvexRegion& r);

// True when the region has a non-empty interior.
bool region_has_interior(const ConvexRegion& r);

struct RegionProbability {
  double p = 0.0;
  bool degenerate = false;
  double error_estimate = 0.0;
};

// Probability mass of g over r by Cartesian slicing: adaptive Gauss-Kronrod
// in x over +-10 standard deviations, exact conditional normal mass in y.
RegionProbability gaussian_region_prob(const GaussianSpec& g, const ConvexRegion& r);

// ---------------------------------------------------------------------------
// Symmetric 2x2 eigen-decomposition.

struct Eigen2 {
  double lambda1 = 0.0;  // larger eigenvalue
  double lambda2 = 0.0;
  Mat2 Q;  // rows are unit eigenvectors, det(Q) = +1, m = Q^T diag(l1, l2) Q
};

Eigen2 eigen_2x2(const Mat2& m);

}  // namespace panc
