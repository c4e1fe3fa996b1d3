#include "panc/wedge.hpp"

namespace panc {

namespace {

std::atomic<std::uint64_t> g_clamp_violations{0};

double clamp_prob(double p) {
  if (p < -1e-9 || p > 1.0 + 1e-9) g_clamp_violations.fetch_add(1, std::memory_order_relaxed);
  return std::clamp(p, 0.0, 1.0);
}

// Q2(x; (tan^2 phi - 1) / (tan^2 phi + 1)). That correlation maps back to an
// upper integration limit of exactly |phi| (folded into [0, pi/2]), so the
// angle is used directly; going through rho loses digits near phi = pi/2.
double q2_of_angle(double x, double phi) {
  phi = std::fabs(std::remainder(phi, kPi));
  return q2_angle(x, std::min(phi, 0.5 * kPi));
}

double q2_corr(double x, double rho) {
  if (rho >= 1.0) return q2_angle(x, 0.5 * kPi);
  if (rho <= -1.0) return 0.0;
  return q2(x, rho);
}

}  // namespace

std::uint64_t wedge_clamp_violations() { return g_clamp_violations.load(); }
void reset_wedge_clamp_violations() { g_clamp_violations.store(0); }

double wedge_mass(double d, double phi) {
  if (!(phi >= 0.0 && phi <= 0.5 * kPi + 1e-15))
    throw std::domain_error("wedge_mass: angle outside [0, pi/2]");
  phi = std::min(phi, 0.5 * kPi);
  return 0.5 * q2_angle(std::sqrt(2.0 * d) * std::sin(phi), phi);
}

double wedge_mass_extended(double d, double phi) {
  if (!(phi >= 0.0 && phi <= kPi)) throw std::domain_error("wedge_mass_extended: angle outside [0, pi]");
  if (phi <= 0.5 * kPi) return wedge_mass(d, phi);
  return q1(std::sqrt(2.0 * d) * std::sin(phi)) - wedge_mass(d, kPi - phi);
}

double p_w1_raw(double d, double phi1, double phi2) {
  if (phi1 * phi2 < 0.0) throw std::domain_error("p_w1: angles must share a sign");
  if (d < 0.0) throw std::domain_error("p_w1: negative distance");
  if (phi1 < 0.0 || phi2 < 0.0) {
    phi1 = -phi1;
    phi2 = -phi2;
  }
  const double r = std::sqrt(2.0 * d);
  return 0.5 * (q2_of_angle(r * std::sin(phi2), phi2) - q2_of_angle(r * std::sin(phi1), phi1));
}

double p_w1(double d, double phi1, double phi2) { return clamp_prob(p_w1_raw(d, phi1, phi2)); }

double p_w2_raw(double d, double phi1, double phi2) {
  if (!(phi1 * phi2 < 0.0)) throw std::domain_error("p_w2: angles must have opposite signs");
  if (d < 0.0) throw std::domain_error("p_w2: negative distance");
  const double r = std::sqrt(2.0 * d);
  const double t1 = std::tan(phi1) * std::tan(phi1);
  const double t2 = std::tan(phi2) * std::tan(phi2);
  const double first = q2_corr(r * std::sin(phi1), (t1 - 1.0) / (t2 + 1.0));
  const double second = q2_corr(r * std::sin(-phi2), (t2 - 1.0) / (t1 + 1.0));
  return 0.5 * (first - second);
}

double p_w2(double d, double phi1, double phi2) { return clamp_prob(p_w2_raw(d, phi1, phi2)); }

double p_w2_sum_form(double d, double phi1, double phi2) {
  if (!(phi1 * phi2 < 0.0)) throw std::domain_error("p_w2_sum_form: angles must have opposite signs");
  return clamp_prob(wedge_mass(d, std::fabs(phi1)) + wedge_mass(d, std::fabs(phi2)));
}

double p_w3(double d_ij, double d_ik, double phi1, double phi2, double phi3, double phi4, int m,
            int n) {
  auto pick = [](int which, double d, double a, double b) {
    if (which == 1) return p_w1(d, a, b);
    if (which == 2) return p_w2(d, a, b);
    throw std::domain_error("p_w3: sub-prototype selector must be 1 or 2");
  };
  return clamp_prob(pick(m, d_ij, phi1, phi2) - pick(n, d_ik, phi3, phi4));
}

double p_w4_raw(double d, double phi1, double phi2) {
  if (!(phi1 > 0.0 && phi2 > 0.0)) throw std::domain_error("p_w4: angles must be positive");
  const double r = std::sqrt(2.0 * d);
  double sum = 0.0;
  for (double phi : {phi1, phi2}) {
    const double x = r * std::sin(phi);
    sum += q2_of_angle(x, phi) - kPi * q1(x);
  }
  return sum / (2.0 * kPi) + (phi1 + phi2 + 2.0) / (2.0 * kPi);
}

double p_w4(double d, double phi1, double phi2) { return clamp_prob(p_w4_raw(d, phi1, phi2)); }

double p_w5_raw(double d_ik, double d_ij, double phi1, double phi2, double phi3, double phi4) {
  const double rj = std::sqrt(2.0 * d_ij);
  const double rk = std::sqrt(2.0 * d_ik);
  const double phis[3] = {phi1, phi2, phi3};
  double sum = 0.0;
  for (int n = 0; n < 3; ++n) sum += q2_of_angle(rj * std::sin(phis[n]), phis[n]);
  for (int n = 0; n < 2; ++n) sum -= kPi * q1(rj * std::sin(phis[n]));
  const double s34 = phi3 + phi4;
  sum -= q2_of_angle(rk * std::sin(s34), s34);
  return (sum + phi1 + phi2 + phi4 + 3.0) / (2.0 * kPi);
}

double p_w5(double d_ik, double d_ij, double phi1, double phi2, double phi3, double phi4) {
  return clamp_prob(p_w5_raw(d_ik, d_ij, phi1, phi2, phi3, phi4));
}

double evaluate(const WedgeSpec& w) {
  double v = 0.0;
  switch (w.prototype) {
    case Prototype::W1: v = p_w1(w.d1, w.phi[0], w.phi[1]); break;
    case Prototype::W2: v = p_w2(w.d1, w.phi[0], w.phi[1]); break;
    case Prototype::W3:
      v = p_w3(w.d1, w.d2, w.phi[0], w.phi[1], w.phi[2], w.phi[3], w.m, w.n);
      break;
    case Prototype::W4: v = p_w4(w.d1, w.phi[0], w.phi[1]); break;
    case Prototype::W5: v = p_w5(w.d1, w.d2, w.phi[0], w.phi[1], w.phi[2], w.phi[3]); break;
    case Prototype::Tail: v = q1(w.tail_arg); break;
  }
  return w.sign * v;
}

namespace {

// Angle at apex M between direction w and the extension of mean -> M.
double apex_angle(const Vec2& mean, const Vec2& apex, const Vec2& w) {
  const Vec2 e = apex - mean;
  return std::atan2(std::fabs(cross(e, w)), dot(e, w));
}

// Shadow of the ray {apex + t w, t >= 0} seen from the mean.
void push_ray(std::vector<WedgeSpec>& out, const Vec2& mean, double s2, const Vec2& apex,
              const Vec2& w, double sign) {
  const double p2 = norm2(apex - mean);
  if (p2 == 0.0) return;
  const double d = p2 / (2.0 * s2);
  const double phi = apex_angle(mean, apex, w);
  WedgeSpec t;
  t.prototype = Prototype::W1;
  t.d1 = d;
  if (phi <= 0.5 * kPi) {
    t.sign = sign;
    t.phi[1] = phi;
    out.push_back(t);
    return;
  }
  WedgeSpec tail;
  tail.prototype = Prototype::Tail;
  tail.sign = sign;
  tail.tail_arg = std::sqrt(2.0 * d) * std::sin(phi);
  out.push_back(tail);
  t.sign = -sign;
  t.phi[1] = kPi - phi;
  out.push_back(t);
}

}  // namespace

CellDecomposition decompose_cell(const Vec2& mean, double s2, const ConvexRegion& cell) {
  CellDecomposition dec;
  dec.mean_inside = cell.contains(mean);
  for (const auto& piece : region_boundary(cell)) {
    const HalfPlane& h = cell.planes[piece.plane];
    const double len = norm(h.n);
    const double slack = (h.c - dot(h.n, mean)) / len;
    const double sign = slack < 0.0 ? 1.0 : -1.0;
    const bool lo_inf = std::isinf(piece.t0);
    const bool hi_inf = std::isinf(piece.t1);
    if (lo_inf && hi_inf) {
      WedgeSpec tail;
      tail.prototype = Prototype::Tail;
      tail.sign = sign;
      tail.tail_arg = std::fabs(slack) / std::sqrt(s2);
      dec.terms.push_back(tail);
    } else if (hi_inf) {
      push_ray(dec.terms, mean, s2, piece.origin + piece.dir * piece.t0, piece.dir, sign);
    } else if (lo_inf) {
      push_ray(dec.terms, mean, s2, piece.origin + piece.dir * piece.t1, -piece.dir, sign);
    } else {
      const Vec2 mj = piece.origin + piece.dir * piece.t0;
      const Vec2 mk = piece.origin + piece.dir * piece.t1;
      const double pj = norm2(mj - mean), pk = norm2(mk - mean);
      const double phij = pj > 0.0 ? apex_angle(mean, mj, piece.dir) : 0.0;
      const double phik = pk > 0.0 ? apex_angle(mean, mk, piece.dir) : 0.0;
      if (pj > 0.0 && pk > 0.0 && phij <= 0.5 * kPi && phik <= 0.5 * kPi) {
        // Both apex angles inside the one-sided range: a single wedge difference.
        WedgeSpec w;
        w.prototype = Prototype::W3;
        w.sign = sign;
        w.d1 = pj / (2.0 * s2);
        w.d2 = pk / (2.0 * s2);
        w.phi[1] = phij;
        w.phi[3] = phik;
        dec.terms.push_back(w);
      } else {
        push_ray(dec.terms, mean, s2, mj, piece.dir, sign);
        push_ray(dec.terms, mean, s2, mk, piece.dir, -sign);
      }
    }
  }
  return dec;
}

double cell_probability(const CellDecomposition& dec) {
  double p = dec.mean_inside ? 1.0 : 0.0;
  for (const auto& t : dec.terms) p += evaluate(t);
  return std::clamp(p, 0.0, 1.0);
}

double cell_complement_probability(const CellDecomposition& dec) {
  if (!dec.mean_inside) return 1.0 - cell_probability(dec);
  double q = 0.0;
  for (const auto& t : dec.terms) q -= evaluate(t);
  return std::clamp(q, 0.0, 1.0);
}

double cell_probability(const GaussianSpec& g, const ConvexRegion& cell) {
  if (std::fabs(g.cov.b) > 1e-12 * g.cov.a || std::fabs(g.cov.a - g.cov.d) > 1e-12 * g.cov.a)
    throw std::invalid_argument("cell_probability: wedge decomposition needs isotropic noise");
  return cell_probability(decompose_cell(g.mean, g.cov.a, cell));
}

}  // namespace panc
