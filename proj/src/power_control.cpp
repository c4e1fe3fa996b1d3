#include "panc/power_control.hpp"

#include <algorithm>

namespace panc {

double gamma_sr(const ChannelRealization& ch) {
  const cplx g1 = std::sqrt(ch.E1) * ch.h1R;
  const cplx g2 = std::sqrt(ch.E2) * ch.h2R;
  return std::min({std::norm(g1), std::norm(g2), std::norm(g1 + g2)}) / ch.sigma2;
}

LinkSnrs link_snrs(const ChannelRealization& ch, double ER) {
  return {gamma_sr(ch), ER * ch.hRD * ch.hRD / ch.sigma2, SnrMode::Instantaneous};
}

LinkSnrs link_snrs_statistical(const ChannelRealization& ch, double ER, double mean_gain_rd) {
  return {gamma_sr(ch), ER * mean_gain_rd / ch.sigma2, SnrMode::Statistical};
}

double scaling_factor(const LinkSnrs& s) {
  if (s.gamma_sr < 0.0 || s.gamma_rd < 0.0) throw std::invalid_argument("scaling_factor: negative SNR");
  if (s.gamma_rd == 0.0) return 0.0;
  return std::min(s.gamma_sr / s.gamma_rd, 1.0);
}

MacBound mac_upper_bound(const ChannelRealization& ch) {
  const cplx g1 = std::sqrt(ch.E1) * ch.h1R;
  const cplx g2 = std::sqrt(ch.E2) * ch.h2R;
  const double t[3] = {std::norm(g1) / ch.sigma2, std::norm(g2) / ch.sigma2,
                       std::norm(g1 + g2) / ch.sigma2};
  MacBound m;
  for (double g : t) m.upper += q1(std::sqrt(2.0 * g));
  m.approx = q1(std::sqrt(2.0 * std::min({t[0], t[1], t[2]})));
  return m;
}

double DistanceTerms::min_all() const { return std::min({side12, side13, diag23, diag14}); }
double DistanceTerms::min_sides() const { return std::min(side12, side13); }

DistanceTerms distance_terms(const ChannelRealization& ch, double a, double b) {
  const double u = std::sqrt(ch.E1) * ch.h1D, v = std::sqrt(ch.E2) * ch.h2D, H2 = ch.hRD * ch.hRD;
  return {4.0 * u * u + H2 * (a - b) * (a - b), 4.0 * v * v + H2 * (a + b) * (a + b),
          4.0 * (v - u) * (v - u) + 4.0 * H2 * b * b, 4.0 * (u + v) * (u + v) + 4.0 * H2 * a * a};
}

double objective_value(const ChannelRealization& ch, double a, double b, Objective obj) {
  const DistanceTerms d = distance_terms(ch, a, b);
  return obj == Objective::ExactMinPair ? d.min_all() : d.min_sides();
}

PowerPair optimize_powers_exact(const ChannelRealization& ch, double ER) {
  PowerPair p;
  p.ER_ave = ER;
  if (ch.hRD == 0.0) {
    p.a = p.b = std::sqrt(ER);
    p.clamped = true;
    return p;
  }
  const double u = std::sqrt(ch.E1) * ch.h1D, v = std::sqrt(ch.E2) * ch.h2D;
  const double c1 = (2.0 * v - 2.0 * u) * (2.0 * v - 2.0 * u);
  const double c2 = (2.0 * u + 2.0 * v) * (2.0 * u + 2.0 * v);
  const double shift = (c1 - c2) / (8.0 * ch.hRD * ch.hRD);
  const double ra = ER + shift, rb = ER - shift;
  if (ra < 0.0) {
    p.a = 0.0;
    p.b = std::sqrt(2.0 * ER);
    p.clamped = true;
  } else if (rb < 0.0) {
    p.a = std::sqrt(2.0 * ER);
    p.b = 0.0;
    p.clamped = true;
  } else {
    p.a = std::sqrt(ra);
    p.b = std::sqrt(rb);
  }
  return p;
}

PowerPair optimize_powers_ct(const ChannelRealization& ch, double ER) {
  PowerPair p;
  p.ER_ave = ER;
  const double H2 = ch.hRD * ch.hRD;
  if (H2 == 0.0) {
    p.a = p.b = std::sqrt(ER);
    p.clamped = true;
    return p;
  }
  const double delta = ch.E1 * ch.h1D * ch.h1D - ch.E2 * ch.h2D * ch.h2D;
  const double rad1 = 2.0 * (ER * H2 - delta) / H2;
  const double rad2 = 2.0 * (ER * H2 + delta) / H2;
  // r1 = |a - b| and r2 = |a + b|, with r1^2 + r2^2 = 4 ER. A negative radicand
  // moves the whole budget to the other radical.
  double r1, r2;
  if (rad1 < 0.0) {
    r1 = 0.0;
    r2 = 2.0 * std::sqrt(ER);
    p.clamped = true;
  } else if (rad2 < 0.0) {
    r1 = 2.0 * std::sqrt(ER);
    r2 = 0.0;
    p.clamped = true;
  } else {
    r1 = std::sqrt(rad1);
    r2 = std::sqrt(rad2);
  }
  p.a = 0.5 * (r1 + r2);
  p.b = 0.5 * (r2 - r1);
  return p;
}

PowerPair grid_oracle(const ChannelRealization& ch, double ER, Objective obj, int resolution) {
  if (resolution < 256) throw std::invalid_argument("grid_oracle: resolution must be >= 256");
  const double R = std::sqrt(2.0 * ER);
  auto f = [&](double a, double b) { return objective_value(ch, a, b, obj); };
  auto on_circle = [&](double th) { return f(R * std::cos(th), R * std::sin(th)); };

  const int n = 4 * resolution;
  const double step = 2.0 * kPi / n;
  double best = -1.0, best_a = 0.0, best_b = 0.0, best_th = 0.0;
  bool best_on_circle = false;
  for (int k = 0; k < n; ++k) {
    const double th = k * step;
    const double val = on_circle(th);
    if (val > best) {
      best = val;
      best_th = th;
      best_a = R * std::cos(th);
      best_b = R * std::sin(th);
      best_on_circle = true;
    }
  }
  const int rings = resolution / 4;
  for (int r = 0; r < rings; ++r) {
    const double rad = R * r / rings;
    for (int k = 0; k < resolution; ++k) {
      const double th = 2.0 * kPi * k / resolution;
      const double a = rad * std::cos(th), b = rad * std::sin(th);
      const double val = f(a, b);
      if (val > best) {
        best = val;
        best_a = a;
        best_b = b;
        best_on_circle = false;
      }
    }
  }
  if (best_on_circle) {
    double lo = best_th - step, hi = best_th + step;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = on_circle(x1), f2 = on_circle(x2);
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = on_circle(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = on_circle(x1);
      }
    }
    const double th = 0.5 * (lo + hi);
    if (on_circle(th) > best) {
      best_a = R * std::cos(th);
      best_b = R * std::sin(th);
    }
  }
  PowerPair p;
  p.a = best_a;
  p.b = best_b;
  p.ER_ave = ER;
  return p;
}

PowerPair baseline_powers(double u01, double ER) {
  if (!(u01 >= 0.0 && u01 <= 1.0)) throw std::invalid_argument("baseline_powers: u01 outside [0, 1]");
  PowerPair p;
  p.ER_ave = ER;
  p.a = u01 * std::sqrt(2.0 * ER);
  p.b = std::sqrt(std::max(2.0 * ER - p.a * p.a, 0.0));
  return p;
}

}  // namespace panc
