#include "panc/geometry.hpp"

#include <cstdio>
#include <sstream>

namespace panc {

void ChannelRealization::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };
  if (!finite(h1R.real()) || !finite(h1R.imag()) || !finite(h2R.real()) || !finite(h2R.imag()))
    throw std::invalid_argument("channel: non-finite source-relay gain");
  if (!(h1D >= 0.0) || !(h2D >= 0.0) || !(hRD >= 0.0) || !finite(h1D) || !finite(h2D) ||
      !finite(hRD))
    throw std::invalid_argument("channel: magnitudes must be finite and >= 0");
  if (!(E1 > 0.0) || !(E2 > 0.0)) throw std::invalid_argument("channel: energies must be > 0");
  if (!(sigma2 > 0.0)) throw std::invalid_argument("channel: sigma2 must be > 0");
}

double panc_level(int pair_idx, const PowerPair& p) {
  switch (pair_idx) {
    case 0: return p.a;
    case 1: return p.b;
    case 2: return -p.b;
    default: return -p.a;
  }
}

double relay_beta(const ChannelRealization& ch) {
  return std::fabs(ch.h1R.real() * ch.h2R.imag() - ch.h2R.real() * ch.h1R.imag());
}

bool relay_degenerate(const ChannelRealization& ch) { return relay_beta(ch) <= kDegenerateRelay; }

Vec2 circumcenter(const Vec2& a, const Vec2& b, const Vec2& c) {
  // Solve 2 (b - a).z = |b|^2 - |a|^2 and 2 (c - a).z = |c|^2 - |a|^2.
  const Vec2 u = b - a, v = c - a;
  const double det = 2.0 * cross(u, v);
  if (det == 0.0) throw DegenerateConstellation("circumcenter of collinear points");
  const double ru = norm2(u), rv = norm2(v);
  const Vec2 rel{(v.y * ru - u.y * rv) / det, (u.x * rv - v.x * ru) / det};
  return a + rel;
}

bool in_parallelogram(const Constellation& c, const Vec2& z, double tol) {
  const Vec2 e1 = c.V[1] - c.V[0];
  const Vec2 e2 = c.V[2] - c.V[0];
  const double det = cross(e1, e2);
  const Vec2 r = z - c.V[0];
  const double s = cross(r, e2) / det;
  const double t = cross(e1, r) / det;
  return s >= -tol && s <= 1.0 + tol && t >= -tol && t <= 1.0 + tol;
}

CaseTag classify_case(const Constellation& c) {
  const bool long_main = dist(c.V[0], c.V[3]) > dist(c.V[1], c.V[2]);
  const bool inside = c.m1_in_P && c.m2_in_P;
  const bool side = dist(c.V[0], c.V[1]) > dist(c.V[0], c.V[2]);
  if (long_main) {
    if (inside) return CaseTag::Three;
    return side ? CaseTag::One : CaseTag::Two;
  }
  if (inside) return CaseTag::Six;
  return side ? CaseTag::Four : CaseTag::Five;
}

Constellation make_constellation(const std::array<Vec2, 4>& V) {
  const Vec2 s1 = V[0] - V[1];
  const Vec2 s2 = V[0] - V[2];
  if (!(std::fabs(cross(s1, s2)) > kDegenerateCollinear * norm(s1) * norm(s2)))
    throw DegenerateConstellation("constellation points are collinear");
  Constellation c;
  c.V = V;
  c.M12 = (V[0] + V[1]) * 0.5;
  c.M13 = (V[0] + V[2]) * 0.5;
  c.M24 = (V[1] + V[3]) * 0.5;
  c.M34 = (V[2] + V[3]) * 0.5;
  c.M1 = circumcenter(V[0], V[1], V[2]);
  c.M2 = circumcenter(V[1], V[2], V[3]);
  c.m1_in_P = in_parallelogram(c, c.M1);
  c.m2_in_P = in_parallelogram(c, c.M2);
  c.case_tag = classify_case(c);
  return c;
}

Constellation build_irc(const ChannelRealization& ch) {
  ch.validate();
  if (relay_degenerate(ch)) throw DegenerateConstellation("source-relay channels are collinear");
  const cplx g1 = std::sqrt(ch.E1) * ch.h1R;
  const cplx g2 = std::sqrt(ch.E2) * ch.h2R;
  std::array<Vec2, 4> V;
  for (int i = 0; i < 4; ++i) {
    const cplx v = g1 * double(kPairs[i].x1) + g2 * double(kPairs[i].x2);
    V[i] = {v.real(), v.imag()};
  }
  return make_constellation(V);
}

Vec2 mislabeled_point(const ChannelRealization& ch, const PowerPair& p, const SymbolPair& true_pair,
                      double level) {
  const double x = std::sqrt(ch.E1) * ch.h1D * true_pair.x1 + std::sqrt(ch.E2) * ch.h2D * true_pair.x2;
  return {x, std::sqrt(p.alpha) * level * ch.hRD};
}

Constellation build_idc(const ChannelRealization& ch, const PowerPair& p) {
  ch.validate();
  std::array<Vec2, 4> V;
  for (int i = 0; i < 4; ++i) V[i] = mislabeled_point(ch, p, kPairs[i], panc_level(i, p));
  return make_constellation(V);
}

ConvexRegion voronoi_cell(const Constellation& c, int i) {
  ConvexRegion r;
  for (int j = 0; j < 4; ++j) {
    if (j == i) continue;
    r.planes.push_back({c.V[j] - c.V[i], 0.5 * (norm2(c.V[j]) - norm2(c.V[i]))});
  }
  return r;
}

int nearest_vertex(const std::array<Vec2, 4>& V, const Vec2& z) {
  int best = -1;
  double best_d = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double d = norm2(z - V[i]);
    if (best < 0 || d < best_d || (d == best_d && lex_rank(i) < lex_rank(best))) {
      best = i;
      best_d = d;
    }
  }
  return best;
}

int boxplus(const SymbolPair& p, const ChannelRealization& ch) {
  const double s = std::abs(ch.h1R) * p.x1 + std::abs(ch.h2R) * p.x2;
  return s < 0.0 ? -1 : 1;
}

bool omega_v1_printed(const ChannelRealization& ch, const Vec2& y) {
  const double r1 = ch.h1R.real(), i1 = ch.h1R.imag();
  const double r2 = ch.h2R.real(), i2 = ch.h2R.imag();
  const bool first = (r2 / i2) * y.x + y.y - i1 - std::sqrt(ch.E1) * r1 * r2 / i2 < 0.0;
  const bool second = (r1 / i1) * y.x + y.y - i2 - std::sqrt(ch.E2) * r1 * r2 / i1 >= 0.0;
  return first && second;
}

bool omega_v1d_closed_form(const ChannelRealization& ch, const PowerPair& p, const Vec2& y,
                           bool corrected) {
  const double u = std::sqrt(ch.E1) * ch.h1D;
  const double v = std::sqrt(ch.E2) * ch.h2D;
  const double H = ch.hRD;
  const double a = p.a, b = p.b;
  double m1, m2;
  if (corrected) {
    m1 = -0.5 * (a + b) * H - 2.0 * u * v / ((a - b) * H);
    m2 = -0.5 * (a - b) * H - 2.0 * u * v / ((a + b) * H);
  } else {
    m1 = -0.5 * (a + b) * H - 2.0 * std::sqrt(ch.E1 * ch.E2) * ch.h1D * ch.h2D * (a - b) * H;
    m2 = -0.5 * (a - b) * H - 2.0 * std::sqrt(ch.E1 * ch.E2) * ch.h1D * ch.h2D * (a + b) * H;
  }
  const bool first = 2.0 * u / ((a - b) * H) * y.x + y.y + m1 > 0.0;
  const bool second = 2.0 * v / ((a + b) * H) * y.x + y.y + m2 > 0.0;
  return first && second;
}

std::string describe(const Constellation& c) {
  std::ostringstream os;
  os.precision(10);
  const char* names[4] = {"V1", "V2", "V3", "V4"};
  for (int i = 0; i < 4; ++i) os << names[i] << " " << c.V[i].x << " " << c.V[i].y << "\n";
  os << "M12 " << c.M12.x << " " << c.M12.y << "\n";
  os << "M13 " << c.M13.x << " " << c.M13.y << "\n";
  os << "M24 " << c.M24.x << " " << c.M24.y << "\n";
  os << "M34 " << c.M34.x << " " << c.M34.y << "\n";
  os << "M1 " << c.M1.x << " " << c.M1.y << (c.m1_in_P ? " inside" : " outside") << "\n";
  os << "M2 " << c.M2.x << " " << c.M2.y << (c.m2_in_P ? " inside" : " outside") << "\n";
  os << "case " << static_cast<int>(c.case_tag) << "\n";
  return os.str();
}

}  // namespace panc
