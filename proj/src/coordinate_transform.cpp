#include "panc/coordinate_transform.hpp"

namespace panc {

ConvexRegion cone_region(int cone) {
  switch (cone) {
    case 0: return {{{{-1.0, 1.0}, 0.0}, {{1.0, 1.0}, 0.0}}};
    case 1: return {{{{-1.0, 1.0}, 0.0}, {{-1.0, -1.0}, 0.0}}};
    case 2: return {{{{1.0, -1.0}, 0.0}, {{-1.0, -1.0}, 0.0}}};
    case 3: return {{{{1.0, -1.0}, 0.0}, {{1.0, 1.0}, 0.0}}};
    default: throw std::out_of_range("cone_region: index must be 0..3");
  }
}

int cone_index(const Vec2& z) {
  if (z.y > std::fabs(z.x)) return 2;
  if (-z.y > std::fabs(z.x)) return 0;
  return z.x >= 0.0 ? 1 : 3;
}

CtTransform make_ct(const Constellation& c, double s2) {
  if (!(s2 > 0.0)) throw std::invalid_argument("make_ct: noise variance must be > 0");
  const Vec2 s1 = c.V[0] - c.V[1];
  const Vec2 sv = c.V[0] - c.V[2];
  CtTransform t;
  t.s2 = s2;
  t.A = Mat2::columns(s1 / norm(s1), sv / norm(sv));
  t.A_inv = t.A.inverse();
  t.B = t.A.transpose() * t.A * (1.0 / s2);
  const Eigen2 e = eigen_2x2(t.B);
  t.lambda1 = e.lambda1;
  t.lambda2 = e.lambda2;
  if (std::fabs(t.B.b) <= 1e-12 * t.B.max_abs()) {
    const double r = 1.0 / std::sqrt(2.0);
    t.Q = {r, r, -r, r};
  } else {
    t.Q = e.Q;
  }
  t.C = t.Q * t.A_inv;
  if ((t.C * c.V[0]).y < 0.0) {
    t.Q = -t.Q;
    t.C = t.Q * t.A_inv;
  }
  std::array<bool, 4> used{};
  for (int i = 0; i < 4; ++i) {
    t.Vbar[i] = t.C * c.V[i];
    t.cone_of[i] = cone_index(t.Vbar[i]);
    if (used[t.cone_of[i]]) throw DegenerateConstellation("make_ct: two vertices share a cone");
    used[t.cone_of[i]] = true;
  }
  return t;
}

CtTransform ct_relay(const ChannelRealization& ch) { return make_ct(build_irc(ch), 0.5 * ch.sigma2); }

CtTransform ct_dest(const ChannelRealization& ch, const PowerPair& p) {
  return make_ct(build_idc(ch, p), ch.sigma2);
}

Mat2 transformed_noise_cov(const CtTransform& t) { return t.C * t.C.transpose() * t.s2; }

int ct_detect(const CtTransform& t, const Vec2& z) {
  const int cone = cone_index(t.C * z);
  for (int i = 0; i < 4; ++i)
    if (t.cone_of[i] == cone) return i;
  throw std::logic_error("ct_detect: unlabelled cone");
}

namespace {

double cone_mass(const CtTransform& t, const Vec2& mean_bar, int cone) {
  return gaussian_region_prob({mean_bar, transformed_noise_cov(t)}, cone_region(cone)).p;
}

double cone_error(const CtTransform& t, const Vec2& mean_bar, int true_cone) {
  double q = 0.0;
  for (int c = 0; c < 4; ++c)
    if (c != true_cone) q += cone_mass(t, mean_bar, c);
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace

RelayLevelDistribution ct_level_probs(const CtTransform& t) {
  RelayLevelDistribution out;
  for (int i = 0; i < 4; ++i) {
    double off = 0.0;
    for (int k = 0; k < 4; ++k) {
      if (k == i) continue;
      out.p[i][k] = cone_mass(t, t.Vbar[i], t.cone_of[k]);
      off += out.p[i][k];
    }
    out.p[i][i] = std::clamp(1.0 - off, 0.0, 1.0);
  }
  return out;
}

CtBreakdown sper_ct(const ChannelRealization& ch, const PowerPair& p) {
  return sper_ct_given_relay(ch, p, ct_level_probs(ct_relay(ch)));
}

CtBreakdown sper_ct_given_relay(const ChannelRealization& ch, const PowerPair& p,
                                const RelayLevelDistribution& relay) {
  const CtTransform dt = ct_dest(ch, p);
  CtBreakdown b;
  b.relay = relay;
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) {
      const Vec2 mean = mislabeled_point(ch, p, kPairs[i], panc_level(k, p));
      b.dest[i][k] = cone_error(dt, dt.C * mean, dt.cone_of[i]);
      total += b.relay.p[i][k] * b.dest[i][k];
    }
  }
  b.total = 0.25 * total;
  return b;
}

Mat2 printed_a_relay(const ChannelRealization& ch) {
  const double beta = ch.h1R.real() * ch.h2R.imag() - ch.h2R.real() * ch.h1R.imag();
  const double m1 = std::abs(ch.h1R), m2 = std::abs(ch.h2R);
  return Mat2{m1 * ch.h2R.imag(), -m1 * ch.h2R.real(), -m2 * ch.h1R.imag(), m2 * ch.h1R.real()} *
         (2.0 / beta);
}

Mat2 printed_a_inv_relay(const ChannelRealization& ch) {
  const double m1 = std::abs(ch.h1R), m2 = std::abs(ch.h2R);
  return Mat2{ch.h1R.real() / m1, ch.h2R.real() / m2, ch.h1R.imag() / m1, ch.h2R.imag() / m2} * 0.5;
}

Mat2 printed_b_relay(const ChannelRealization& ch) {
  const double beta = ch.h1R.real() * ch.h2R.imag() - ch.h2R.real() * ch.h1R.imag();
  const double n1 = std::norm(ch.h1R), n2 = std::norm(ch.h2R);
  const double r1 = ch.h1R.real(), i1 = ch.h1R.imag(), r2 = ch.h2R.real(), i2 = ch.h2R.imag();
  const double off = -n1 * r2 * i2 - n2 * r1 * i1;
  return Mat2{n1 * i2 * i2 + n2 * i1 * i1, off, off, n1 * r2 * r2 + n2 * r1 * r1} *
         (4.0 / (beta * ch.sigma2));
}

Mat2 printed_a_inv_dest(const ChannelRealization& ch, const PowerPair& p) {
  const double H = ch.hRD;
  return {(p.a + p.b) * H, -ch.h2D, (p.a - p.b) * H, -ch.h1D};
}

Mat2 printed_b_dest(const ChannelRealization& ch, const PowerPair& p) {
  const double H = ch.hRD, a = p.a, b = p.b;
  const double betaD = H * (ch.h1D * (a + b) + ch.h2D * (b - a));
  const double d1 = std::sqrt(4.0 * ch.h1D * ch.h1D + (a - b) * (a - b) * H * H);
  const double d2 = std::sqrt(4.0 * ch.h2D * ch.h2D + (a + b) * (a + b) * H * H);
  const double off = d1 * d2 * (b * b - a * a) * H * H - 4.0 * d1 * d2 * ch.h1D * ch.h2D;
  const Mat2 m{d1 * d1 * (a + b) * (a + b) * H * H + 4.0 * d1 * d1 * ch.h2D * ch.h2D, off, off,
               d2 * d2 * (b - a) * (b - a) * H * H + 4.0 * d2 * d2 * ch.h2D * ch.h2D};
  return m * (2.0 / (betaD * betaD * ch.sigma2));
}

std::array<double, 2> printed_eigenvalues(const Mat2& B) {
  const double r = std::sqrt(B.a * B.a + B.d * B.d + 4.0 * B.b * B.b - 2.0 * B.a * B.d);
  return {0.5 * (B.a + B.d + r), 0.5 * (B.a + B.d - r)};
}

Mat2 printed_q(const Mat2& B) {
  const auto l = printed_eigenvalues(B);
  const double k = std::sqrt((B.a - l[0]) / (l[1] - l[0]));
  const double first = B.b / ((l[0] - l[1]) * k);
  return {first, k, k, -first};
}

}  // namespace panc
