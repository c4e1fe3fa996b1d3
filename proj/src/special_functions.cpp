#include "panc/special_functions.hpp"

#include <array>

namespace panc {

namespace {

constexpr double kQuadRel = 1e-12;
constexpr double kQuadAbs = 1e-15;
constexpr double kTruncation = 10.0;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(what) + ": non-finite argument");
}

double craig_integral(double x, double upper) {
  if (upper <= 0.0) return 0.0;
  if (x == 0.0) return upper / kPi;
  const double h = 0.5 * x * x;
  auto f = [h](double t) {
    const double s = std::sin(t);
    return std::exp(-h / (s * s));
  };
  return integrate(f, 0.0, upper, kQuadAbs, kQuadRel).value / kPi;
}

// Unit-normal copy of a half-plane; returns false for a zero normal.
bool normalized(const HalfPlane& h, HalfPlane& out) {
  const double len = norm(h.n);
  if (!(len > 0.0)) return false;
  out.n = h.n / len;
  out.c = h.c / len;
  return true;
}

// Solve a 3x3 system by Cramer's rule.
bool solve3(const std::array<std::array<double, 4>, 3>& m, std::array<double, 3>& x) {
  auto det3 = [](double a, double b, double c, double d, double e, double f, double g, double h,
                 double i) { return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g); };
  const double D = det3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1],
                        m[2][2]);
  if (std::fabs(D) < 1e-14) return false;
  for (int k = 0; k < 3; ++k) {
    std::array<std::array<double, 3>, 3> a{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a[r][c] = (c == k) ? m[r][3] : m[r][c];
    x[k] = det3(a[0][0], a[0][1], a[0][2], a[1][0], a[1][1], a[1][2], a[2][0], a[2][1], a[2][2]) / D;
  }
  return true;
}

}  // namespace

double q1(double x) {
  require_finite(x, "q1");
  return 0.5 * std::erfc(x / std::sqrt(2.0));
}

double q1_craig(double x) {
  require_finite(x, "q1_craig");
  if (x < 0.0) return 1.0 - q1_craig(-x);
  return craig_integral(x, 0.5 * kPi);
}

double q2_angle(double x, double upper) {
  require_finite(x, "q2_angle");
  require_finite(upper, "q2_angle");
  if (x < 0.0) throw std::domain_error("q2_angle: negative argument");
  if (upper < 0.0 || upper > 0.5 * kPi + 1e-15)
    throw std::domain_error("q2_angle: upper limit outside [0, pi/2]");
  return craig_integral(x, std::min(upper, 0.5 * kPi));
}

double q2(double x, double rho) {
  require_finite(x, "q2");
  require_finite(rho, "q2");
  if (!(std::fabs(rho) < 1.0)) throw std::domain_error("q2: |rho| must be < 1");
  if (x < 0.0) throw std::domain_error("q2: negative argument");
  return craig_integral(x, std::atan(std::sqrt((1.0 + rho) / (1.0 - rho))));
}

double normal_interval(double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  const double r = std::sqrt(0.5);
  double p;
  if (lo >= 0.0) {
    p = 0.5 * (std::erfc(lo * r) - std::erfc(hi * r));
  } else if (hi <= 0.0) {
    p = 0.5 * (std::erfc(-hi * r) - std::erfc(-lo * r));
  } else {
    p = 1.0 - 0.5 * (std::erfc(-lo * r) + std::erfc(hi * r));
  }
  return std::max(p, 0.0);
}

bool region_has_interior(const ConvexRegion& r) {
  // Largest inscribed disc radius t (capped) by enumerating LP vertices in
  // (x, y, t); a large box keeps the feasible set bounded.
  std::vector<HalfPlane> hs;
  for (const auto& h : r.planes) {
    HalfPlane u;
    if (normalized(h, u)) {
      hs.push_back(u);
    } else if (h.c < 0.0) {
      return false;
    }
  }
  if (hs.empty()) return true;
  constexpr double kBox = 1e9;
  struct Row {
    double a, b, t, c;
  };
  std::vector<Row> rows;
  for (const auto& h : hs) rows.push_back({h.n.x, h.n.y, 1.0, h.c});
  rows.push_back({1, 0, 0, kBox});
  rows.push_back({-1, 0, 0, kBox});
  rows.push_back({0, 1, 0, kBox});
  rows.push_back({0, -1, 0, kBox});
  rows.push_back({0, 0, 1, 1.0});
  rows.push_back({0, 0, -1, 1.0});
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t m = rows.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        std::array<std::array<double, 4>, 3> sys = {
            {{rows[i].a, rows[i].b, rows[i].t, rows[i].c},
             {rows[j].a, rows[j].b, rows[j].t, rows[j].c},
             {rows[k].a, rows[k].b, rows[k].t, rows[k].c}}};
        std::array<double, 3> x{};
        if (!solve3(sys, x)) continue;
        bool feasible = true;
        for (const auto& q : rows) {
          const double lhs = q.a * x[0] + q.b * x[1] + q.t * x[2];
          if (lhs > q.c + 1e-9 * std::max(1.0, std::fabs(q.c))) {
            feasible = false;
            break;
          }
        }
        if (feasible) best = std::max(best, x[2]);
      }
  return best > 1e-12;
}

std::vector<BoundaryPiece> region_boundary(const ConvexRegion& r) {
  std::vector<HalfPlane> hs(r.planes.size());
  std::vector<bool> valid(r.planes.size(), false);
  for (std::size_t i = 0; i < r.planes.size(); ++i) valid[i] = normalized(r.planes[i], hs[i]);

  constexpr double kEps = 1e-12;
  std::vector<BoundaryPiece> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!valid[i]) continue;
    BoundaryPiece piece;
    piece.plane = static_cast<int>(i);
    piece.origin = hs[i].n * hs[i].c;
    piece.dir = perp(hs[i].n);
    bool empty = false;
    for (std::size_t j = 0; j < hs.size() && !empty; ++j) {
      if (j == i || !valid[j]) continue;
      const double slope = dot(hs[j].n, piece.dir);
      const double room = hs[j].c - dot(hs[j].n, piece.origin);
      if (std::fabs(slope) < kEps) {
        if (room < -kEps) empty = true;
        // Duplicate boundary line: keep only the first copy.
        if (std::fabs(room) <= kEps && dot(hs[j].n, hs[i].n) > 0.0 && j < i) empty = true;
        continue;
      }
      const double t = room / slope;
      if (slope > 0.0) {
        piece.t1 = std::min(piece.t1, t);
      } else {
        piece.t0 = std::max(piece.t0, t);
      }
    }
    if (!empty && piece.t1 - piece.t0 > kEps) out.push_back(piece);
  }
  return out;
}

RegionProbability gaussian_region_prob(const GaussianSpec& g, const ConvexRegion& r) {
  // Whiten: z = mean + L w with L the lower Cholesky factor of the covariance.
  const Mat2& S = g.cov;
  if (!(S.a > 0.0) || !(S.det() > 0.0))
    throw std::domain_error("gaussian_region_prob: covariance not positive definite");
  const double l11 = std::sqrt(S.a);
  const double l21 = S.c / l11;
  const double l22 = std::sqrt(S.d - l21 * l21);

  ConvexRegion w;
  for (const auto& h : r.planes) {
    // n.(mean + L w) <= c  ->  (L^T n).w <= c - n.mean
    HalfPlane t{{l11 * h.n.x + l21 * h.n.y, l22 * h.n.y}, h.c - dot(h.n, g.mean)};
    HalfPlane u;
    if (normalized(t, u)) {
      w.planes.push_back(u);
    } else if (t.c < 0.0) {
      return {0.0, true, 0.0};
    }
  }
  if (!region_has_interior(w)) return {0.0, true, 0.0};

  // The whitened density is isotropic, so rotate the frame until no edge runs
  // close to the slicing direction; near-vertical edges make the x-integrand
  // nearly discontinuous.
  double best_angle = 0.0, best_score = -1.0;
  for (int k = 0; k < 90; ++k) {
    const double t = kPi * k / 90.0;
    const double ct = std::cos(t), st = std::sin(t);
    double score = 1.0;
    for (const auto& h : w.planes) score = std::min(score, std::fabs(st * h.n.x + ct * h.n.y));
    if (score > best_score) {
      best_score = score;
      best_angle = t;
    }
  }
  {
    const double ct = std::cos(best_angle), st = std::sin(best_angle);
    for (auto& h : w.planes) h.n = {ct * h.n.x - st * h.n.y, st * h.n.x + ct * h.n.y};
  }

  constexpr double kVertical = 1e-13;
  auto integrand = [&w](double x) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (const auto& h : w.planes) {
      const double rhs = h.c - h.n.x * x;
      if (std::fabs(h.n.y) < kVertical) {
        if (rhs < 0.0) return 0.0;
      } else if (h.n.y > 0.0) {
        hi = std::min(hi, rhs / h.n.y);
      } else {
        lo = std::max(lo, rhs / h.n.y);
      }
    }
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi) * normal_interval(lo, hi);
  };

  // Breakpoints where the active constraint set can change.
  std::vector<double> cuts = {-kTruncation, kTruncation};
  auto add_cut = [&cuts](double x) {
    if (std::isfinite(x) && x > -kTruncation && x < kTruncation) cuts.push_back(x);
  };
  for (std::size_t i = 0; i < w.planes.size(); ++i) {
    const auto& hi = w.planes[i];
    if (std::fabs(hi.n.y) < kVertical) add_cut(hi.c / hi.n.x);
    for (std::size_t j = i + 1; j < w.planes.size(); ++j) {
      const auto& hj = w.planes[j];
      const double det = hi.n.x * hj.n.y - hi.n.y * hj.n.x;
      if (std::fabs(det) < 1e-14) continue;
      add_cut((hi.c * hj.n.y - hi.n.y * hj.c) / det);
    }
  }
  std::sort(cuts.begin(), cuts.end());

  RegionProbability out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    if (cuts[k + 1] - cuts[k] < 1e-15) continue;
    const auto q = integrate(integrand, cuts[k], cuts[k + 1], 1e-14, kQuadRel);
    out.p += q.value;
    out.error_estimate += q.error;
  }
  out.p = std::clamp(out.p, 0.0, 1.0);
  return out;
}

Eigen2 eigen_2x2(const Mat2& m) {
  if (!(std::isfinite(m.a) && std::isfinite(m.b) && std::isfinite(m.c) && std::isfinite(m.d)))
    throw std::domain_error("eigen_2x2: non-finite entry");
  if (std::fabs(m.b - m.c) > 1e-12 * std::max(1.0, m.max_abs()))
    throw std::invalid_argument("eigen_2x2: matrix is not symmetric");
  const double p = m.a, q = m.d, r = 0.5 * (m.b + m.c);
  const double disc = std::sqrt(p * p + q * q + 4.0 * r * r - 2.0 * p * q);
  Eigen2 e;
  e.lambda1 = 0.5 * (p + q + disc);
  e.lambda2 = 0.5 * (p + q - disc);

  Vec2 v1;
  if (r == 0.0) {
    v1 = (p >= q) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  } else {
    const Vec2 c1{r, e.lambda1 - p};
    const Vec2 c2{e.lambda1 - q, r};
    v1 = norm2(c1) >= norm2(c2) ? c1 : c2;
    v1 = v1 / norm(v1);
  }
  const Vec2 v2 = perp(v1);
  e.Q = {v1.x, v1.y, v2.x, v2.y};
  return e;
}

}  // namespace panc
