#include "panc/asymptotic.hpp"

#include <algorithm>
#include <cmath>

namespace panc {

namespace {

void check_gammas(const std::vector<double>& g) {
  if (g.empty() || g.size() > 3) throw std::invalid_argument("channel average: need 1 to 3 links");
  for (double x : g)
    if (!(x > 0.0)) throw std::invalid_argument("channel average: link gains must be > 0");
}

}  // namespace

double q_average_coefficient(const std::vector<double>& gammas) {
  check_gammas(gammas);
  static constexpr double kLead[4] = {0.0, 1.0 / 4.0, 3.0 / 16.0, 5.0 / 32.0};
  double prod = 1.0;
  for (double g : gammas) prod *= g;
  return kLead[gammas.size()] / prod;
}

double q_average_exact(const std::vector<double>& gammas, double rho) {
  check_gammas(gammas);
  auto f = [&](double t) {
    const double s2 = std::sin(t) * std::sin(t);
    double v = 1.0;
    for (double g : gammas) v *= s2 / (s2 + rho * g);
    return v;
  };
  return integrate(f, 0.0, 0.5 * kPi, 0.0, 1e-12).value / kPi;
}

namespace {

template <class Draw>
ImportanceEstimate average_q(const std::vector<double>& gammas, double rho, std::uint64_t draws,
                             std::uint64_t seed, Draw&& draw) {
  check_gammas(gammas);
  if (draws < 2) throw std::invalid_argument("channel average: need at least two draws");
  CounterRng rng(seed, 0xA5A5ULL);
  double sum = 0.0, sum2 = 0.0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    double x = 0.0, w = 1.0;
    for (double g : gammas) draw(rng, g, x, w);
    const double v = w * q1(std::sqrt(2.0 * rho * x));
    sum += v;
    sum2 += v * v;
  }
  const double n = static_cast<double>(draws);
  const double mean = sum / n;
  const double var = std::max(sum2 / n - mean * mean, 0.0) * n / (n - 1.0);
  return {mean, std::sqrt(var / n), draws};
}

}  // namespace

ImportanceEstimate q_average_importance(const std::vector<double>& gammas, double rho,
                                        std::uint64_t draws, std::uint64_t seed,
                                        double proposal_scale) {
  const double mu = proposal_scale / rho;
  return average_q(gammas, rho, draws, seed, [mu](CounterRng& r, double g, double& x, double& w) {
    const double e = r.exponential(mu);
    x += e;
    // density ratio (1/g) exp(-e/g) / ((1/mu) exp(-e/mu))
    w *= (mu / g) * std::exp(e / mu - e / g);
  });
}

ImportanceEstimate q_average_plain(const std::vector<double>& gammas, double rho, std::uint64_t draws,
                                   std::uint64_t seed) {
  return average_q(gammas, rho, draws, seed,
                   [](CounterRng& r, double g, double& x, double&) { x += r.exponential(g); });
}

LinkGammas link_gammas(const NodeGeometry& g) {
  return {g.gain(g.S1, g.R), g.gain(g.S2, g.R), g.gain(g.S1, g.D), g.gain(g.S2, g.D), g.gain(g.R, g.D)};
}

double PepExpansion::value(double rho) const {
  double v = 0.0;
  for (const auto& t : terms) v += t.coefficient * std::pow(rho, -t.order);
  return v;
}

int PepExpansion::leading_order() const {
  int best = 0;
  for (const auto& t : terms)
    if (t.coefficient != 0.0 && (best == 0 || t.order < best)) best = t.order;
  return best;
}

PepExpansion pep_panc_unscaled(Transition t, const LinkGammas& g, LevelOrder order) {
  const double gSR = g.g1R + g.g2R;
  const double sumD = g.g1D + g.g2D + g.gRD;
  PepExpansion e;
  if (t == Transition::T1toT4) {
    e.terms = {{5.0 / (32.0 * g.g1D * g.g2D * g.gRD), 3},
               {5.0 / (128.0 * g.g1D * g.g2D * g.gRD * g.g1R), 4},
               {g.gRD / (4.0 * g.g2R * sumD), 1},
               {g.gRD / (4.0 * gSR * sumD), 1}};
    return e;
  }
  const PepTerm common1{3.0 / (16.0 * g.g1D * g.gRD), 2};
  const PepTerm common2{1.0 / (4.0 * g.g1R), 1};
  switch (order) {
    case LevelOrder::AGreater:
      e.terms = {common1, common2, {1.0 / (4.0 * g.g2R), 1}, {1.0 / (4.0 * gSR), 1}};
      break;
    case LevelOrder::ALess:
      e.terms = {common1, common2, {3.0 / (64.0 * g.g1D * g.gRD * g.g2R), 3},
                 {3.0 / (64.0 * g.g1D * g.gRD * gSR), 3}};
      break;
    case LevelOrder::Equal:
      e.terms = {common1, common2, {1.0 / (16.0 * g.g1D * g.g2R), 2}, {1.0 / (16.0 * g.g1D * gSR), 2}};
      break;
  }
  return e;
}

PepExpansion pep_cxnc(bool scaled, Transition t, const LinkGammas& g) {
  PepExpansion e;
  if (scaled) {
    if (t != Transition::T1toT2) throw std::invalid_argument("pep_cxnc: scaled form covers single errors only");
    e.terms = {{1.0 / (4.0 * g.g1D), 1}};
    return e;
  }
  const double gSD = g.g1D + g.g2D;
  if (t == Transition::T1toT4) {
    e.terms = {{5.0 / (32.0 * gSD * g.gRD * g.g1R), 3},
               {5.0 / (32.0 * gSD * g.gRD * g.g2R), 3},
               {1.0 / (4.0 * gSD), 1}};
  } else {
    e.terms = {{3.0 / (16.0 * g.g1D * g.g1R), 2},
               {3.0 / (16.0 * g.g1D * g.g2R), 2},
               {3.0 / (16.0 * g.g1D * g.gRD), 2}};
  }
  return e;
}

double min_exponential_mean(double m1, double m2, double m3) {
  return 1.0 / (1.0 / m1 + 1.0 / m2 + 1.0 / m3);
}

double ks_distance_exponential(std::vector<double> samples, double mean) {
  if (samples.empty()) throw std::invalid_argument("ks_distance_exponential: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double F = -std::expm1(-samples[i] / mean);
    d = std::max({d, std::fabs((i + 1) / n - F), std::fabs(F - i / n)});
  }
  return d;
}

double chernoff_pep_bound(double d2, double sigma2) { return 0.5 * std::exp(-d2 / (8.0 * sigma2)); }

DiversityFit diversity_slope(const std::vector<SweepResult>& rows, SchemeId scheme, double lo_db,
                             double hi_db, const std::string& method) {
  if (!(hi_db - lo_db >= 10.0)) throw std::invalid_argument("diversity_slope: window must span >= 10 dB");
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.scheme != scheme || r.method != method) continue;
    if (r.snr_db < lo_db - 1e-9 || r.snr_db > hi_db + 1e-9) continue;
    if (!(r.sper > 10.0 / static_cast<double>(r.trials))) continue;
    xs.push_back(-r.snr_db / 10.0);
    ys.push_back(std::log10(r.sper));
  }
  if (xs.size() < 3) throw InsufficientData("diversity_slope: fewer than three resolvable points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  DiversityFit f;
  f.scheme = scheme;
  f.lo_db = lo_db;
  f.hi_db = hi_db;
  f.slope = sxy / sxx;
  f.points = static_cast<int>(xs.size());
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (my + f.slope * (xs[i] - mx));
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  return f;
}

}  // namespace panc
