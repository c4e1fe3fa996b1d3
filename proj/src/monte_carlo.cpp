#include "panc/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "panc/coordinate_transform.hpp"
#include "panc/exact_sper.hpp"

namespace panc {

void NodeGeometry::validate() const {
  if (!(pathloss_exponent > 0.0)) throw std::invalid_argument("geometry: pathloss exponent must be > 0");
  const Vec2* pts[4] = {&S1, &S2, &R, &D};
  const char* names[4] = {"S1", "S2", "R", "D"};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (dist(*pts[i], *pts[j]) == 0.0)
        throw std::invalid_argument(std::string("geometry: ") + names[i] + " and " + names[j] +
                                    " coincide");
}

double NodeGeometry::gain(const Vec2& from, const Vec2& to) const {
  return std::pow(dist(from, to), -pathloss_exponent);
}

ChannelRealization sample_channels(const NodeGeometry& g, CounterRng& rng) {
  auto complex_gain = [&](double var) {
    const double s = std::sqrt(0.5 * var);
    const double re = rng.normal(), im = rng.normal();
    return cplx(s * re, s * im);
  };
  const double g1R = g.gain(g.S1, g.R), g2R = g.gain(g.S2, g.R);
  const double g1D = g.gain(g.S1, g.D), g2D = g.gain(g.S2, g.D), gRD = g.gain(g.R, g.D);
  ChannelRealization ch;
  do {
    ch.h1R = complex_gain(g1R);
    ch.h2R = complex_gain(g2R);
  } while (relay_degenerate(ch));
  ch.h1D = std::abs(complex_gain(g1D));
  ch.h2D = std::abs(complex_gain(g2D));
  ch.hRD = std::abs(complex_gain(gRD));
  return ch;
}

std::string scheme_name(SchemeId s) {
  switch (s) {
    case SchemeId::OriginOpt: return "OriginOpt";
    case SchemeId::CtOpt: return "CtOpt";
    case SchemeId::Random: return "Random";
    case SchemeId::Fixed: return "Fixed";
    case SchemeId::Genie: return "Genie";
    case SchemeId::CXNC: return "CXNC";
    case SchemeId::CXNCAlpha: return "CXNCAlpha";
    case SchemeId::OriginOptNoAlpha: return "OriginOptNoAlpha";
  }
  return "?";
}

SchemeId parse_scheme(const std::string& name) {
  for (SchemeId s : kAllSchemes)
    if (scheme_name(s) == name) return s;
  throw std::invalid_argument("unknown scheme '" + name + "'");
}

SchemeSetup make_scheme(SchemeId id, const ChannelRealization& ch, double ER, double u_random,
                        double u_fixed) {
  SchemeSetup s;
  s.id = id;
  const double alpha = scaling_factor(link_snrs(ch, ER));
  switch (id) {
    case SchemeId::OriginOpt: s.p = optimize_powers_exact(ch, ER); s.alpha = alpha; break;
    case SchemeId::CtOpt: s.p = optimize_powers_ct(ch, ER); s.alpha = alpha; break;
    case SchemeId::Random: s.p = baseline_powers(u_random, ER); s.alpha = alpha; break;
    case SchemeId::Fixed: s.p = baseline_powers(u_fixed, ER); s.alpha = alpha; break;
    case SchemeId::Genie: s.p = optimize_powers_exact(ch, ER); s.genie = true; break;
    case SchemeId::CXNC: s.cxnc = true; break;
    case SchemeId::CXNCAlpha: s.cxnc = true; s.alpha = alpha; break;
    case SchemeId::OriginOptNoAlpha: s.p = optimize_powers_exact(ch, ER); break;
  }
  s.p.alpha = s.alpha;
  s.p.ER_ave = ER;
  for (int k = 0; k < 4; ++k) {
    const double x = std::sqrt(ch.E1) * ch.h1D * kPairs[k].x1 + std::sqrt(ch.E2) * ch.h2D * kPairs[k].x2;
    const double level = s.cxnc ? std::sqrt(s.alpha * ER) * kPairs[k].x1 * kPairs[k].x2
                                : panc_forward(k, s.p);
    s.forwarded[k] = level * ch.hRD;
    s.hyp[k] = {x, s.forwarded[k]};
  }
  return s;
}

int relay_detect(const cplx& y, const ChannelRealization& ch) {
  std::array<Vec2, 4> V;
  for (int i = 0; i < 4; ++i) {
    const cplx v = std::sqrt(ch.E1) * ch.h1R * double(kPairs[i].x1) +
                   std::sqrt(ch.E2) * ch.h2R * double(kPairs[i].x2);
    V[i] = {v.real(), v.imag()};
  }
  return nearest_vertex(V, {y.real(), y.imag()});
}

double panc_forward(int pair, const PowerPair& p) { return std::sqrt(p.alpha) * panc_level(pair, p); }

int dest_detect(double y1, double y2, const SchemeSetup& s) { return nearest_vertex(s.hyp, {y1, y2}); }

std::uint64_t errors(const Confusion& c) {
  std::uint64_t e = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) e += c[i][j];
  return e;
}

std::uint64_t total(const Confusion& c) {
  std::uint64_t n = 0;
  for (const auto& row : c)
    for (auto v : row) n += v;
  return n;
}

double ci95_binomial(double p, std::uint64_t n) {
  return n == 0 ? 0.0 : 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

void McConfig::validate() const {
  geometry.validate();
  if (snr_db.empty()) throw std::invalid_argument("config: empty SNR grid");
  for (std::size_t i = 1; i < snr_db.size(); ++i)
    if (!(snr_db[i] > snr_db[i - 1])) throw std::invalid_argument("config: SNR grid must be strictly increasing");
  if (schemes.empty()) throw std::invalid_argument("config: empty scheme list");
  if (channels == 0 || symbols == 0) throw std::invalid_argument("config: trials must be > 0");
  if (!(ER > 0.0)) throw std::invalid_argument("config: relay energy must be > 0");
  if (threads < 0) throw std::invalid_argument("config: negative thread count");
}

namespace {

int resolve_threads(int t) {
  if (t > 0) return t;
  const unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

template <class F>
void parallel_for(std::uint64_t n, int threads, F&& body) {
  const int T = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), n));
  if (T <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < T; ++t)
    pool.emplace_back([&, t] {
      for (std::uint64_t i = static_cast<std::uint64_t>(t); i < n; i += static_cast<std::uint64_t>(T)) body(t, i);
    });
  for (auto& th : pool) th.join();
}

constexpr std::uint64_t kStreamSymbols = 1;
constexpr std::uint64_t kStreamFixed = 0xF1EDULL;
constexpr std::uint64_t kStreamBlocks = 2;

struct Noise {
  int pair;
  double r1, r2, d1, d2;
};

Noise draw_trial(CounterRng& rng) {
  Noise n;
  n.pair = static_cast<int>(rng.next_u64() & 3ULL);
  n.r1 = rng.normal();
  n.r2 = rng.normal();
  n.d1 = rng.normal();
  n.d2 = rng.normal();
  return n;
}

// One trial of a scheme given the relay decision.
int trial_decision(const Noise& n, int relay_decision, double sigma, const SchemeSetup& s) {
  const int fwd = s.genie ? n.pair : relay_decision;
  const double y1 = s.hyp[n.pair].x + sigma * n.d1;
  const double y2 = s.forwarded[fwd] + sigma * n.d2;
  return dest_detect(y1, y2, s);
}

std::array<Vec2, 4> irc_points(const ChannelRealization& ch) {
  std::array<Vec2, 4> V;
  for (int i = 0; i < 4; ++i) {
    const cplx v = std::sqrt(ch.E1) * ch.h1R * double(kPairs[i].x1) +
                   std::sqrt(ch.E2) * ch.h2R * double(kPairs[i].x2);
    V[i] = {v.real(), v.imag()};
  }
  return V;
}

struct AnalyticValues {
  double exact = 0.0;
  double ct = 0.0;
};

AnalyticValues analytic_point(const ChannelRealization& ch, const SchemeSetup& s,
                              const RelayLevelDistribution& relay_exact,
                              const RelayLevelDistribution& relay_ct, bool want_exact, bool want_ct) {
  AnalyticValues v{std::nan(""), std::nan("")};
  RelayLevelDistribution perfect;
  for (int i = 0; i < 4; ++i) perfect.p[i][i] = 1.0;
  if (s.cxnc) {
    if (want_exact) v.exact = sper_exact_cxnc_given_relay(ch, s.alpha, s.p.ER_ave, relay_exact);
    return v;
  }
  if (want_exact) v.exact = sper_exact_given_relay(ch, s.p, s.genie ? perfect : relay_exact).total;
  if (want_ct) v.ct = sper_ct_given_relay(ch, s.p, s.genie ? perfect : relay_ct).total;
  return v;
}

}  // namespace

SweepOutput run_sweep(const McConfig& cfg) {
  cfg.validate();
  const int threads = resolve_threads(cfg.threads);
  const std::size_t nS = cfg.snr_db.size(), nK = cfg.schemes.size();
  std::vector<double> sigma(nS);
  for (std::size_t s = 0; s < nS; ++s) sigma[s] = std::sqrt(std::pow(10.0, -cfg.snr_db[s] / 10.0));
  const double u_fixed = CounterRng(cfg.seed, kStreamFixed).uniform0();

  std::vector<std::vector<std::vector<Confusion>>> local(
      threads, std::vector<std::vector<Confusion>>(nS, std::vector<Confusion>(nK, Confusion{})));
  const std::uint64_t nA = (cfg.exact || cfg.ct) ? std::min(cfg.analytic_channels, cfg.channels) : 0;
  // analytic[channel][snr][scheme]
  std::vector<std::vector<std::vector<AnalyticValues>>> analytic(nA);
  std::vector<char> skipped(nA, 0);

  parallel_for(cfg.channels, threads, [&](int t, std::uint64_t c) {
    CounterRng crng(cfg.seed, c, 0);
    const ChannelRealization ch = sample_channels(cfg.geometry, crng);
    const double u_random = crng.uniform0();
    std::vector<SchemeSetup> setups;
    setups.reserve(nK);
    for (SchemeId id : cfg.schemes) setups.push_back(make_scheme(id, ch, cfg.ER, u_random, u_fixed));
    const std::array<Vec2, 4> V = irc_points(ch);

    CounterRng srng(cfg.seed, c, kStreamSymbols);
    auto& acc = local[t];
    for (std::uint64_t j = 0; j < cfg.symbols; ++j) {
      const Noise n = draw_trial(srng);
      for (std::size_t s = 0; s < nS; ++s) {
        const double sr = sigma[s] * std::sqrt(0.5);
        const int rd = nearest_vertex(V, {V[n.pair].x + sr * n.r1, V[n.pair].y + sr * n.r2});
        for (std::size_t k = 0; k < nK; ++k)
          ++acc[s][k][n.pair][trial_decision(n, rd, sigma[s], setups[k])];
      }
    }

    if (c < nA) {
      auto& row = analytic[c];
      row.assign(nS, std::vector<AnalyticValues>(nK));
      try {
        for (std::size_t s = 0; s < nS; ++s) {
          ChannelRealization chs = ch;
          chs.sigma2 = sigma[s] * sigma[s];
          const RelayLevelDistribution re = relay_level_probs(build_irc(chs), chs.sigma2);
          RelayLevelDistribution rc;
          if (cfg.ct) rc = ct_level_probs(ct_relay(chs));
          for (std::size_t k = 0; k < nK; ++k) {
            SchemeSetup sk = setups[k];
            sk.p.ER_ave = cfg.ER;
            row[s][k] = analytic_point(chs, sk, re, rc, cfg.exact, cfg.ct);
          }
        }
      } catch (const DegenerateConstellation&) {
        skipped[c] = 1;
      }
    }
  });

  SweepOutput out;
  out.confusion.assign(nS, std::vector<Confusion>(nK, Confusion{}));
  for (int t = 0; t < threads; ++t)
    for (std::size_t s = 0; s < nS; ++s)
      for (std::size_t k = 0; k < nK; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) out.confusion[s][k][i][j] += local[t][s][k][i][j];
  for (char sk : skipped) out.analytic_skipped += sk ? 1 : 0;

  for (std::size_t s = 0; s < nS; ++s) {
    for (std::size_t k = 0; k < nK; ++k) {
      const Confusion& cm = out.confusion[s][k];
      const std::uint64_t N = total(cm);
      const double p = static_cast<double>(errors(cm)) / static_cast<double>(N);
      out.rows.push_back({cfg.snr_db[s], cfg.schemes[k], "mc", p, ci95_binomial(p, N), N, cfg.seed});
      for (int m = 0; m < 2; ++m) {
        if ((m == 0 && !cfg.exact) || (m == 1 && !cfg.ct)) continue;
        double sum = 0.0, sum2 = 0.0;
        std::uint64_t n = 0;
        for (std::uint64_t c = 0; c < nA; ++c) {
          if (skipped[c]) continue;
          const double v = m == 0 ? analytic[c][s][k].exact : analytic[c][s][k].ct;
          sum += v;
          sum2 += v * v;
          ++n;
        }
        double mean = std::nan(""), ci = std::nan("");
        if (n > 0 && std::isfinite(sum)) {
          mean = sum / n;
          const double var = n > 1 ? std::max(sum2 / n - mean * mean, 0.0) * n / (n - 1) : 0.0;
          ci = 1.96 * std::sqrt(var / n);
        }
        out.rows.push_back({cfg.snr_db[s], cfg.schemes[k], m == 0 ? "exact" : "ct", mean, ci, n, cfg.seed});
      }
    }
  }
  return out;
}

std::vector<Confusion> simulate_fixed_channel(const ChannelRealization& ch, const SchemeSetup& s,
                                              const std::vector<double>& snr_db,
                                              std::uint64_t trials, std::uint64_t seed, int threads) {
  constexpr std::uint64_t kBlock = 1ULL << 16;
  const std::uint64_t blocks = (trials + kBlock - 1) / kBlock;
  const int T = resolve_threads(threads);
  const std::size_t nS = snr_db.size();
  std::vector<double> sigma(nS);
  for (std::size_t i = 0; i < nS; ++i) sigma[i] = std::sqrt(std::pow(10.0, -snr_db[i] / 10.0));
  const std::array<Vec2, 4> V = irc_points(ch);
  std::vector<std::vector<Confusion>> local(T, std::vector<Confusion>(nS, Confusion{}));
  parallel_for(blocks, T, [&](int t, std::uint64_t b) {
    CounterRng rng(seed, b, kStreamBlocks);
    const std::uint64_t n = std::min(kBlock, trials - b * kBlock);
    for (std::uint64_t j = 0; j < n; ++j) {
      const Noise nz = draw_trial(rng);
      for (std::size_t i = 0; i < nS; ++i) {
        const double sr = sigma[i] * std::sqrt(0.5);
        const int rd = nearest_vertex(V, {V[nz.pair].x + sr * nz.r1, V[nz.pair].y + sr * nz.r2});
        ++local[t][i][nz.pair][trial_decision(nz, rd, sigma[i], s)];
      }
    }
  });
  std::vector<Confusion> out(nS, Confusion{});
  for (int t = 0; t < T; ++t)
    for (std::size_t i = 0; i < nS; ++i)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[i][a][b] += local[t][i][a][b];
  return out;
}

}  // namespace panc
