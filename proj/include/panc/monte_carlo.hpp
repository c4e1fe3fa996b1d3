#pragma once
// Monte Carlo simulation of the two-phase relay system and the channel-averaged
// analytic overlays.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "panc/geometry.hpp"
#include "panc/power_control.hpp"
#include "panc/rng.hpp"

namespace panc {

struct NodeGeometry {
  Vec2 S1{0.0, 0.5773502691896257};
  Vec2 S2{0.0, -0.5773502691896257};
  Vec2 R{1.0 / 3.0, 0.0};
  Vec2 D{1.0, 0.0};
  double pathloss_exponent = 3.0;

  void validate() const;
  // Mean power gain d^-exponent of each link.
  double gain(const Vec2& from, const Vec2& to) const;
};

// Circularly symmetric source-relay gains, Rayleigh magnitudes for the links
// into the destination. Draws with collinear source-relay gains are redrawn.
ChannelRealization sample_channels(const NodeGeometry& g, CounterRng& rng);

enum class SchemeId { OriginOpt, CtOpt, Random, Fixed, Genie, CXNC, CXNCAlpha, OriginOptNoAlpha };
inline constexpr std::array<SchemeId, 8> kAllSchemes = {
    SchemeId::OriginOpt, SchemeId::CtOpt, SchemeId::Random,    SchemeId::Fixed,
    SchemeId::Genie,     SchemeId::CXNC,  SchemeId::CXNCAlpha, SchemeId::OriginOptNoAlpha};
std::string scheme_name(SchemeId s);
SchemeId parse_scheme(const std::string& name);

// Everything the destination and the relay need for one scheme on one channel.
struct SchemeSetup {
  SchemeId id = SchemeId::OriginOpt;
  PowerPair p;
  double alpha = 1.0;
  bool genie = false;
  bool cxnc = false;
  std::array<Vec2, 4> hyp{};          // destination hypotheses, noiseless
  std::array<double, 4> forwarded{};  // second-coordinate mean per relay decision
};

// u_random drives the Random scheme; u_fixed is drawn once per run.
SchemeSetup make_scheme(SchemeId id, const ChannelRealization& ch, double ER, double u_random,
                        double u_fixed);

// ML relay decision with lexicographic tie-break; returns the pair index.
int relay_detect(const cplx& y, const ChannelRealization& ch);
// Forwarded amplitude sqrt(alpha) * level for a decided pair.
double panc_forward(int pair, const PowerPair& p);
// ML joint decision at the destination from (y1, y2).
int dest_detect(double y1, double y2, const SchemeSetup& s);

using Confusion = std::array<std::array<std::uint64_t, 4>, 4>;

struct SweepResult {
  double snr_db = 0.0;
  SchemeId scheme = SchemeId::OriginOpt;
  std::string method;  // "mc", "exact" or "ct"
  double sper = 0.0;
  double ci95 = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct McConfig {
  NodeGeometry geometry;
  std::vector<double> snr_db;
  std::vector<SchemeId> schemes;
  std::uint64_t channels = 10000;
  std::uint64_t symbols = 1000;
  std::uint64_t seed = 1;
  double ER = 1.0;
  bool exact = false;
  bool ct = false;
  std::uint64_t analytic_channels = 500;  // channels used for the analytic averages
  int threads = 0;                        // 0: hardware concurrency

  void validate() const;
};

struct SweepOutput {
  std::vector<SweepResult> rows;
  // confusion[snr index][scheme index][true pair][decided pair]
  std::vector<std::vector<Confusion>> confusion;
  std::uint64_t analytic_skipped = 0;  // channels whose constellation was degenerate
};

SweepOutput run_sweep(const McConfig& cfg);

// Simulation at one fixed channel (noise variance taken from snr_db); trial
// blocks are keyed by index so the counts do not depend on the thread count.
std::vector<Confusion> simulate_fixed_channel(const ChannelRealization& ch, const SchemeSetup& s,
                                              const std::vector<double>& snr_db,
                                              std::uint64_t trials, std::uint64_t seed,
                                              int threads = 0);

std::uint64_t errors(const Confusion& c);
std::uint64_t total(const Confusion& c);

double ci95_binomial(double p, std::uint64_t n);

}  // namespace panc
