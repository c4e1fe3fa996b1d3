#pragma once
// Relay and destination constellations, Voronoi decision cells and the
// six-way geometric case classification.

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include "panc/linalg.hpp"
#include "panc/special_functions.hpp"

namespace panc {

using cplx = std::complex<double>;

struct ChannelRealization {
  cplx h1R{1.0, 0.0};
  cplx h2R{0.0, 1.0};
  double h1D = 1.0;  // magnitudes after phase pre-equalization
  double h2D = 1.0;
  double hRD = 1.0;
  double E1 = 1.0;
  double E2 = 1.0;
  double sigma2 = 1.0;

  // Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

struct SymbolPair {
  int x1 = 1;
  int x2 = 1;
  constexpr bool operator==(const SymbolPair&) const = default;
};

// Pair index convention: T1=(1,1)->0, T2=(-1,1)->1, T3=(1,-1)->2, T4=(-1,-1)->3.
inline constexpr std::array<SymbolPair, 4> kPairs = {
    SymbolPair{1, 1}, SymbolPair{-1, 1}, SymbolPair{1, -1}, SymbolPair{-1, -1}};

constexpr int pair_index(const SymbolPair& p) { return (p.x1 > 0 ? 0 : 1) + (p.x2 > 0 ? 0 : 2); }

// Lexicographic rank of a pair index on (x1, x2): T4 < T2 < T3 < T1.
constexpr int lex_rank(int idx) {
  constexpr int rank[4] = {3, 1, 2, 0};
  return rank[idx];
}

struct PowerPair {
  double a = 1.0;
  double b = 1.0;
  double alpha = 1.0;
  double ER_ave = 1.0;
  bool clamped = false;  // closed form left its feasible region and was projected
};

// Relay level for a decided pair: T1 -> +a, T2 -> +b, T3 -> -b, T4 -> -a (unscaled).
double panc_level(int pair_idx, const PowerPair& p);

// Level index ordering used by relay distributions: {+a, +b, -b, -a}, which
// coincides with the pair index that maps to it.
inline constexpr std::array<const char*, 4> kLevelNames = {"+a", "+b", "-b", "-a"};

enum class CaseTag { One = 1, Two = 2, Three = 3, Four = 4, Five = 5, Six = 6 };

struct Constellation {
  std::array<Vec2, 4> V;  // indexed by pair index
  Vec2 M12, M13, M24, M34;
  Vec2 M1;  // circumcenter of V1 V2 V3
  Vec2 M2;  // circumcenter of V2 V3 V4
  bool m1_in_P = false;
  bool m2_in_P = false;
  CaseTag case_tag = CaseTag::Six;
};

class DegenerateConstellation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDegenerateRelay = 1e-9;
inline constexpr double kDegenerateCollinear = 1e-12;

// |Re(h1R) Im(h2R) - Re(h2R) Im(h1R)|.
double relay_beta(const ChannelRealization& ch);
bool relay_degenerate(const ChannelRealization& ch);

// Completes a parallelogram (V1 + V4 = V2 + V3) with midpoints, M1, M2 and
// the case tag. Throws DegenerateConstellation for collinear points.
Constellation make_constellation(const std::array<Vec2, 4>& V);

Constellation build_irc(const ChannelRealization& ch);
Constellation build_idc(const ChannelRealization& ch, const PowerPair& p);

// Destination mean when the sources send true_pair and the relay forwards the
// unscaled level `level`; sqrt(alpha) is applied here.
Vec2 mislabeled_point(const ChannelRealization& ch, const PowerPair& p, const SymbolPair& true_pair,
                      double level);

Vec2 circumcenter(const Vec2& a, const Vec2& b, const Vec2& c);

// Inclusive membership in the parallelogram spanned at V1 by V2 - V1 and V3 - V1.
bool in_parallelogram(const Constellation& c, const Vec2& z, double tol = 1e-12);

CaseTag classify_case(const Constellation& c);

// ML cell of vertex i: { z : |z - V_i| <= |z - V_j| for all j != i }.
ConvexRegion voronoi_cell(const Constellation& c, int i);

// Index of the nearest vertex with lexicographic tie-break.
int nearest_vertex(const std::array<Vec2, 4>& V, const Vec2& z);

// Network-coding sign sign(|h1R| x1 + |h2R| x2); a zero argument maps to +1.
int boxplus(const SymbolPair& p, const ChannelRealization& ch);

// Uncorrected closed-form V1 relay region.
bool omega_v1_printed(const ChannelRealization& ch, const Vec2& y);

// Closed-form V1 destination region with the reference intercepts (`corrected`
// false) or with intercepts derived from the bisector geometry (true).
bool omega_v1d_closed_form(const ChannelRealization& ch, const PowerPair& p, const Vec2& y,
                           bool corrected);

std::string describe(const Constellation& c);

}  // namespace panc
