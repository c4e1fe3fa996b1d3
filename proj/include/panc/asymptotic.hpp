#pragma once
// High-SNR channel averages, pairwise error expansions and diversity fits.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "panc/monte_carlo.hpp"

namespace panc {

// Leading coefficient c of E[Q1(sqrt(2 rho sum |h_t|^2))] ~ c rho^-L for
// independent exponential |h_t|^2 with means gammas (L = gammas.size(), 1..3).
double q_average_coefficient(const std::vector<double>& gammas);

// Exact value (1/pi) int_0^{pi/2} prod_t (1 + rho gamma_t / sin^2 t)^-1 dt.
double q_average_exact(const std::vector<double>& gammas, double rho);

struct ImportanceEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t draws = 0;
};

// Importance-sampled channel average of Q1(sqrt(2 rho sum |h_t|^2)). Each
// |h_t|^2 is drawn from an exponential with mean proposal_scale / rho and
// reweighted to its true mean gamma_t.
ImportanceEstimate q_average_importance(const std::vector<double>& gammas, double rho,
                                        std::uint64_t draws, std::uint64_t seed,
                                        double proposal_scale = 1.0);

// Plain Monte Carlo average with exponential draws at the true means.
ImportanceEstimate q_average_plain(const std::vector<double>& gammas, double rho, std::uint64_t draws,
                                   std::uint64_t seed);

struct LinkGammas {
  double g1R = 1.0, g2R = 1.0, g1D = 1.0, g2D = 1.0, gRD = 1.0;
};
LinkGammas link_gammas(const NodeGeometry& g);

// One term c * rho^-order of an expansion.
struct PepTerm {
  double coefficient = 0.0;
  int order = 0;
};

struct PepExpansion {
  std::vector<PepTerm> terms;
  double value(double rho) const;
  int leading_order() const;  // smallest exponent with a non-zero coefficient
};

enum class Transition { T1toT4, T1toT2 };
enum class LevelOrder { AGreater, ALess, Equal };

// Unscaled PANC expansions; the single-error case branches on the level order.
PepExpansion pep_panc_unscaled(Transition t, const LinkGammas& g, LevelOrder order = LevelOrder::AGreater);

// XOR forwarding. Unscaled: both reference transitions. Scaled: the single-error
// term 1 / (4 g1D) rho^-1 (t must be T1toT2).
PepExpansion pep_cxnc(bool scaled, Transition t, const LinkGammas& g);

// Mean of min(X1, X2, X3) for independent exponentials with the given means.
double min_exponential_mean(double m1, double m2, double m3);

// sup |F_empirical - F_exponential(mean)| over the sorted samples.
double ks_distance_exponential(std::vector<double> samples, double mean);

// Q1(sqrt(d2) / (2 sigma)) <= (1/2) exp(-d2 / (8 sigma2)) for two points at squared distance d2.
double chernoff_pep_bound(double d2, double sigma2);

class InsufficientData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiversityFit {
  SchemeId scheme = SchemeId::OriginOpt;
  double lo_db = 0.0, hi_db = 0.0;
  double slope = 0.0;     // decades of SPER per decade of SNR
  double residual = 0.0;  // RMS residual in log10 units
  int points = 0;
};

// Least squares of log10(sper) against -snr_db/10 over rows of the given
// scheme and method in [lo_db, hi_db]. Points at or below 10 / trials are
// dropped. Throws InsufficientData when fewer than three remain.
DiversityFit diversity_slope(const std::vector<SweepResult>& rows, SchemeId scheme, double lo_db,
                             double hi_db, const std::string& method = "mc");

}  // namespace panc
