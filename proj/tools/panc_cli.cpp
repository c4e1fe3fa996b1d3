// Command-line front end: sweeps, quick oracle checks, power optimization,
// slope analysis and constellation dumps.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "panc/asymptotic.hpp"
#include "panc/coordinate_transform.hpp"
#include "panc/exact_sper.hpp"
#include "panc/experiment.hpp"
#include "panc/power_control.hpp"

using namespace panc;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct ChannelArgs {
  std::vector<double> h1R{1.0, 0.0}, h2R{0.0, 1.0};
  double h1D = 1.0, h2D = 1.0, hRD = 1.0, snr_db = 10.0;

  void add(CLI::App* app) {
    app->add_option("--h1R", h1R, "source 1 to relay gain (re im)")->expected(2);
    app->add_option("--h2R", h2R, "source 2 to relay gain (re im)")->expected(2);
    app->add_option("--h1D", h1D, "|source 1 to destination gain|");
    app->add_option("--h2D", h2D, "|source 2 to destination gain|");
    app->add_option("--hRD", hRD, "|relay to destination gain|");
    app->add_option("--snr", snr_db, "reference SNR in dB");
  }
  ChannelRealization get() const {
    ChannelRealization ch;
    ch.h1R = {h1R[0], h1R[1]};
    ch.h2R = {h2R[0], h2R[1]};
    ch.h1D = h1D;
    ch.h2D = h2D;
    ch.hRD = hRD;
    ch.sigma2 = std::pow(10.0, -snr_db / 10.0);
    ch.validate();
    return ch;
  }
};

void report(bool ok, const std::string& what, int& failures) {
  std::printf("%s %s\n", ok ? "PASS" : "FAIL", what.c_str());
  if (!ok) ++failures;
}

// Reduced oracle suite; the full set lives in the acceptance binary.
int run_validate(std::uint64_t seed, int draws) {
  int failures = 0;
  NodeGeometry geo;
  double worst_cell = 0.0, worst_row = 0.0, worst_side = 0.0, worst_opt = 0.0;
  for (int d = 0; d < draws; ++d) {
    CounterRng rng(seed, static_cast<std::uint64_t>(d));
    ChannelRealization ch = sample_channels(geo, rng);
    ch.sigma2 = std::pow(10.0, -rng.uniform0() * 2.5);
    const Constellation irc = build_irc(ch);
    const RelayLevelDistribution rel = relay_level_probs(irc, ch.sigma2);
    worst_row = std::max(worst_row, rel.max_row_defect());
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        const auto o = gaussian_region_prob({irc.V[i], Mat2::diag(0.5 * ch.sigma2, 0.5 * ch.sigma2)},
                                            voronoi_cell(irc, k));
        worst_cell = std::max(worst_cell, std::fabs(o.p - rel.p[i][k]));
      }
    const CtTransform t = ct_relay(ch);
    for (int j : {1, 2})
      worst_side = std::max(worst_side, std::fabs(dist(t.Vbar[0], t.Vbar[j]) - dist(irc.V[0], irc.V[j])) /
                                            dist(irc.V[0], irc.V[j]));
    const PowerPair p = optimize_powers_ct(ch, 1.0);
    const PowerPair q = grid_oracle(ch, 1.0, Objective::CtMinEdge, 256);
    worst_opt = std::max(worst_opt, 1.0 - objective_value(ch, p.a, p.b, Objective::CtMinEdge) /
                                              objective_value(ch, q.a, q.b, Objective::CtMinEdge));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "relay cells vs quadrature: max |diff| = %.3g (tol 1e-7)", worst_cell);
  report(worst_cell <= 1e-7, buf, failures);
  std::snprintf(buf, sizeof buf, "relay rows sum to one: max defect = %.3g (tol 1e-7)", worst_row);
  report(worst_row <= 1e-7, buf, failures);
  std::snprintf(buf, sizeof buf, "rectangle transform side lengths preserved: max rel err = %.3g (tol 1e-9)",
                worst_side);
  report(worst_side <= 1e-9, buf, failures);
  std::snprintf(buf, sizeof buf, "rectangle-edge power closed form vs grid: max shortfall = %.3g (tol 1e-3)",
                worst_opt);
  report(worst_opt <= 1e-3, buf, failures);
  return failures == 0 ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power-adaptive network coding simulator"};
  app.require_subcommand(1);

  std::string preset_name = "symmetric", config_path, snr_list, scheme_list, out, trials;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = -1;
  bool no_exact = false, no_ct = false;
  std::int64_t analytic_channels = -1;

  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep with analytic overlays");
  sweep->add_option("--preset", preset_name, "strong_sr | symmetric | strong_rd");
  sweep->add_option("--config", config_path, "key = value configuration file");
  sweep->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_set = true; });
  sweep->add_option("--trials", trials, "CHANNELSxSYMBOLS, e.g. 10000x1000");
  sweep->add_option("--snr", snr_list, "start:step:stop or comma list (dB)");
  sweep->add_option("--schemes", scheme_list, "comma-separated scheme names");
  sweep->add_option("--out", out, "CSV output path");
  sweep->add_option("--threads", threads, "worker threads (0 = all cores)");
  sweep->add_option("--analytic-channels", analytic_channels, "channels used for analytic averages");
  sweep->add_flag("--no-exact", no_exact, "skip the exact analytic overlay");
  sweep->add_flag("--no-ct", no_ct, "skip the rectangle-transform overlay");

  int validate_draws = 50;
  std::uint64_t validate_seed = 7;
  auto* validate = app.add_subcommand("validate", "Quick oracle checks");
  validate->add_option("--draws", validate_draws, "random channel draws");
  validate->add_option("--seed", validate_seed, "random seed");

  ChannelArgs opt_ch;
  int resolution = 1024;
  double ER = 1.0;
  auto* optimize = app.add_subcommand("optimize", "Relay power levels for one channel");
  opt_ch.add(optimize);
  optimize->add_option("--ER", ER, "average relay energy");
  optimize->add_option("--resolution", resolution, "grid oracle resolution (>= 256)");

  std::string csv_path, method = "mc";
  double lo_db = 20.0, hi_db = 30.0;
  auto* analyze = app.add_subcommand("analyze", "Diversity slopes from a sweep CSV");
  analyze->add_option("--csv", csv_path, "sweep CSV")->required();
  analyze->add_option("--lo", lo_db, "window start (dB)");
  analyze->add_option("--hi", hi_db, "window end (dB)");
  analyze->add_option("--method", method, "mc | exact | ct");

  ChannelArgs geo_ch;
  double ga = 1.0, gb = 1.0, galpha = 1.0;
  auto* geometry = app.add_subcommand("geometry-dump", "Relay and destination constellations");
  geo_ch.add(geometry);
  geometry->add_option("--a", ga, "relay level a");
  geometry->add_option("--b", gb, "relay level b");
  geometry->add_option("--alpha", galpha, "power scaling factor");

  bool print_defaults = false;
  auto* config = app.add_subcommand("config", "Configuration helpers");
  config->add_flag("--print-defaults", print_defaults, "print the default configuration");
  config->add_option("--preset", preset_name, "preset to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitValidation;
  }

  try {
    if (*sweep) {
      ExperimentConfig cfg = config_path.empty() ? preset(preset_name) : load_config(config_path);
      if (seed_set) cfg.seed = seed;
      if (!trials.empty()) {
        const auto x = trials.find('x');
        if (x == std::string::npos) throw std::invalid_argument("--trials must look like 10000x1000");
        cfg.channels = std::stoull(trials.substr(0, x));
        cfg.symbols = std::stoull(trials.substr(x + 1));
      }
      if (!snr_list.empty()) cfg.snr_db = parse_snr_list(snr_list);
      if (sweep->count("--schemes")) cfg.schemes = parse_scheme_list(scheme_list);
      if (!out.empty()) cfg.out = out;
      if (threads >= 0) cfg.threads = threads;
      if (analytic_channels >= 0) cfg.analytic_channels = static_cast<std::uint64_t>(analytic_channels);
      if (no_exact) cfg.exact = false;
      if (no_ct) cfg.ct = false;
      const RunArtifacts a = run(cfg);
      std::printf("wrote %s (%zu rows) and %s\n", a.csv_path.c_str(), a.output.rows.size(),
                  a.script_path.c_str());
      if (a.output.analytic_skipped)
        std::printf("note: %llu channels skipped in analytic averages (degenerate constellation)\n",
                    static_cast<unsigned long long>(a.output.analytic_skipped));
      return 0;
    }
    if (*validate) return run_validate(validate_seed, validate_draws);
    if (*optimize) {
      const ChannelRealization ch = opt_ch.get();
      const PowerPair pe = optimize_powers_exact(ch, ER), pc = optimize_powers_ct(ch, ER);
      const PowerPair oe = grid_oracle(ch, ER, Objective::ExactMinPair, resolution);
      const PowerPair oc = grid_oracle(ch, ER, Objective::CtMinEdge, resolution);
      const double alpha = scaling_factor(link_snrs(ch, ER));
      auto line = [&](const char* label, const PowerPair& p, Objective o) {
        std::printf("%-22s a=% .6f b=% .6f objective=%.6f%s\n", label, p.a, p.b,
                    objective_value(ch, p.a, p.b, o), p.clamped ? " (clamped)" : "");
      };
      line("closed form (all):", pe, Objective::ExactMinPair);
      line("grid oracle (all):", oe, Objective::ExactMinPair);
      line("closed form (edges):", pc, Objective::CtMinEdge);
      line("grid oracle (edges):", oc, Objective::CtMinEdge);
      std::printf("alpha = %.6f\n", alpha);
      return 0;
    }
    if (*analyze) {
      const auto rows = parse_csv(read_file(csv_path));
      std::vector<SchemeId> seen;
      for (const auto& r : rows)
        if (std::find(seen.begin(), seen.end(), r.scheme) == seen.end()) seen.push_back(r.scheme);
      for (SchemeId s : seen) {
        try {
          const DiversityFit f = diversity_slope(rows, s, lo_db, hi_db, method);
          std::printf("%-18s slope=%.3f residual=%.3g points=%d\n", scheme_name(s).c_str(), f.slope,
                      f.residual, f.points);
        } catch (const InsufficientData& e) {
          std::printf("%-18s insufficient data\n", scheme_name(s).c_str());
        }
      }
      return 0;
    }
    if (*geometry) {
      const ChannelRealization ch = geo_ch.get();
      PowerPair p;
      p.a = ga;
      p.b = gb;
      p.alpha = galpha;
      std::printf("# relay constellation\n%s", describe(build_irc(ch)).c_str());
      std::printf("# destination constellation\n%s", describe(build_idc(ch, p)).c_str());
      return 0;
    }
    if (*config) {
      if (!print_defaults) throw std::invalid_argument("config: nothing to do (use --print-defaults)");
      std::cout << to_text(preset(preset_name));
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntime;
  }
  return 0;
}
