#pragma once
// Experiment configuration, presets, and CSV / plot-script output.

#include <string>
#include <vector>

#include "panc/monte_carlo.hpp"

namespace panc {

struct ExperimentConfig {
  std::string name = "symmetric";
  NodeGeometry geometry;
  std::vector<double> snr_db;
  std::vector<SchemeId> schemes;
  std::uint64_t channels = 10000;
  std::uint64_t symbols = 1000;
  std::uint64_t seed = 1;
  double ER = 1.0;
  bool exact = true;
  bool ct = true;
  std::uint64_t analytic_channels = 500;
  int threads = 0;
  std::string out = "panc_sweep.csv";

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  McConfig to_mc() const;
};

// strong_sr, symmetric, strong_rd. Throws std::invalid_argument otherwise.
ExperimentConfig preset(const std::string& name);
std::vector<std::string> preset_names();

// key = value lines; '#' starts a comment. Unknown keys are rejected.
std::string to_text(const ExperimentConfig& c);
ExperimentConfig from_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

// "0:2:30" (inclusive range) or "0,5,10".
std::vector<double> parse_snr_list(const std::string& s);
std::vector<SchemeId> parse_scheme_list(const std::string& s);

std::string csv_header();
std::string csv_text(const std::vector<SweepResult>& rows);
std::vector<SweepResult> parse_csv(const std::string& text);
std::string gnuplot_script(const std::string& csv_path, const std::vector<SweepResult>& rows);

struct RunArtifacts {
  SweepOutput output;
  std::string csv_path;
  std::string script_path;
};

// Runs the sweep and writes the CSV plus a gnuplot script next to it.
RunArtifacts run(const ExperimentConfig& cfg);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace panc
