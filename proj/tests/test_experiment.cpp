#include <doctest.h>

#include <filesystem>

#include "panc/experiment.hpp"

using namespace panc;

namespace {

std::filesystem::path scratch_dir() {
  auto p = std::filesystem::temp_directory_path() / "panc_unit_tests";
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("presets place the relay") {
  CHECK(preset("symmetric").geometry.R.x == doctest::Approx(1.0 / 3.0));
  CHECK(preset("strong_rd").geometry.R.x == doctest::Approx(0.8));
  const ExperimentConfig s = preset("strong_sr");
  CHECK(dist(s.geometry.S1, s.geometry.R) == doctest::Approx(std::sqrt(3.0) / 3.0));
  CHECK(s.snr_db.size() == 16);
  CHECK_THROWS_AS(preset("nowhere"), std::invalid_argument);
  CHECK(preset_names().size() == 3);
}

TEST_CASE("configuration text round-trips") {
  ExperimentConfig c = preset("strong_rd");
  c.seed = 987654321;
  c.ER = 0.7071067811865476;
  c.geometry.R = {0.123456789012345, -0.1};
  c.snr_db = {1.5, 2.25, 17.0};
  c.schemes = {SchemeId::Genie, SchemeId::OriginOptNoAlpha};
  c.exact = false;
  c.threads = 3;
  c.out = "some/where.csv";
  const ExperimentConfig d = from_text(to_text(c));
  CHECK(to_text(d) == to_text(c));
  CHECK(d.geometry.R.x == c.geometry.R.x);
  CHECK(d.ER == c.ER);
  CHECK(d.snr_db == c.snr_db);
  CHECK(d.schemes == c.schemes);
  CHECK(d.exact == false);
}

TEST_CASE("configuration parse errors") {
  CHECK_THROWS_AS(from_text("colour = blue\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("seed = -3\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("ER = abc\n"), std::invalid_argument);
  CHECK_THROWS_AS(from_text("just words\n"), std::invalid_argument);
  CHECK(from_text("# comment only\n\nseed = 4 # trailing\n").seed == 4);
  ExperimentConfig e = preset("symmetric");
  e.schemes.clear();
  CHECK_THROWS_AS(e.validate(), std::invalid_argument);
}

TEST_CASE("SNR lists") {
  CHECK(parse_snr_list("0:2:30").size() == 16);
  CHECK(parse_snr_list("0:2:30").back() == 30.0);
  CHECK(parse_snr_list("5, 10,20") == std::vector<double>{5.0, 10.0, 20.0});
  CHECK_THROWS_AS(parse_snr_list("0:0:10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_snr_list("1:2"), std::invalid_argument);
}

TEST_CASE("runs write a CSV and a plot script, byte-identical across repeats") {
  const auto dir = scratch_dir();
  ExperimentConfig c = preset("symmetric");
  c.snr_db = {0.0, 10.0, 20.0};
  c.schemes = {SchemeId::OriginOpt, SchemeId::Fixed};
  c.channels = 40;
  c.symbols = 20;
  c.analytic_channels = 4;
  c.threads = 2;
  c.out = (dir / "run_a.csv").string();
  const RunArtifacts a = run(c);
  const std::string first = read_file(a.csv_path);
  c.threads = 1;
  run(c);
  CHECK(read_file(a.csv_path) == first);

  const auto rows = parse_csv(first);
  CHECK(rows.size() == 3 * 2 * 3);
  CHECK(first.rfind(csv_header(), 0) == 0);
  const std::string gp = read_file(a.script_path);
  CHECK(a.script_path == (dir / "run_a.gp").string());
  CHECK(gp.find("set logscale y") != std::string::npos);
  CHECK(gp.find(a.csv_path) != std::string::npos);
  CHECK(gp.find("'Fixed ct'") != std::string::npos);

  c.ct = false;
  c.exact = false;
  CHECK(run(c).output.rows.size() == 3 * 2);
}

TEST_CASE("I/O errors name the path") {
  try {
    read_file("/nonexistent/dir/x.csv");
    FAIL("expected an exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("/nonexistent/dir/x.csv") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_csv("wrong,header\n"), std::invalid_argument);
}
