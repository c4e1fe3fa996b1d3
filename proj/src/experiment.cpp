#include "panc/experiment.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>

namespace panc {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad number for " + what + ": '" + s + "'");
  }
}

std::uint64_t to_u64(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("config: bad integer for " + what + ": '" + s + "'");
  return std::stoull(s);
}

bool to_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw std::invalid_argument("config: bad boolean for " + what + ": '" + s + "'");
}

std::string point(const Vec2& v) { return fmt("%.17g", v.x) + "," + fmt("%.17g", v.y); }

Vec2 to_point(const std::string& s, const std::string& what) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw std::invalid_argument("config: " + what + " needs 'x,y'");
  return {to_double(parts[0], what), to_double(parts[1], what)};
}

}  // namespace

void ExperimentConfig::validate() const {
  to_mc().validate();
  if (out.empty()) throw std::invalid_argument("config: empty output path");
}

McConfig ExperimentConfig::to_mc() const {
  McConfig m;
  m.geometry = geometry;
  m.snr_db = snr_db;
  m.schemes = schemes;
  m.channels = channels;
  m.symbols = symbols;
  m.seed = seed;
  m.ER = ER;
  m.exact = exact;
  m.ct = ct;
  m.analytic_channels = analytic_channels;
  m.threads = threads;
  return m;
}

std::vector<std::string> preset_names() { return {"strong_sr", "symmetric", "strong_rd"}; }

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig c;
  c.name = name;
  if (name == "strong_sr") c.geometry.R = {0.0, 0.0};
  else if (name == "symmetric") c.geometry.R = {1.0 / 3.0, 0.0};
  else if (name == "strong_rd") c.geometry.R = {0.8, 0.0};
  else throw std::invalid_argument("unknown preset '" + name + "'");
  for (int s = 0; s <= 30; s += 2) c.snr_db.push_back(s);
  c.schemes = {SchemeId::OriginOpt, SchemeId::CtOpt, SchemeId::Random,   SchemeId::Fixed,
               SchemeId::Genie,     SchemeId::CXNC,  SchemeId::CXNCAlpha};
  c.out = name + ".csv";
  return c;
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "name = " << c.name << "\n";
  os << "S1 = " << point(c.geometry.S1) << "\n";
  os << "S2 = " << point(c.geometry.S2) << "\n";
  os << "R = " << point(c.geometry.R) << "\n";
  os << "D = " << point(c.geometry.D) << "\n";
  os << "pathloss_exponent = " << fmt("%.17g", c.geometry.pathloss_exponent) << "\n";
  os << "snr_db = ";
  for (std::size_t i = 0; i < c.snr_db.size(); ++i) os << (i ? "," : "") << fmt("%.17g", c.snr_db[i]);
  os << "\nschemes = ";
  for (std::size_t i = 0; i < c.schemes.size(); ++i) os << (i ? "," : "") << scheme_name(c.schemes[i]);
  os << "\nchannels = " << c.channels << "\n";
  os << "symbols = " << c.symbols << "\n";
  os << "seed = " << c.seed << "\n";
  os << "ER = " << fmt("%.17g", c.ER) << "\n";
  os << "exact = " << (c.exact ? "true" : "false") << "\n";
  os << "ct = " << (c.ct ? "true" : "false") << "\n";
  os << "analytic_channels = " << c.analytic_channels << "\n";
  os << "threads = " << c.threads << "\n";
  os << "out = " << c.out << "\n";
  return os.str();
}

ExperimentConfig from_text(const std::string& text) {
  ExperimentConfig c = preset("symmetric");
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
    if (k == "name") c.name = v;
    else if (k == "S1") c.geometry.S1 = to_point(v, k);
    else if (k == "S2") c.geometry.S2 = to_point(v, k);
    else if (k == "R") c.geometry.R = to_point(v, k);
    else if (k == "D") c.geometry.D = to_point(v, k);
    else if (k == "pathloss_exponent") c.geometry.pathloss_exponent = to_double(v, k);
    else if (k == "snr_db") c.snr_db = parse_snr_list(v);
    else if (k == "schemes") c.schemes = parse_scheme_list(v);
    else if (k == "channels") c.channels = to_u64(v, k);
    else if (k == "symbols") c.symbols = to_u64(v, k);
    else if (k == "seed") c.seed = to_u64(v, k);
    else if (k == "ER") c.ER = to_double(v, k);
    else if (k == "exact") c.exact = to_bool(v, k);
    else if (k == "ct") c.ct = to_bool(v, k);
    else if (k == "analytic_channels") c.analytic_channels = to_u64(v, k);
    else if (k == "threads") c.threads = static_cast<int>(to_u64(v, k));
    else if (k == "out") c.out = v;
    else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + k + "'");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) { return from_text(read_file(path)); }

std::vector<double> parse_snr_list(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto p = split(s, ':');
    if (p.size() != 3) throw std::invalid_argument("snr range must be start:step:stop");
    const double a = to_double(p[0], "snr"), st = to_double(p[1], "snr"), b = to_double(p[2], "snr");
    if (!(st > 0.0)) throw std::invalid_argument("snr step must be > 0");
    const int n = static_cast<int>(std::floor((b - a) / st + 1e-9));
    for (int i = 0; i <= n; ++i) out.push_back(a + i * st);
  } else {
    for (const auto& t : split(s, ','))
      if (!t.empty()) out.push_back(to_double(t, "snr"));
  }
  return out;
}

std::vector<SchemeId> parse_scheme_list(const std::string& s) {
  std::vector<SchemeId> out;
  for (const auto& t : split(s, ','))
    if (!t.empty()) out.push_back(parse_scheme(t));
  return out;
}

std::string csv_header() { return "snr_db,scheme,method,sper,ci95,trials,seed"; }

std::string csv_text(const std::vector<SweepResult>& rows) {
  std::ostringstream os;
  os << csv_header() << "\n";
  for (const auto& r : rows)
    os << fmt("%.10g", r.snr_db) << "," << scheme_name(r.scheme) << "," << r.method << ","
       << fmt("%.10g", r.sper) << "," << fmt("%.10g", r.ci95) << "," << r.trials << "," << r.seed << "\n";
  return os.str();
}

std::vector<SweepResult> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || trim(line) != csv_header())
    throw std::invalid_argument("csv: missing or unexpected header");
  std::vector<SweepResult> rows;
  while (std::getline(is, line)) {
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw std::invalid_argument("csv: expected 7 fields in '" + line + "'");
    SweepResult r;
    r.snr_db = to_double(f[0], "snr_db");
    r.scheme = parse_scheme(f[1]);
    r.method = f[2];
    r.sper = f[3] == "nan" ? std::nan("") : to_double(f[3], "sper");
    r.ci95 = f[4] == "nan" ? std::nan("") : to_double(f[4], "ci95");
    r.trials = to_u64(f[5], "trials");
    r.seed = to_u64(f[6], "seed");
    rows.push_back(r);
  }
  return rows;
}

std::string gnuplot_script(const std::string& csv_path, const std::vector<SweepResult>& rows) {
  std::set<std::pair<std::string, std::string>> curves;
  for (const auto& r : rows) curves.insert({scheme_name(r.scheme), r.method});
  std::ostringstream os;
  os << "set datafile separator ','\n"
     << "set logscale y\n"
     << "set format y '10^{%L}'\n"
     << "set xlabel 'SNR (dB)'\n"
     << "set ylabel 'SPER'\n"
     << "set key outside right\n"
     << "set grid\n"
     << "file = '" << csv_path << "'\n"
     << "plot \\\n";
  std::size_t i = 0;
  for (const auto& [scheme, method] : curves) {
    os << "  file skip 1 using 1:((strcol(2) eq '" << scheme << "' && strcol(3) eq '" << method
       << "') ? $4 : 1/0) with linespoints title '" << scheme << " " << method << "'";
    os << (++i < curves.size() ? ", \\\n" : "\n");
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "': " + std::strerror(errno));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "': " + std::strerror(errno));
  out << content;
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

RunArtifacts run(const ExperimentConfig& cfg) {
  cfg.validate();
  RunArtifacts a;
  a.output = run_sweep(cfg.to_mc());
  a.csv_path = cfg.out;
  const auto dot = a.csv_path.rfind('.');
  const auto slash = a.csv_path.rfind('/');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  a.script_path = (has_ext ? a.csv_path.substr(0, dot) : a.csv_path) + ".gp";
  write_file(a.csv_path, csv_text(a.output.rows));
  write_file(a.script_path, gnuplot_script(a.csv_path, a.output.rows));
  return a;
}

}  // namespace panc
