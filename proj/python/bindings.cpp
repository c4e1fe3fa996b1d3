// Python bindings for the core library.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "panc/asymptotic.hpp"
#include "panc/coordinate_transform.hpp"
#include "panc/exact_sper.hpp"
#include "panc/experiment.hpp"
#include "panc/power_control.hpp"

namespace py = pybind11;
using namespace panc;

PYBIND11_MODULE(_panc, m) {
  m.doc() = "Power-adaptive network coding: exact and approximate SPER, power control, simulation";

  py::register_exception<DegenerateConstellation>(m, "DegenerateConstellation", PyExc_ValueError);
  py::register_exception<InsufficientData>(m, "InsufficientData", PyExc_RuntimeError);

  py::class_<ChannelRealization>(m, "Channel")
      .def(py::init<>())
      .def(py::init([](cplx h1R, cplx h2R, double h1D, double h2D, double hRD, double sigma2) {
             ChannelRealization c;
             c.h1R = h1R;
             c.h2R = h2R;
             c.h1D = h1D;
             c.h2D = h2D;
             c.hRD = hRD;
             c.sigma2 = sigma2;
             c.validate();
             return c;
           }),
           py::arg("h1R"), py::arg("h2R"), py::arg("h1D"), py::arg("h2D"), py::arg("hRD"), py::arg("sigma2"))
      .def_readwrite("h1R", &ChannelRealization::h1R)
      .def_readwrite("h2R", &ChannelRealization::h2R)
      .def_readwrite("h1D", &ChannelRealization::h1D)
      .def_readwrite("h2D", &ChannelRealization::h2D)
      .def_readwrite("hRD", &ChannelRealization::hRD)
      .def_readwrite("E1", &ChannelRealization::E1)
      .def_readwrite("E2", &ChannelRealization::E2)
      .def_readwrite("sigma2", &ChannelRealization::sigma2);

  py::class_<PowerPair>(m, "PowerPair")
      .def(py::init<>())
      .def_readwrite("a", &PowerPair::a)
      .def_readwrite("b", &PowerPair::b)
      .def_readwrite("alpha", &PowerPair::alpha)
      .def_readwrite("ER_ave", &PowerPair::ER_ave)
      .def_readonly("clamped", &PowerPair::clamped);

  m.def("q1", &q1, py::arg("x"));
  m.def("q2", &q2, py::arg("x"), py::arg("rho"));
  m.def("p_w1", &p_w1, py::arg("d"), py::arg("phi1"), py::arg("phi2"));
  m.def("scaling_factor", [](const ChannelRealization& ch, double ER) { return scaling_factor(link_snrs(ch, ER)); },
        py::arg("channel"), py::arg("ER") = 1.0);
  m.def("optimize_powers_exact", &optimize_powers_exact, py::arg("channel"), py::arg("ER") = 1.0);
  m.def("optimize_powers_ct", &optimize_powers_ct, py::arg("channel"), py::arg("ER") = 1.0);
  m.def("sper_exact", [](const ChannelRealization& ch, const PowerPair& p) { return sper_exact(ch, p).total; },
        py::arg("channel"), py::arg("powers"));
  m.def("sper_ct", [](const ChannelRealization& ch, const PowerPair& p) { return sper_ct(ch, p).total; },
        py::arg("channel"), py::arg("powers"));
  m.def("relay_level_probs",
        [](const ChannelRealization& ch) { return relay_level_probs(build_irc(ch), ch.sigma2).p; },
        py::arg("channel"));
  m.def("q_average_coefficient", &q_average_coefficient, py::arg("gammas"));
  m.def("q_average_exact", &q_average_exact, py::arg("gammas"), py::arg("rho"));

  m.def("scheme_names", [] {
    std::vector<std::string> out;
    for (SchemeId s : kAllSchemes) out.push_back(scheme_name(s));
    return out;
  });

  // Returns a list of dicts with the CSV columns.
  m.def(
      "sweep",
      [](const std::string& preset_name, std::vector<double> snr_db, std::vector<std::string> schemes,
         std::uint64_t channels, std::uint64_t symbols, std::uint64_t seed, bool exact, bool ct,
         std::uint64_t analytic_channels) {
        ExperimentConfig c = preset(preset_name);
        if (!snr_db.empty()) c.snr_db = std::move(snr_db);
        if (!schemes.empty()) {
          c.schemes.clear();
          for (const auto& s : schemes) c.schemes.push_back(parse_scheme(s));
        }
        c.channels = channels;
        c.symbols = symbols;
        c.seed = seed;
        c.exact = exact;
        c.ct = ct;
        c.analytic_channels = analytic_channels;
        SweepOutput out;
        {
          py::gil_scoped_release release;
          out = run_sweep(c.to_mc());
        }
        py::list rows;
        for (const auto& r : out.rows) {
          py::dict d;
          d["snr_db"] = r.snr_db;
          d["scheme"] = scheme_name(r.scheme);
          d["method"] = r.method;
          d["sper"] = r.sper;
          d["ci95"] = r.ci95;
          d["trials"] = r.trials;
          d["seed"] = r.seed;
          rows.append(d);
        }
        return rows;
      },
      py::arg("preset") = "symmetric", py::arg("snr_db") = std::vector<double>{},
      py::arg("schemes") = std::vector<std::string>{}, py::arg("channels") = 1000, py::arg("symbols") = 100,
      py::arg("seed") = 1, py::arg("exact") = false, py::arg("ct") = false, py::arg("analytic_channels") = 100);

  m.def("config_text", [](const std::string& name) { return to_text(preset(name)); }, py::arg("preset"));
}
