#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "stimamp/amplifier_channel.hpp"
#include "stimamp/causality_kinematics.hpp"
#include "stimamp/cli.hpp"
#include "stimamp/ensemble_statistics.hpp"
#include "stimamp/fock_algebra.hpp"
#include "stimamp/signaling_protocol.hpp"

namespace py = pybind11;
using namespace stimamp;

namespace {

PolarizationAngle angle(double theta) { return PolarizationAngle(theta); }

std::vector<std::vector<double>> rows(const RotationOperator3& r) {
  std::vector<std::vector<double>> out(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = r(i, j);
  return out;
}

std::vector<complex> amplitudes(const TwoPhotonState& s) { return {s.amp_20, s.amp_11, s.amp_02}; }

TwoPhotonState from_amplitudes(const std::vector<complex>& a) {
  if (a.size() != 3) throw py::value_error("two-photon state needs three amplitudes");
  return {a[0], a[1], a[2]};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Single-atom stimulated-emission amplifier, signaling protocol and causal loops";

  py::enum_<Variant>(m, "Variant")
      .value("Distinguishable", Variant::Distinguishable)
      .value("Identical", Variant::Identical);

  py::class_<ProbabilityTriple>(m, "ProbabilityTriple")
      .def_readonly("p20", &ProbabilityTriple::p20)
      .def_readonly("p11", &ProbabilityTriple::p11)
      .def_readonly("p02", &ProbabilityTriple::p02)
      .def("astuple", [](const ProbabilityTriple& p) { return py::make_tuple(p.p20, p.p11, p.p02); })
      .def("__repr__", [](const ProbabilityTriple& p) {
        std::ostringstream s;
        s.precision(17);
        s << "ProbabilityTriple(" << p.p20 << ", " << p.p11 << ", " << p.p02 << ")";
        return s.str();
      });

  py::class_<CountTriple>(m, "CountTriple")
      .def_readonly("n20", &CountTriple::n20)
      .def_readonly("n11", &CountTriple::n11)
      .def_readonly("n02", &CountTriple::n02)
      .def("total", &CountTriple::total)
      .def("__eq__", [](const CountTriple& a, const CountTriple& b) { return a == b; });

  py::class_<MonteCarloResult>(m, "MonteCarloResult")
      .def_readonly("counts", &MonteCarloResult::counts)
      .def_readonly("estimate", &MonteCarloResult::estimate)
      .def_readonly("attempts", &MonteCarloResult::attempts);

  py::class_<TransmissionReport>(m, "TransmissionReport")
      .def_readonly("sent_bits", &TransmissionReport::sent_bits)
      .def_readonly("decoded_bits", &TransmissionReport::decoded_bits)
      .def_readonly("per_bit_estimates", &TransmissionReport::per_bit_estimates)
      .def_readonly("threshold", &TransmissionReport::threshold)
      .def_readonly("error_rate", &TransmissionReport::error_rate);

  py::class_<LinearityReport>(m, "LinearityReport")
      .def_property_readonly("theta", [](const LinearityReport& r) { return r.theta.radians(); })
      .def_readonly("p_model", &LinearityReport::p_model)
      .def_readonly("p_linear", &LinearityReport::p_linear)
      .def_readonly("gap", &LinearityReport::gap);

  py::class_<Event>(m, "Event")
      .def(py::init([](double t, double x) { return Event{t, x}; }), py::arg("t"), py::arg("x"))
      .def_readonly("t", &Event::t)
      .def_readonly("x", &Event::x);

  py::class_<LoopReport>(m, "LoopReport")
      .def_readonly("emission", &LoopReport::emission)
      .def_readonly("handoff1", &LoopReport::handoff1)
      .def_readonly("relay", &LoopReport::relay)
      .def_readonly("handoff2", &LoopReport::handoff2)
      .def_readonly("arrival", &LoopReport::arrival)
      .def_readonly("delta_t", &LoopReport::delta_t)
      .def_readonly("violated", &LoopReport::violated);

  m.def("single_photon_state", [](double theta) {
    const auto s = single_photon_state(angle(theta));
    return py::make_tuple(s.amp_parallel, s.amp_perpendicular);
  });
  m.def("two_photon_rotation", [](double theta) { return rows(two_photon_rotation(angle(theta))); },
        "U(theta) as nested lists; row k is the k-th rotated basis state.");
  m.def("symmetric_lift", [](const std::vector<std::vector<double>>& r) {
    if (r.size() != 2 || r[0].size() != 2 || r[1].size() != 2) {
      throw py::value_error("expected a 2x2 matrix");
    }
    return rows(symmetric_lift(RotationOperator2({{{r[0][0], r[0][1]}, {r[1][0], r[1][1]}}})));
  });
  m.def("projection_probability", [](const std::vector<complex>& a, const std::vector<complex>& b) {
    return projection_probability(from_amplitudes(a), from_amplitudes(b));
  });

  m.def("lambda_squared",
        [](double omega, double mu, double hbar, double c) {
          return lambda_squared({omega, mu, hbar, c});
        },
        py::arg("omega") = 1.0, py::arg("mu") = 1.0, py::arg("hbar") = 1.0, py::arg("c") = 1.0);
  m.def("branch_weights", [](double theta) { return branch_weights(angle(theta)); });
  m.def("scatter", [](double theta, Variant variant) {
    const ScatteredState s = scatter(angle(theta), variant);
    py::dict d;
    d["variant"] = variant;
    d["total_weight"] = s.total_weight();
    if (variant == Variant::Distinguishable) {
      py::list branches;
      for (const auto& b : s.branches) {
        py::dict bd;
        bd["photon_state"] = amplitudes(b.photon_state);
        bd["atom"] = b.atom == AtomTag::G_theta ? "g_theta" : "g_theta_perp";
        bd["amplitude"] = b.amplitude;
        branches.append(bd);
      }
      d["branches"] = branches;
    } else {
      d["coherent"] = amplitudes(s.coherent);
    }
    return d;
  });

  m.def("differential_sigma_20", [](double theta) { return differential_sigma_20(angle(theta)); });
  m.def("closed_form_probs", [](double theta, Variant v) { return closed_form_probs(angle(theta), v); });
  m.def("first_principles_probs",
        [](double theta, Variant v) { return first_principles_probs(angle(theta), v); });
  m.def("monte_carlo_probs",
        [](double theta, Variant v, std::uint64_t n, std::uint64_t seed) {
          py::gil_scoped_release release;
          return monte_carlo_probs(angle(theta), v, n, seed);
        },
        py::arg("theta"), py::arg("variant"), py::arg("n"), py::arg("seed"));
  m.def("sweep", [](double lo, double hi, int steps, Variant v) {
    std::vector<py::tuple> out;
    for (const auto& r : sweep(lo, hi, steps, v)) {
      out.push_back(py::make_tuple(r.theta, r.probs, r.sigma20));
    }
    return out;
  });

  m.def("epr_conditional_input",
        [](double theta, std::uint64_t seed) { return epr_conditional_input(angle(theta), seed).radians(); });
  m.def("transmit",
        [](const std::vector<int>& bits, std::uint64_t pairs_per_bit, std::uint64_t seed,
           Variant variant, double theta_bit0, double theta_bit1) {
          ProtocolConfig cfg;
          cfg.theta_bit0 = angle(theta_bit0);
          cfg.theta_bit1 = angle(theta_bit1);
          cfg.pairs_per_bit = pairs_per_bit;
          cfg.seed = seed;
          cfg.variant = variant;
          py::gil_scoped_release release;
          return transmit(cfg, bits);
        },
        py::arg("bits"), py::arg("pairs_per_bit") = 10000, py::arg("seed") = 0,
        py::arg("variant") = Variant::Distinguishable, py::arg("theta_bit0") = 0.0,
        py::arg("theta_bit1") = kPi / 4.0);
  m.def("reduced_density", [](double theta) {
    const auto d = reduced_density(angle(theta));
    return std::vector<std::vector<complex>>{{d.m[0][0], d.m[0][1]}, {d.m[1][0], d.m[1][1]}};
  });
  m.def("linearity_gap", [](double theta, Variant v) { return linearity_gap(angle(theta), v); });

  m.def("boost", &boost, py::arg("event"), py::arg("beta"));
  m.def("compose_velocity", &compose_velocity, py::arg("v"), py::arg("beta"));
  m.def("run_loop",
        [](double u, double beta, double L, double ell) { return run_loop({u, beta, L, ell}); },
        py::arg("u"), py::arg("beta"), py::arg("L") = 1.0, py::arg("ell") = 0.0);
  m.def("violation_threshold", &violation_threshold, py::arg("u"), py::arg("L") = 1.0);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run a CLI command in-process; returns (exit_code, stdout, stderr).");
}
