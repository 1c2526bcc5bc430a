// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional argv[1] is the path of the stimamp executable; when given,
// the determinism criterion also re-runs the real binary.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "product_space_oracle.hpp"
#include "stimamp/causality_kinematics.hpp"
#include "stimamp/cli.hpp"
#include "stimamp/ensemble_statistics.hpp"
#include "stimamp/fock_algebra.hpp"
#include "stimamp/signaling_protocol.hpp"

using namespace stimamp;

namespace {

constexpr double kExact = 1e-12;
constexpr double kMcBound = 3e-3;
constexpr double kThresholdTol = 1e-6;
constexpr std::uint64_t kMcSamples = 1000000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome closed_form_reproduction() {
  Outcome o;
  const double third = 1.0 / 3.0;
  struct Row {
    double theta;
    std::array<double, 3> distinguishable;
    std::array<double, 3> identical;
  };
  const std::vector<Row> table{
      {0.0, {2 * third, third, 0.0}, {2 * third, third, 0.0}},
      {kPi / 8, {0.5, third, 1.0 / 6}, {third, third, third}},
      {kPi / 4, {third, third, third}, {0.0, third, 2 * third}},
      {3 * kPi / 8, {0.5, third, 1.0 / 6}, {third, third, third}},
      {kPi / 2, {2 * third, third, 0.0}, {2 * third, third, 0.0}},
  };
  double worst = 0.0;
  for (const auto& row : table) {
    const PolarizationAngle t(row.theta);
    const auto d = closed_form_probs(t, Variant::Distinguishable);
    const auto i = closed_form_probs(t, Variant::Identical);
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst, std::abs(d[k] - row.distinguishable[k]));
      worst = std::max(worst, std::abs(i[k] - row.identical[k]));
    }
  }
  o.require(worst <= kExact, "max deviation " + fmt(worst));
  o.detail = o.pass ? "max deviation " + fmt(worst) : o.detail;
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 gen(1001);
  std::uniform_real_distribution<double> dist(0.0, kPi);
  double worst = 0.0, worst_product = 0.0, worst_sigma = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const double theta = dist(gen);
    const PolarizationAngle t(theta);
    for (Variant v : {Variant::Distinguishable, Variant::Identical}) {
      const auto cf = closed_form_probs(t, v);
      worst = std::max(worst, cf.max_abs_diff(first_principles_probs(t, v)));
      const auto ps = oracle::mixture_probs(theta, v == Variant::Identical);
      worst_product = std::max(worst_product, cf.max_abs_diff({ps[0], ps[1], ps[2]}));
    }
    worst_sigma = std::max(worst_sigma, std::abs(closed_form_probs(t, Variant::Distinguishable).p20 -
                                                 differential_sigma_20(t) / 1.5));
  }
  o.require(worst <= kExact, "first-principles mismatch " + fmt(worst));
  o.require(worst_product <= kExact, "product-space mismatch " + fmt(worst_product));
  o.require(worst_sigma <= kExact, "differential mismatch " + fmt(worst_sigma));
  if (o.pass) {
    o.detail = "pipeline " + fmt(worst) + ", product space " + fmt(worst_product) +
               ", sigma " + fmt(worst_sigma);
  }
  return o;
}

Outcome algebra_properties() {
  Outcome o;
  std::mt19937_64 gen(2002);
  std::uniform_real_distribution<double> dist(-2 * kPi, 2 * kPi);
  double orth = 0, homo = 0, period = 0, lift = 0;
  for (int n = 0; n < 1000; ++n) {
    const double a = dist(gen), b = dist(gen);
    const auto ua = two_photon_rotation(PolarizationAngle(a));
    const auto ub = two_photon_rotation(PolarizationAngle(b));
    orth = std::max(orth, (ua.transposed() * ua).max_abs_diff(RotationOperator3::identity()));
    homo = std::max(homo, (ua * ub).max_abs_diff(two_photon_rotation(PolarizationAngle(a + b))));
    period = std::max(period, two_photon_rotation(PolarizationAngle(a + kPi)).max_abs_diff(ua));
    lift = std::max(lift, symmetric_lift(RotationOperator2::rotation(PolarizationAngle(a))).max_abs_diff(ua));
  }
  o.require(orth <= kExact, "orthogonality " + fmt(orth));
  o.require(homo <= kExact, "homomorphism " + fmt(homo));
  o.require(period <= kExact, "periodicity " + fmt(period));
  o.require(lift <= kExact, "symmetric lift " + fmt(lift));
  if (o.pass) {
    o.detail = "orth " + fmt(orth) + ", homo " + fmt(homo) + ", period " + fmt(period) +
               ", lift " + fmt(lift);
  }
  return o;
}

Outcome monte_carlo_convergence() {
  Outcome o;
  double worst = 0.0;
  for (double theta : {0.0, kPi / 8, kPi / 4}) {
    for (Variant v : {Variant::Distinguishable, Variant::Identical}) {
      const PolarizationAngle t(theta);
      const auto first = monte_carlo_probs(t, v, kMcSamples, 20240101);
      const auto again = monte_carlo_probs(t, v, kMcSamples, 20240101);
      o.require(first.counts == again.counts, "counts differ between identical seeds");
      worst = std::max(worst, first.estimate.max_abs_diff(closed_form_probs(t, v)));
    }
  }
  o.require(worst < kMcBound, "max deviation " + fmt(worst));
  if (o.pass) o.detail = "max deviation " + fmt(worst) + " at n=1e6";
  return o;
}

Outcome protocol_behavior() {
  Outcome o;
  double worst_rate = 0.0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::mt19937_64 gen(seed * 7919);
    std::vector<int> bits(100);
    for (auto& b : bits) b = static_cast<int>(gen() & 1u);
    ProtocolConfig cfg;
    cfg.pairs_per_bit = 10000;
    cfg.seed = seed;
    worst_rate = std::max(worst_rate, transmit(cfg, bits).error_rate);
  }
  o.require(worst_rate == 0.0, "error rate " + fmt(worst_rate));

  std::mt19937_64 gen(3003);
  std::uniform_real_distribution<double> dist(-kPi, kPi);
  double worst_rho = 0.0;
  for (int n = 0; n < 1000; ++n) {
    worst_rho = std::max(worst_rho, reduced_density(PolarizationAngle(dist(gen)))
                                        .max_abs_diff(DensityMatrix2::maximally_mixed()));
  }
  o.require(worst_rho <= kExact, "reduced density " + fmt(worst_rho));

  const double gap_d = linearity_gap(PolarizationAngle(kPi / 4), Variant::Distinguishable).gap;
  const double gap_i = linearity_gap(PolarizationAngle(kPi / 4), Variant::Identical).gap;
  o.require(std::abs(gap_d + 1.0 / 3) <= kExact, "distinguishable gap " + fmt(gap_d));
  o.require(std::abs(gap_i + 2.0 / 3) <= kExact, "identical gap " + fmt(gap_i));
  if (o.pass) {
    o.detail = "error rate 0 over 5x100 bits, |rho - I/2| " + fmt(worst_rho) + ", gaps " +
               fmt(gap_d) + " / " + fmt(gap_i);
  }
  return o;
}

Outcome causality_kinematics() {
  Outcome o;
  std::mt19937_64 gen(4004);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  std::uniform_real_distribution<double> vel(-0.99, 0.99);
  double interval = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const Event e{coord(gen), coord(gen)};
    const Event b = boost(e, vel(gen));
    const double s = e.t * e.t - e.x * e.x;
    // Relative to the coordinate scale t^2 + x^2 that the subtraction cancels.
    interval = std::max(interval, std::abs((b.t * b.t - b.x * b.x) - s) /
                                      std::max(1.0, e.t * e.t + e.x * e.x));
  }
  o.require(interval <= kExact, "interval " + fmt(interval));

  double worst_threshold = 0.0;
  for (double u : {1.5, 2.0, 5.0, 10.0}) {
    const auto th = violation_threshold(u);
    if (!th) {
      o.require(false, "no threshold for u=" + fmt(u));
      continue;
    }
    worst_threshold = std::max(worst_threshold, std::abs(*th - 2 * u / (1 + u * u)));
  }
  o.require(worst_threshold <= kThresholdTol, "threshold " + fmt(worst_threshold));

  bool light_ok = true;
  double linear = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double beta = k / 100.0;
    light_ok = light_ok && !run_loop({1.0, beta, 1.0, 0.0}).violated;
    for (double u : {1.5, 3.0}) {
      const double d1 = run_loop({u, beta, 1.0, 0.0}).delta_t;
      const double d2 = run_loop({u, beta, 2.0, 0.0}).delta_t;
      linear = std::max(linear, std::abs(d2 - 2 * d1) / std::max(1.0, std::abs(d1)));
    }
  }
  o.require(light_ok, "u=1 loop violated causality");
  o.require(linear <= kExact, "L scaling " + fmt(linear));
  if (o.pass) {
    o.detail = "interval " + fmt(interval) + ", threshold " + fmt(worst_threshold) +
               ", L scaling " + fmt(linear);
  }
  return o;
}

std::string capture_process(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return out + "\n<status " + std::to_string(status) + ">";
}

Outcome cli_determinism(const std::string& exe) {
  Outcome o;
  const std::vector<std::vector<std::string>> commands{
      {"probs", "--theta", "pi/8", "--variant", "identical"},
      {"sweep", "--theta-min", "0", "--theta-max", "pi/2", "--steps", "33", "--format", "csv"},
      {"mc", "--theta", "pi/8", "--n", "200000", "--seed", "42"},
      {"mc", "--theta", "pi/4", "--variant", "identical", "--n", "200000", "--seed", "7", "--format", "csv"},
      {"protocol", "--bits", "0110", "--pairs", "10000", "--seed", "42"},
      {"causality", "--u", "2", "--beta", "0.9", "--format", "csv"},
      {"causality-scan", "--u", "1.5,2,5,10"},
  };
  for (const auto& args : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea);
    const int cb = cli::run(args, b, eb);
    o.require(ca == 0 && cb == 0, args[0] + " failed");
    o.require(a.str() == b.str() && !a.str().empty(), args[0] + " output differs");
    if (!exe.empty()) {
      std::string line = "'" + exe + "'";
      for (const auto& arg : args) line += " '" + arg + "'";
      const std::string first = capture_process(line);
      o.require(first == capture_process(line), args[0] + " binary output differs");
      o.require(first.rfind(a.str(), 0) == 0, args[0] + " binary differs from in-process run");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(commands.size()) + " commands byte-identical" +
               (exe.empty() ? " (in-process)" : " (in-process and binary)");
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 closed-form reproduction", closed_form_reproduction},
      {"2 oracle equivalence", oracle_equivalence},
      {"3 algebra properties", algebra_properties},
      {"4 monte carlo convergence", monte_carlo_convergence},
      {"5 protocol behavior", protocol_behavior},
      {"6 causality kinematics", causality_kinematics},
      {"7 cli determinism", [&] { return cli_determinism(exe); }},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << '\n';
    if (!o.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
