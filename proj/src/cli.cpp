#include "stimamp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "stimamp/amplifier_channel.hpp"
#include "stimamp/causality_kinematics.hpp"
#include "stimamp/ensemble_statistics.hpp"
#include "stimamp/output.hpp"
#include "stimamp/signaling_protocol.hpp"

namespace stimamp::cli {

namespace {

// Oracle mismatch above which `probs` reports a consistency failure.
constexpr double kOracleTolerance = 1e-9;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

double parse_decimal(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value)) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

struct CommonOptions {
  std::string format = "json";
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write the document to PATH instead of stdout");
}

int emit(const OutputRecord& record, const CommonOptions& opts, std::ostream& out,
         std::ostream& err) {
  std::ostringstream buffer;
  write_record(record, parse_format(opts.format), buffer);
  if (opts.out_path.empty()) {
    out << buffer.str();
    return kSuccess;
  }
  std::ofstream file(opts.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << opts.out_path << "' for writing\n";
    return kIoError;
  }
  file << buffer.str();
  file.flush();
  if (!file) {
    err << "error: failed writing '" << opts.out_path << "'\n";
    return kIoError;
  }
  return kSuccess;
}

// --- probs ------------------------------------------------------------------

struct ProbsArgs {
  std::string theta = "0";
  std::string variant = "distinguishable";
  CommonOptions common;
};

int cmd_probs(const ProbsArgs& a, std::ostream& out, std::ostream& err) {
  const double theta_rad = parse_angle_literal(a.theta);
  const Variant variant = parse_variant(a.variant);
  const PolarizationAngle theta(theta_rad);

  const ProbabilityTriple cf = closed_form_probs(theta, variant);
  const ProbabilityTriple fp = first_principles_probs(theta, variant);
  const double discrepancy = cf.max_abs_diff(fp);

  OutputRecord rec;
  rec.command = "probs";
  rec.parameters = {{"theta", a.theta}, {"theta_rad", theta_rad}, {"variant", a.variant}};
  rec.columns = {"theta_rad", "variant", "p20", "p11", "p02",
                 "fp_p20", "fp_p11", "fp_p02", "max_discrepancy", "sigma20_per_lambda2"};
  rec.add_row({{"theta_rad", theta_rad}, {"variant", a.variant}, {"p20", cf.p20},
               {"p11", cf.p11}, {"p02", cf.p02}, {"fp_p20", fp.p20}, {"fp_p11", fp.p11},
               {"fp_p02", fp.p02}, {"max_discrepancy", discrepancy},
               {"sigma20_per_lambda2", differential_sigma_20(theta)}});
  rec.summary = {{"oracle_tolerance", kOracleTolerance},
                 {"consistent", discrepancy <= kOracleTolerance}};

  const int rc = emit(rec, a.common, out, err);
  if (rc != kSuccess) return rc;
  if (discrepancy > kOracleTolerance) {
    err << "error: closed form and first-principles results differ by " << discrepancy << '\n';
    return kConsistencyFailure;
  }
  return kSuccess;
}

// --- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string theta_min = "0";
  std::string theta_max = "pi/2";
  int steps = 9;
  std::string variant = "distinguishable";
  CommonOptions common;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const double lo = parse_angle_literal(a.theta_min);
  const double hi = parse_angle_literal(a.theta_max);
  const Variant variant = parse_variant(a.variant);
  if (a.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(lo < hi)) throw UsageError("--theta-min must be below --theta-max");

  OutputRecord rec;
  rec.command = "sweep";
  rec.parameters = {{"theta_min", a.theta_min}, {"theta_max", a.theta_max},
                    {"steps", a.steps}, {"variant", a.variant}};
  rec.columns = {"theta_rad", "p20", "p11", "p02", "sigma20_per_lambda2"};
  for (const auto& row : sweep(lo, hi, a.steps, variant)) {
    rec.add_row({{"theta_rad", row.theta}, {"p20", row.probs.p20}, {"p11", row.probs.p11},
                 {"p02", row.probs.p02}, {"sigma20_per_lambda2", row.sigma20}});
  }
  return emit(rec, a.common, out, err);
}

// --- mc ---------------------------------------------------------------------

struct McArgs {
  std::string theta = "0";
  std::string variant = "distinguishable";
  long long n = 1000000;
  std::uint64_t seed = 42;
  CommonOptions common;
};

int cmd_mc(const McArgs& a, std::ostream& out, std::ostream& err) {
  const double theta_rad = parse_angle_literal(a.theta);
  const Variant variant = parse_variant(a.variant);
  if (a.n < 1) throw UsageError("--n must be at least 1");
  const PolarizationAngle theta(theta_rad);

  const MonteCarloResult mc =
      monte_carlo_probs(theta, variant, static_cast<std::uint64_t>(a.n), a.seed);
  const ProbabilityTriple ref = closed_form_probs(theta, variant);

  OutputRecord rec;
  rec.command = "mc";
  rec.parameters = {{"theta", a.theta}, {"theta_rad", theta_rad}, {"variant", a.variant},
                    {"n", a.n}, {"seed", a.seed}};
  rec.columns = {"outcome", "count", "estimate", "closed_form", "deviation"};
  const std::array<const char*, 3> names{"2,0", "1,1", "0,2"};
  const std::array<std::uint64_t, 3> counts{mc.counts.n20, mc.counts.n11, mc.counts.n02};
  for (int k = 0; k < 3; ++k) {
    rec.add_row({{"outcome", names[k]}, {"count", counts[k]}, {"estimate", mc.estimate[k]},
                 {"closed_form", ref[k]}, {"deviation", mc.estimate[k] - ref[k]}});
  }
  rec.summary = {{"two_photon_outcomes", mc.counts.total()},
                 {"shots", mc.attempts},
                 {"max_abs_deviation", mc.estimate.max_abs_diff(ref)}};
  return emit(rec, a.common, out, err);
}

// --- protocol ---------------------------------------------------------------

struct ProtocolArgs {
  std::string bits;
  long long pairs = 10000;
  std::uint64_t seed = 42;
  std::string variant = "distinguishable";
  std::string theta0 = "0";
  std::string theta1 = "pi/4";
  CommonOptions common;
};

int cmd_protocol(const ProtocolArgs& a, std::ostream& out, std::ostream& err) {
  if (a.bits.empty()) throw UsageError("--bits must be a nonempty string over {0,1}");
  std::vector<int> bits;
  for (char c : a.bits) {
    if (c != '0' && c != '1') throw UsageError("--bits must contain only 0 and 1");
    bits.push_back(c - '0');
  }
  if (a.pairs < 1) throw UsageError("--pairs must be at least 1");

  ProtocolConfig cfg;
  cfg.theta_bit0 = PolarizationAngle(parse_angle_literal(a.theta0));
  cfg.theta_bit1 = PolarizationAngle(parse_angle_literal(a.theta1));
  cfg.pairs_per_bit = static_cast<std::uint64_t>(a.pairs);
  cfg.variant = parse_variant(a.variant);
  cfg.seed = a.seed;

  const TransmissionReport report = transmit(cfg, bits);

  OutputRecord rec;
  rec.command = "protocol";
  rec.parameters = {{"bits", a.bits},     {"pairs_per_bit", a.pairs},
                    {"seed", a.seed},     {"variant", a.variant},
                    {"theta_bit0", a.theta0}, {"theta_bit1", a.theta1}};
  rec.columns = {"index", "sent", "decoded", "p20_estimate"};
  for (std::size_t i = 0; i < bits.size(); ++i) {
    rec.add_row({{"index", i}, {"sent", report.sent_bits[i]},
                 {"decoded", report.decoded_bits[i]},
                 {"p20_estimate", report.per_bit_estimates[i]}});
  }
  rec.summary["error_rate"] = report.error_rate;
  rec.summary["threshold"] = report.threshold;
  const std::array<std::pair<const char*, PolarizationAngle>, 2> symbols{
      {{"bit0", cfg.theta_bit0}, {"bit1", cfg.theta_bit1}}};
  for (const auto& [label, angle] : symbols) {
    const LinearityReport lin = linearity_gap(angle, cfg.variant);
    const std::string prefix = std::string("linearity_") + label + "_";
    rec.summary[prefix + "theta_rad"] = lin.theta.radians();
    rec.summary[prefix + "p_model"] = lin.p_model;
    rec.summary[prefix + "p_linear"] = lin.p_linear;
    rec.summary[prefix + "gap"] = lin.gap;
  }
  return emit(rec, a.common, out, err);
}

// --- causality --------------------------------------------------------------

struct CausalityArgs {
  double u = 2.0;
  double beta = 0.9;
  double L = 1.0;
  double ell = 0.0;
  CommonOptions common;
};

ordered_json event_cols(const char* name, const Event& e, ordered_json row) {
  row[std::string(name) + "_t"] = e.t;
  row[std::string(name) + "_x"] = e.x;
  return row;
}

int cmd_causality(const CausalityArgs& a, std::ostream& out, std::ostream& err) {
  const LoopConfig cfg{a.u, a.beta, a.L, a.ell};
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const LoopReport r = run_loop(cfg);

  OutputRecord rec;
  rec.command = "causality";
  rec.parameters = {{"u", a.u}, {"beta", a.beta}, {"L", a.L}, {"ell", a.ell}};
  rec.columns = {"emission_t", "emission_x", "handoff1_t", "handoff1_x",
                 "relay_t",    "relay_x",    "handoff2_t", "handoff2_x",
                 "arrival_t",  "arrival_x",  "delta_t",    "violated"};
  ordered_json row = ordered_json::object();
  row = event_cols("emission", r.emission, row);
  row = event_cols("handoff1", r.handoff1, row);
  row = event_cols("relay", r.relay, row);
  row = event_cols("handoff2", r.handoff2, row);
  row = event_cols("arrival", r.arrival, row);
  row["delta_t"] = r.delta_t;
  row["violated"] = r.violated;
  rec.add_row(std::move(row));
  return emit(rec, a.common, out, err);
}

struct ScanArgs {
  std::string u_list = "1.5,2,5,10";
  double L = 1.0;
  CommonOptions common;
};

int cmd_causality_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<double> us;
  try {
    us = parse_number_list(a.u_list);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(a.L > 0.0)) throw UsageError("--L must be positive");
  for (double u : us) {
    if (!(u > 0.0)) throw UsageError("every u must be positive");
  }

  OutputRecord rec;
  rec.command = "causality-scan";
  rec.parameters = {{"u", a.u_list}, {"L", a.L}};
  rec.columns = {"u", "threshold_beta", "closed_form_beta", "abs_error"};
  for (double u : us) {
    const auto th = violation_threshold(u, a.L);
    ordered_json row = {{"u", u}};
    if (th) {
      const double expected = 2.0 * u / (1.0 + u * u);
      row["threshold_beta"] = *th;
      row["closed_form_beta"] = expected;
      row["abs_error"] = std::abs(*th - expected);
    } else {
      row["threshold_beta"] = nullptr;
      row["closed_form_beta"] = nullptr;
      row["abs_error"] = nullptr;
    }
    rec.add_row(std::move(row));
  }
  return emit(rec, a.common, out, err);
}

}  // namespace

double parse_angle_literal(std::string_view text) {
  static const std::regex kPiForm(R"(^\s*([+-]?)(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, kPiForm)) {
    const double numer = m[2].matched ? parse_decimal(m[2].str()) : 1.0;
    const double denom = m[3].matched ? parse_decimal(m[3].str()) : 1.0;
    if (denom == 0.0) throw std::invalid_argument("angle literal divides by zero");
    const double sign = m[1].str() == "-" ? -1.0 : 1.0;
    return sign * numer * kPi / denom;
  }
  return parse_decimal(text);
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(parse_decimal(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-atom amplifier, signaling protocol and causal-loop simulator",
               "stimamp"};
  app.require_subcommand(1);

  ProbsArgs probs;
  auto* probs_cmd = app.add_subcommand("probs", "Closed-form and first-principles probabilities");
  probs_cmd->add_option("--theta", probs.theta, "Polarization angle (radians or k*pi/m)");
  probs_cmd->add_option("--variant", probs.variant)->capture_default_str();
  add_common(probs_cmd, probs.common);

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate closed-form probabilities over theta");
  sweep_cmd->add_option("--theta-min", sw.theta_min)->capture_default_str();
  sweep_cmd->add_option("--theta-max", sw.theta_max)->capture_default_str();
  sweep_cmd->add_option("--steps", sw.steps)->capture_default_str();
  sweep_cmd->add_option("--variant", sw.variant)->capture_default_str();
  add_common(sweep_cmd, sw.common);

  McArgs mc;
  auto* mc_cmd = app.add_subcommand("mc", "Seeded Monte Carlo of two-photon outcomes");
  mc_cmd->add_option("--theta", mc.theta)->capture_default_str();
  mc_cmd->add_option("--variant", mc.variant)->capture_default_str();
  mc_cmd->add_option("--n", mc.n, "Number of two-photon outcomes")->capture_default_str();
  mc_cmd->add_option("--seed", mc.seed)->capture_default_str();
  add_common(mc_cmd, mc.common);

  ProtocolArgs proto;
  auto* proto_cmd = app.add_subcommand("protocol", "Simulate bit transmission over EPR pairs");
  proto_cmd->add_option("--bits", proto.bits, "Bit string, e.g. 0110")->required();
  proto_cmd->add_option("--pairs", proto.pairs, "Two-photon outcomes per bit")
      ->capture_default_str();
  proto_cmd->add_option("--seed", proto.seed)->capture_default_str();
  proto_cmd->add_option("--variant", proto.variant)->capture_default_str();
  proto_cmd->add_option("--theta0", proto.theta0, "Symbol angle for bit 0")->capture_default_str();
  proto_cmd->add_option("--theta1", proto.theta1, "Symbol angle for bit 1")->capture_default_str();
  add_common(proto_cmd, proto.common);

  CausalityArgs caus;
  auto* caus_cmd = app.add_subcommand("causality", "Run the four-channel relay once");
  caus_cmd->add_option("--u", caus.u, "Superluminal speed (units of c)")->capture_default_str();
  caus_cmd->add_option("--beta", caus.beta, "Relative frame velocity")->capture_default_str();
  caus_cmd->add_option("--L", caus.L, "Superluminal channel length")->capture_default_str();
  caus_cmd->add_option("--ell", caus.ell, "Light channel length")->capture_default_str();
  add_common(caus_cmd, caus.common);

  ScanArgs scan;
  auto* scan_cmd =
      app.add_subcommand("causality-scan", "Critical frame velocity for a list of speeds");
  scan_cmd->add_option("--u", scan.u_list, "Comma-separated speeds")->capture_default_str();
  scan_cmd->add_option("--L", scan.L)->capture_default_str();
  add_common(scan_cmd, scan.common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*probs_cmd) return cmd_probs(probs, out, err);
    if (*sweep_cmd) return cmd_sweep(sw, out, err);
    if (*mc_cmd) return cmd_mc(mc, out, err);
    if (*proto_cmd) return cmd_protocol(proto, out, err);
    if (*caus_cmd) return cmd_causality(caus, out, err);
    if (*scan_cmd) return cmd_causality_scan(scan, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kConsistencyFailure;
  }
  return kUsageError;
}

}  // namespace stimamp::cli
