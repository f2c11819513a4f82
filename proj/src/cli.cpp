#include "mcx/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "mcx/verify.hpp"

namespace mcx::cli {

namespace {

using nlohmann::json;

// Largest circuit synth will materialize; estimation handles anything
// beyond it.
constexpr std::uint64_t kSynthGateLimit = 5'000'000;

}  // namespace

Mat2 parse_unitary(const std::string& spec) {
  if (spec == "x") return mat_x();
  if (spec == "sx") return principal_root(mat_x(), 1);
  if (spec == "t") return mat_t();
  const auto eq = spec.find('=');
  if (eq != std::string::npos) {
    const std::string kind = spec.substr(0, eq);
    double theta = 0.0;
    try {
      theta = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("unitary: bad angle in '" + spec + "'");
    }
    if (kind == "rz") return mat_rz(theta);
    if (kind == "ry") return mat_ry(theta);
  }
  throw std::invalid_argument("unitary: expected x, sx, t, rz=<radians> or ry=<radians>");
}

namespace {

std::string ancilla_summary(std::uint64_t zeroed, std::uint64_t borrowed) {
  if (zeroed == 0 && borrowed == 0) return "none";
  std::string s;
  if (zeroed > 0) s += std::to_string(zeroed) + " zeroed";
  if (borrowed > 0) {
    if (!s.empty()) s += ", ";
    s += std::to_string(borrowed) + " borrowed";
  }
  return s;
}

json profile_json(const CliConfig& cfg, const est::ResourceProfile& rp) {
  json j{{"method", est::method_name(cfg.method.kind)},
         {"n", cfg.n},
         {"threshold", cfg.threshold},
         {"depth", rp.depth},
         {"cnots", rp.cnots},
         {"singles", rp.singles},
         {"size", rp.size()},
         {"zeroed", rp.zeroed},
         {"borrowed", rp.borrowed},
         {"error_bound", rp.error_bound}};
  if (cfg.method.kind == est::Method::Adjustable) j["ancillae"] = cfg.method.ancillae;
  if (cfg.method.kind == est::Method::Approx) j["epsilon"] = cfg.method.epsilon;
  return j;
}

est::ResourceProfile measured_profile(const Circuit& c) {
  est::ResourceProfile rp;
  rp.depth = asap_depth(c);
  const GateCounts gc = gate_counts(c);
  rp.cnots = gc.cnots;
  rp.singles = gc.singles;
  for (const WireRole role : c.roles) {
    if (role == WireRole::ZeroedAncilla) ++rp.zeroed;
    if (role == WireRole::BorrowedAncilla) ++rp.borrowed;
  }
  return rp;
}

int run_synth(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const est::ResourceProfile planned = est::estimate(cfg.method, cfg.n, cfg.threshold);
  if (planned.size() > kSynthGateLimit) {
    err << "synth: " << planned.size() << " gates exceeds the materialization limit of "
        << kSynthGateLimit << "; use `estimate` for instances this large\n";
    return 2;
  }
  const Circuit c = est::materialize(cfg.method, cfg.n, cfg.threshold);
  est::ResourceProfile rp = measured_profile(c);
  rp.error_bound = planned.error_bound;
  if (!cfg.qasm_out.empty()) {
    std::ofstream file(cfg.qasm_out, std::ios::binary);
    if (!file) {
      err << "synth: cannot open '" << cfg.qasm_out << "' for writing\n";
      return 2;
    }
    file << export_qasm(c);
    if (!file.flush()) {
      err << "synth: failed writing '" << cfg.qasm_out << "'\n";
      return 2;
    }
  }
  json j = profile_json(cfg, rp);
  j["width"] = c.width;
  j["gates"] = c.size();
  if (!cfg.qasm_out.empty()) j["qasm_out"] = cfg.qasm_out;
  if (cfg.json) out << j.dump(2) << "\n";
  err << "synth " << est::method_name(cfg.method.kind) << " n=" << cfg.n << ": width "
      << c.width << ", depth " << rp.depth << ", " << c.size() << " gates, ancillae "
      << ancilla_summary(rp.zeroed, rp.borrowed) << "\n";
  return 0;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const Circuit c = est::materialize(cfg.method, cfg.n, cfg.threshold);
  const verify::IdealSpec spec = verify::spec_from_roles(c, cfg.method.u);
  json j{{"method", est::method_name(cfg.method.kind)},
         {"n", cfg.n},
         {"width", c.width},
         {"tolerance", cfg.tolerance}};
  bool passed = false;
  if (cfg.method.kind == est::Method::Approx) {
    if (c.width > verify::kSpectralWidth) {
      err << "verify: width " << c.width << " exceeds the spectral limit of "
          << verify::kSpectralWidth << "\n";
      return 2;
    }
    const double bound = est::estimate(cfg.method, cfg.n, cfg.threshold).error_bound;
    const verify::SpectralResult sr = verify::spectral_error(c, spec);
    const double limit = bound == 0.0 ? cfg.tolerance : bound + 1e-8;
    passed = sr.converged && sr.value <= limit;
    j["mode"] = "spectral";
    j["spectral_error"] = sr.value;
    j["error_bound"] = bound;
    j["converged"] = sr.converged;
    j["iterations"] = sr.iterations;
    j["passed"] = passed;
    if (cfg.json) out << j.dump(2) << "\n";
    err << "verify " << est::method_name(cfg.method.kind) << " n=" << cfg.n
        << ": spectral error " << sr.value << " (bound " << limit << ") "
        << (passed ? "pass" : "FAIL") << "\n";
    return passed ? 0 : 1;
  }
  verify::VerifyMode mode;
  if (c.width <= verify::kExhaustiveWidth) {
    mode = verify::VerifyMode::Exhaustive;
  } else if (c.width <= verify::kStateWidth) {
    mode = verify::VerifyMode::Randomized;
  } else {
    err << "verify: width " << c.width << " exceeds the simulation limit of "
        << verify::kStateWidth << "\n";
    return 2;
  }
  const verify::VerificationReport report =
      verify::verify_exact(c, spec, mode, cfg.tolerance, cfg.seed);
  passed = report.passed;
  j["mode"] = mode == verify::VerifyMode::Exhaustive ? "exhaustive" : "randomized";
  j["max_deviation"] = report.max_deviation;
  j["global_phase"] = {report.global_phase.real(), report.global_phase.imag()};
  j["failures"] = report.failures.size();
  j["seed"] = cfg.seed;
  j["passed"] = passed;
  if (cfg.json) out << j.dump(2) << "\n";
  err << "verify " << est::method_name(cfg.method.kind) << " n=" << cfg.n << ": "
      << j["mode"].get<std::string>() << " max deviation " << report.max_deviation << " "
      << (passed ? "pass" : "FAIL") << "\n";
  return passed ? 0 : 1;
}

int run_estimate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const est::ResourceProfile rp = est::estimate(cfg.method, cfg.n, cfg.threshold);
  if (cfg.json) out << profile_json(cfg, rp).dump(2) << "\n";
  err << "estimate " << est::method_name(cfg.method.kind) << " n=" << cfg.n << ": depth "
      << rp.depth << ", size " << rp.size() << ", ancillae "
      << ancilla_summary(rp.zeroed, rp.borrowed) << "\n";
  return 0;
}

struct SweepArgs {
  std::vector<std::string> methods{"polylog-borrowed"};
  std::uint64_t n_lo = 100;
  std::uint64_t n_hi = 10'000'000;
  std::uint32_t points = 25;
  std::vector<std::uint64_t> ms;
  std::vector<double> epsilons;
  std::string fit;  // empty, "linear" or "cubic-log"
};

int run_sweep(const CliConfig& cfg, const SweepArgs& sa, std::ostream& out, std::ostream& err) {
  est::SweepSpec spec;
  spec.threshold = cfg.threshold;
  spec.ns = est::log_spaced(sa.n_lo, sa.n_hi, sa.points);
  spec.ms = sa.ms;
  spec.epsilons = sa.epsilons;
  for (const std::string& name : sa.methods) {
    est::MethodId m = cfg.method;
    m.kind = est::parse_method(name);
    spec.methods.push_back(m);
  }
  if (!sa.fit.empty() && cfg.csv_out.empty())
    throw std::invalid_argument("sweep: --fit needs --csv-out so the fit owns stdout");
  const std::vector<est::SweepRow> rows = est::sweep(spec);
  if (cfg.csv_out.empty()) {
    est::write_sweep_csv(out, rows);
  } else {
    std::ofstream file(cfg.csv_out, std::ios::binary);
    if (!file) {
      err << "sweep: cannot open '" << cfg.csv_out << "' for writing\n";
      return 2;
    }
    est::write_sweep_csv(file, rows);
    if (!file.flush()) {
      err << "sweep: failed writing '" << cfg.csv_out << "'\n";
      return 2;
    }
  }
  if (!sa.fit.empty()) {
    const est::FitModel model =
        sa.fit == "linear" ? est::FitModel::LinearInN : est::FitModel::LinearInCubedLog;
    const est::FitResult fr = est::fit_depth(rows, model);
    if (cfg.json)
      out << json{{"model", sa.fit},
                  {"slope", fr.slope},
                  {"intercept", fr.intercept},
                  {"r_squared", fr.r_squared}}
                 .dump(2)
          << "\n";
  }
  err << "sweep: " << rows.size() << " rows"
      << (cfg.csv_out.empty() ? "" : " -> " + cfg.csv_out) << "\n";
  return 0;
}

int run_compare(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  struct Line {
    std::string name;
    std::string source;
    double depth = std::numeric_limits<double>::quiet_NaN();
    std::string ancillae;
    std::string detail;
  };
  std::vector<Line> lines;
  const est::Method ours[] = {est::Method::PolylogBorrowed, est::Method::PolylogZeroed,
                              est::Method::Ladder,          est::Method::Split,
                              est::Method::LogTree,         est::Method::Adjustable,
                              est::Method::Approx};
  for (const est::Method kind : ours) {
    est::MethodId m = cfg.method;
    m.kind = kind;
    Line line{est::method_name(kind), "this-library", {}, {}, {}};
    try {
      const est::ResourceProfile rp = est::estimate(m, cfg.n, cfg.threshold);
      line.depth = static_cast<double>(rp.depth);
      line.ancillae = ancilla_summary(rp.zeroed, rp.borrowed);
      if (kind == est::Method::Approx)
        line.detail = "epsilon=" + std::to_string(m.epsilon);
    } catch (const std::invalid_argument&) {
      line.ancillae = "-";
      line.detail = "not computed at this size";
    }
    lines.push_back(std::move(line));
  }
  for (const est::LiteratureRow& row : est::literature_table()) {
    Line line{row.name, "literature", row.depth(cfg.n, cfg.method.ancillae, cfg.method.epsilon),
              row.ancillae, row.expression};
    line.detail += line.detail.empty() ? row.note : std::string("; ") + row.note;
    lines.push_back(std::move(line));
  }
  json arr = json::array();
  for (const Line& line : lines) {
    json j{{"name", line.name}, {"source", line.source}, {"ancillae", line.ancillae}};
    if (std::isnan(line.depth))
      j["depth"] = nullptr;
    else
      j["depth"] = line.depth;
    if (!line.detail.empty()) j["detail"] = line.detail;
    arr.push_back(std::move(j));
  }
  if (cfg.json) out << arr.dump(2) << "\n";
  err << "compare at n=" << cfg.n << " (threshold " << cfg.threshold << ")\n";
  for (const Line& line : lines) {
    err << "  " << std::left << std::setw(28) << line.name << std::setw(14) << line.source;
    if (std::isnan(line.depth))
      err << std::setw(14) << "-";
    else
      err << std::setw(14) << std::llround(line.depth);
    err << line.ancillae << "\n";
  }
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"multi-controlled gate synthesis, verification and resource estimation"};
  app.require_subcommand(1);

  std::string method = "polylog-borrowed";
  std::string unitary = "x";
  bool plain_order = false;
  bool no_json = false;
  CliConfig cfg;
  SweepArgs sa;
  std::uint64_t ancillae = 2;
  double epsilon = 1e-3;

  const auto add_common = [&](CLI::App* sub, bool need_n) {
    if (need_n) sub->add_option("--n", cfg.n, "number of controls")->required();
    sub->add_option("--method", method, "synthesis method")->capture_default_str();
    sub->add_option("--ancillae", ancillae, "zeroed ancillae for the adjustable method")
        ->capture_default_str();
    sub->add_option("--epsilon", epsilon, "error budget for the approximate method")
        ->capture_default_str();
    sub->add_option("--unitary", unitary, "target unitary: x, sx, t, rz=<radians>, ry=<radians>")
        ->capture_default_str();
    sub->add_flag("--plain-order", plain_order,
                  "emit su2 factors in plain order (no conjugate pairing)");
    sub->add_option("--threshold", cfg.threshold, "base-case cutoff")->capture_default_str();
    sub->add_flag("--no-json", no_json, "suppress the JSON payload on stdout");
  };

  CLI::App* synth = app.add_subcommand("synth", "synthesize a circuit and report its profile");
  add_common(synth, true);
  synth->add_option("--qasm-out", cfg.qasm_out, "write OpenQASM to this file");

  CLI::App* verify = app.add_subcommand("verify", "synthesize then check against the ideal gate");
  add_common(verify, true);
  verify->add_option("--tolerance", cfg.tolerance, "deviation tolerance")->capture_default_str();
  verify->add_option("--seed", cfg.seed, "randomized-probe seed")->capture_default_str();

  CLI::App* estimate = app.add_subcommand("estimate", "resource profile without synthesis");
  add_common(estimate, true);

  CLI::App* sweep = app.add_subcommand("sweep", "estimate across an n grid, CSV output");
  sweep->add_option("--methods", sa.methods, "methods to sweep")->capture_default_str();
  sweep->add_option("--n-lo", sa.n_lo, "smallest n")->capture_default_str();
  sweep->add_option("--n-hi", sa.n_hi, "largest n")->capture_default_str();
  sweep->add_option("--points", sa.points, "log-spaced sample count")->capture_default_str();
  sweep->add_option("--ms", sa.ms, "ancilla grid for the adjustable method");
  sweep->add_option("--epsilons", sa.epsilons, "error grid for the approximate method");
  sweep->add_option("--threshold", cfg.threshold, "base-case cutoff")->capture_default_str();
  sweep->add_option("--csv-out", cfg.csv_out, "write CSV here instead of stdout");
  sweep->add_option("--fit", sa.fit, "fit depth after the sweep: linear or cubic-log")
      ->check(CLI::IsMember({"linear", "cubic-log"}));
  sweep->add_flag("--no-json", no_json, "suppress the JSON payload on stdout");

  CLI::App* compare = app.add_subcommand("compare", "tabulate methods beside published figures");
  add_common(compare, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      const auto parsed = app.get_subcommands();
      out << (parsed.empty() ? app.help() : parsed.front()->help());
      return 0;
    }
    err << e.what() << "\n\n" << app.help();
    return 2;
  }

  cfg.json = !no_json;
  try {
    cfg.method.kind = est::parse_method(method);
    cfg.method.ancillae = ancillae;
    cfg.method.epsilon = epsilon;
    cfg.method.u = parse_unitary(unitary);
    cfg.method.su2_conjugate_second = !plain_order;
    if (synth->parsed()) return run_synth(cfg, out, err);
    if (verify->parsed()) return run_verify(cfg, out, err);
    if (estimate->parsed()) return run_estimate(cfg, out, err);
    if (sweep->parsed()) return run_sweep(cfg, sa, out, err);
    if (compare->parsed()) return run_compare(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand given\n" << app.help();
  return 2;
}

}  // namespace mcx::cli
