#include "lindblad/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lindblad/ladder.hpp"
#include "lindblad/matrix_io.hpp"
#include "lindblad/observables.hpp"
#include "lindblad/spectral.hpp"
#include "lindblad/states.hpp"
#include "lindblad/verify.hpp"

namespace lindblad::cli {

namespace {

struct RunConfig {
  double omega = 1.0;
  double gamma = 1.0;
  double beta = std::log(2.0);
  std::optional<int> dim;
  std::optional<int> j_max;
  std::optional<int> order_max;
  double t0 = 0.0;
  double t1 = 10.0;
  int steps = 100;
  std::string init = "gibbs";
  std::string method = "spectral";
  std::vector<std::string> methods;
  std::vector<std::string> observables;
  std::string out_path;
  int precision = 17;
  std::optional<double> tol;
  std::string suite;
  int pmax = 30;
};

std::vector<double> time_grid(const RunConfig& c) {
  std::vector<double> times;
  for (int i = 0; i <= c.steps; ++i) times.push_back(c.t0 + (c.t1 - c.t0) * i / c.steps);
  return times;
}

void validate_common(const RunConfig& c) {
  if (c.dim && *c.dim < 2) throw ParameterError("dim", "must be at least 2");
  if (c.j_max && *c.j_max < 0) throw ParameterError("jmax", "must be non-negative");
  if (c.order_max && *c.order_max < 0) throw ParameterError("order-max", "must be non-negative");
  if (c.precision < 1 || c.precision > 17) throw ParameterError("precision", "must lie in [1, 17]");
  if (c.tol && !(*c.tol > 0.0)) throw ParameterError("tol", "must be positive");
  if (!std::isfinite(c.t0) || !std::isfinite(c.t1) || c.t0 < 0.0 || !(c.t1 > c.t0))
    throw ParameterError("t0,t1", "need 0 <= t0 < t1");
  if (c.steps < 1) throw ParameterError("steps", "must be at least 1");
}

std::vector<Observable> parse_observables(const std::vector<std::string>& names, std::vector<Observable> fallback) {
  if (names.empty()) return fallback;
  std::vector<Observable> out;
  for (const auto& n : names) out.push_back(parse_observable(n));
  return out;
}

std::string fmt(double v, int precision) { return format_double(v, precision); }

// Each command fills `out` and returns an exit code.

int cmd_spectrum(const RunConfig& c, const ModelParams& params, std::ostream& out) {
  const int dim = c.dim.value_or(40);
  const int j_max = c.j_max.value_or(4);
  std::vector<SpectralMode> modes;
  for (const auto& [j, k] : mode_order(j_max)) modes.push_back(spectral_mode(j, k, params, dim));
  out << "j,k,re_lambda,im_lambda,right_residual,left_residual,pairing_defect\n";
  for (const auto& m : modes) {
    const double defect = std::abs(pairing(m.left, m.right) - 1.0);
    out << m.j << ',' << m.k << ',' << fmt(m.lambda.real(), c.precision) << ',' << fmt(m.lambda.imag(), c.precision)
        << ',' << fmt(right_residual(m, params), c.precision) << ',' << fmt(left_residual(m, params), c.precision)
        << ',' << fmt(defect, c.precision) << '\n';
  }
  return kOk;
}

TrajectoryOptions trajectory_options(const RunConfig& c) {
  TrajectoryOptions opt;
  opt.dim = c.dim.value_or(40);
  opt.j_max = c.j_max.value_or(2 * opt.dim);
  return opt;
}

int cmd_evolve(const RunConfig& c, const ModelParams& params, std::ostream& out) {
  const TrajectoryOptions opt = trajectory_options(c);
  const Method method = parse_method(c.method);
  const auto observables = parse_observables(c.observables, {Observable::energy, Observable::x, Observable::p});
  const DensityMatrix rho0 = parse_initial_state(c.init, params, opt.dim);
  const Trajectory tr = compute_trajectory(method, rho0, time_grid(c), observables, params, opt);
  write_trajectory_csv(out, tr, c.precision);
  return kOk;
}

int cmd_compare(const RunConfig& c, const ModelParams& params, std::ostream& out, std::ostream& err) {
  const TrajectoryOptions opt = trajectory_options(c);
  std::vector<Method> methods;
  if (c.methods.empty())
    methods = {Method::closed_form, Method::spectral, Method::disentangled, Method::oracle};
  for (const auto& m : c.methods) methods.push_back(parse_method(m));
  const auto observables = parse_observables(c.observables, all_observables());
  const double tol = c.tol.value_or(1e-7);
  const DensityMatrix rho0 = parse_initial_state(c.init, params, opt.dim);
  const CompareReport report = trajectory_compare(rho0, time_grid(c), methods, observables, params, opt);
  out << "method_a,method_b,observable,max_abs_discrepancy\n";
  bool ok = true;
  for (const auto& d : report.pairwise) {
    out << method_name(d.first) << ',' << method_name(d.second) << ',' << observable_name(d.observable) << ','
        << fmt(d.max_abs, c.precision) << '\n';
    ok = ok && d.max_abs <= tol;
  }
  if (!ok) err << "compare: discrepancy above tolerance " << fmt(tol, 3) << '\n';
  return ok ? kOk : kToleranceBreach;
}

int cmd_verify(const RunConfig& c, const ModelParams& params, std::ostream& out) {
  SuiteReport report;
  if (c.suite == "identities")
    report = verify_identities(c.pmax);
  else if (c.suite == "biorthogonality")
    report = verify_biorthogonality(params, c.dim.value_or(60), c.j_max.value_or(8), c.tol.value_or(1e-9));
  else if (c.suite == "ladder")
    report = verify_ladder(params, c.dim.value_or(40), c.order_max.value_or(8), c.tol.value_or(1e-8));
  else if (c.suite == "completeness")
    report = verify_completeness(params, c.dim.value_or(40), c.tol.value_or(1e-8));
  else
    throw ParameterError("suite", "unknown suite '" + c.suite + "'");
  for (const auto& line : report.lines) out << line << '\n';
  out << report.suite << ": " << (report.passed ? "PASS" : "FAIL") << '\n';
  return report.passed ? kOk : kToleranceBreach;
}

int cmd_ladder(const RunConfig& c, const ModelParams& params, std::ostream& out) {
  const int dim = c.dim.value_or(40);
  const int order = c.order_max.value_or(6);
  out << "m,n,re_mu,im_mu,residual,collinearity_defect\n";
  for (int j = 0; j <= order; ++j)
    for (int m = j; m >= 0; --m) {
      const LadderState s = build_eigenstate(m, j - m, params, dim);
      const SpectralMode mode = spectral_mode(j, 2 * m - j, params, dim);
      out << s.m << ',' << s.n << ',' << fmt(s.mu.real(), c.precision) << ',' << fmt(s.mu.imag(), c.precision) << ','
          << fmt(ladder_residual(s, params), c.precision) << ','
          << fmt(collinearity_defect(s.ket, mode.right), c.precision) << '\n';
    }
  return kOk;
}

/// Writes via a sibling temporary file so a failed write leaves nothing behind.
void write_output(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file '" + path + "'");
    f << text;
    if (!f.flush()) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing output file '" + path + "'");
    }
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Damped quantum harmonic oscillator: Liouvillian spectrum and dynamics", "lindblad"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file; command-line flags override its values");

  app.add_option("--omega", c.omega, "oscillator frequency")->capture_default_str();
  app.add_option("--gamma", c.gamma, "downward rate")->capture_default_str();
  app.add_option("--beta", c.beta, "bath inverse temperature")->capture_default_str();
  app.add_option("--dim", c.dim, "Fock truncation D");
  app.add_option("--jmax", c.j_max, "largest dissipation number j");
  app.add_option("--order-max", c.order_max, "largest ladder order m + n");
  app.add_option("--t0", c.t0, "first time")->capture_default_str();
  app.add_option("--t1", c.t1, "last time")->capture_default_str();
  app.add_option("--steps", c.steps, "number of time steps")->capture_default_str();
  app.add_option("--init", c.init, "initial state: fock:n, gibbs, paper-example, file:PATH")->capture_default_str();
  app.add_option("--method", c.method, "closed-form, spectral, disentangled or oracle")->capture_default_str();
  app.add_option("--methods", c.methods, "methods to compare")->delimiter(',');
  app.add_option("--obs", c.observables, "observables: E, E2, varE, x, p, x2, p2, varx, varp")->delimiter(',');
  app.add_option("--out", c.out_path, "output file (default stdout)");
  app.add_option("--precision", c.precision, "significant digits")->capture_default_str();
  app.add_option("--tol", c.tol, "tolerance for compare/verify");

  auto* spectrum = app.add_subcommand("spectrum", "mode table: eigenvalues, residuals, pairing defects");
  auto* evolve = app.add_subcommand("evolve", "trajectory CSV for one method");
  auto* compare = app.add_subcommand("compare", "pairwise max discrepancies between methods");
  auto* verify = app.add_subcommand("verify", "run a self-check suite");
  verify->add_option("--suite", c.suite, "identities, biorthogonality, ladder or completeness")
      ->required()
      ->check(CLI::IsMember({"identities", "biorthogonality", "ladder", "completeness"}));
  verify->add_option("--pmax", c.pmax, "largest p for the identities suite")->capture_default_str();
  auto* ladder = app.add_subcommand("ladder", "ladder-mode table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    validate_common(c);
    const ModelParams params = make_params(c.omega, c.gamma, c.beta);
    std::ostringstream buffer;
    int code = kOk;
    if (spectrum->parsed())
      code = cmd_spectrum(c, params, buffer);
    else if (evolve->parsed())
      code = cmd_evolve(c, params, buffer);
    else if (compare->parsed())
      code = cmd_compare(c, params, buffer, err);
    else if (verify->parsed())
      code = cmd_verify(c, params, buffer);
    else if (ladder->parsed())
      code = cmd_ladder(c, params, buffer);
    if (c.out_path.empty())
      out << buffer.str();
    else
      write_output(c.out_path, buffer.str());
    return code;
  } catch (const std::invalid_argument& e) {  // ParameterError, DimensionError, malformed input files
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TruncationError& e) {
    err << "error: " << e.what() << " (required D >= " << e.required_dim() << ")\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace lindblad::cli
