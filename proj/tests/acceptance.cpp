// Acceptance gate. `acceptance N...` runs the listed criteria (all when none
// are given), prints one "criterion N: PASS|FAIL" line each plus indented
// details, and exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lindblad/combinatorics.hpp"
#include "lindblad/disentangle.hpp"
#include "lindblad/ladder.hpp"
#include "lindblad/observables.hpp"
#include "lindblad/oracle.hpp"
#include "lindblad/spectral.hpp"
#include "lindblad/states.hpp"
#include "lindblad/verify.hpp"

using namespace lindblad;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& line) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
  void note(const std::string& line) { details.push_back("     " + line); }
};

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

const ModelParams kStd = standard_params();
const std::vector<double> kCorpusTimes{0.1, 0.5, 1.0, 2.0, 5.0};

void add_suite(Outcome& out, const SuiteReport& report) {
  for (const auto& line : report.lines) out.check(line.rfind("PASS", 0) == 0, line.substr(5));
}

Outcome eigenvalue_law() {
  Outcome out;
  const Stopwatch clock;
  const SpectrumReport report = match_spectrum(numerical_spectrum(kStd, 20), kStd, 20, 4);
  const double elapsed = clock.seconds();
  const SpectrumMatch* worst = &report.matches.front();
  for (const auto& m : report.matches)
    if (m.error > worst->error) worst = &m;
  out.check(report.max_error <= 1e-6, format("D=20, j<=4: max |lambda_num - lambda_jk| = %.3e at (j,k)=(%d,%d) (tol 1e-6)",
                                             report.max_error, worst->j, worst->k));
  const double ground = report.matches.front().error;
  out.check(ground <= 1e-10, format("lambda_00: |lambda_num| = %.3e (tol 1e-10)", ground));
  out.check(elapsed < 5.0, format("runtime %.2f s (limit 5 s)", elapsed));
  const SpectrumReport larger = match_spectrum(numerical_spectrum(kStd, 40), kStd, 40, 4);
  out.note(format("diagnostic: the same match at D=40 gives %.3e", larger.max_error));
  return out;
}

Outcome biorthonormality() {
  Outcome out;
  const Stopwatch clock;
  add_suite(out, verify_biorthogonality(kStd, 60, 8, 1e-9));
  const double elapsed = clock.seconds();
  out.check(elapsed < 30.0, format("runtime %.2f s (limit 30 s)", elapsed));
  return out;
}

Outcome eigen_residuals() {
  Outcome out;
  double right = 0.0, left = 0.0;
  for (const auto& [j, k] : mode_order(6)) {
    const SpectralMode m = spectral_mode(j, k, kStd, 60);
    right = std::max(right, right_residual(m, kStd));
    left = std::max(left, left_residual(m, kStd));
  }
  out.check(right <= 1e-9, format("right residuals, j<=6, D=60: max %.3e (tol 1e-9)", right));
  out.check(left <= 1e-8, format("left residuals on the interior block: max %.3e (tol 1e-8)", left));
  return out;
}

Outcome exact_identities() {
  Outcome out;
  const Stopwatch clock;
  const SuiteReport report = verify_identities(30);
  for (const auto& line : report.lines)
    if (line.find("trace_moment") == std::string::npos) out.check(line.rfind("PASS", 0) == 0, line.substr(5));
  out.note("claim1_sum is checked on n <= l, the domain on which it is an identity");
  const double elapsed = clock.seconds();
  out.check(elapsed < 60.0, format("runtime %.2f s (limit 60 s)", elapsed));
  return out;
}

Outcome trace_moments() {
  Outcome out;
  for (const ExactRational& xi : {ExactRational(1, 2), ExactRational(1, 3)}) {
    int failures = 0;
    double worst_ratio = 0.0;
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n) {
        const FockSumResult sum = trace_moment_fock_sum(m, n, xi, 200);
        const ExactRational gap = abs(trace_moment(m, n, xi) - sum.partial);
        if (gap > sum.tail_bound) ++failures;
        if (sum.tail_bound > 0) worst_ratio = std::max(worst_ratio, to_double(gap / sum.tail_bound));
      }
    out.check(failures == 0, format("xi=%s, m,n<=10, 200 levels: %d outside the tail bound (max gap/bound %.3f)",
                                    xi.str().c_str(), failures, worst_ratio));
  }
  return out;
}

Outcome three_propagators() {
  Outcome out;
  const Stopwatch clock;
  const int dim = 40;
  const SpectralBasis basis(kStd, dim, 2 * dim);
  const ExpmPropagator oracle(kStd, dim);
  for (const NamedState& s : reference_corpus(kStd, dim)) {
    const SpectralPropagator spectral(basis, s.rho);
    for (double t : kCorpusTimes) {
      const DensityMatrix a = spectral.at(t).rho;
      const DensityMatrix b = disentangled_propagate(s.rho, t, kStd);
      const DensityMatrix c = oracle.at(s.rho, t);
      const double worst = std::max({trace_distance(a.op, b.op), trace_distance(a.op, c.op), trace_distance(b.op, c.op)});
      if (worst > 1e-7 || t == 1.0)
        out.check(worst <= 1e-7, format("%-15s t=%.1f: max pairwise trace distance %.3e", s.name.c_str(), t, worst));
    }
  }
  const double elapsed = clock.seconds();
  out.check(elapsed < 120.0, format("runtime %.2f s (limit 120 s)", elapsed));
  return out;
}

Outcome observable_closed_forms() {
  Outcome out;
  const int dim = 40;
  std::vector<double> times;
  for (int i = 0; i <= 100; ++i) times.push_back(0.1 * i);
  const std::vector<Observable> obs{Observable::energy, Observable::x, Observable::p, Observable::x_var, Observable::p_var};
  std::vector<double> worst(obs.size(), 0.0);
  for (const NamedState& s : reference_corpus(kStd, dim)) {
    const CompareReport r = trajectory_compare(s.rho, times, {Method::closed_form, Method::oracle}, obs, kStd);
    for (std::size_t i = 0; i < obs.size(); ++i) worst[i] = std::max(worst[i], r.max_by_observable[i]);
  }
  for (std::size_t i = 0; i < obs.size(); ++i)
    out.check(worst[i] <= 1e-8, format("%-4s closed form vs oracle, corpus, t in [0,10]: max %.3e (tol 1e-8)",
                                       observable_name(obs[i]).c_str(), worst[i]));

  const Trajectory ex = compute_trajectory(Method::closed_form, paper_example_state(dim), times,
                                           {Observable::x, Observable::p}, kStd);
  double dx = 0.0, dp = 0.0;
  for (std::size_t s = 0; s < times.size(); ++s) {
    const double t = times[s];
    const double env = std::exp(-t / 4) / std::sqrt(2.0);
    dx = std::max(dx, std::abs(ex.values[0][s] - env * std::cos(t)));
    dp = std::max(dp, std::abs(ex.values[1][s] + env * std::sin(t)));
  }
  out.check(dx <= 1e-8, format("example superposition <x>_t vs e^{-t/4} cos t / sqrt 2: max %.3e", dx));
  out.check(dp <= 1e-8, format("example superposition <p>_t vs -e^{-t/4} sin t / sqrt 2: max %.3e", dp));

  const ExpmPropagator oracle(kStd, dim);
  double de = 0.0;
  for (double t : times) {
    de = std::max(de, std::abs(observable_value(Observable::energy, oracle.at(fock_state(1, dim), t), kStd) - 1.0));
    de = std::max(de, std::abs(energy_trajectory(1.0, 1.0, t, kStd).mean - 1.0));
  }
  out.check(de <= 1e-9, format("|1><1|: max |<E>_t - 1| = %.3e (closed form and oracle, tol 1e-9)", de));
  return out;
}

Outcome trace_and_convergence() {
  Outcome out;
  const int dim = 40;
  const SpectralBasis basis(kStd, dim, 2 * dim);
  const ExpmPropagator oracle(kStd, dim);
  const DensityMatrix eq = gibbs_state(kStd, dim);
  const double t_long = 200.0 / kStd.kappa;
  std::vector<double> times = kCorpusTimes;
  times.push_back(t_long);

  double trace_worst[3] = {0.0, 0.0, 0.0};
  double trace_worst_t[3] = {0.0, 0.0, 0.0};
  std::string trace_worst_state[3];
  double conv_worst[3] = {0.0, 0.0, 0.0};
  for (const NamedState& s : reference_corpus(kStd, dim)) {
    const SpectralPropagator spectral(basis, s.rho);
    const std::function<DensityMatrix(double)> methods[3] = {
        [&](double t) { return spectral.at(t).rho; },
        [&](double t) { return disentangled_propagate(s.rho, t, kStd); },
        [&](double t) { return oracle.at(s.rho, t); },
    };
    for (int m = 0; m < 3; ++m) {
      for (double t : times) {
        const DensityMatrix r = methods[m](t);
        const double defect = std::abs(r.op.trace() - 1.0);
        if (defect > trace_worst[m]) trace_worst[m] = defect, trace_worst_t[m] = t, trace_worst_state[m] = s.name;
        if (t == t_long) conv_worst[m] = std::max(conv_worst[m], trace_norm(r.matrix() - eq.matrix()));
      }
    }
  }
  double at_zero = 0.0;
  for (const NamedState& s : reference_corpus(kStd, dim))
    at_zero = std::max(at_zero, std::abs(SpectralPropagator(basis, s.rho).at(0.0).rho.op.trace() - 1.0));
  const char* names[3] = {"spectral", "disentangled", "oracle"};
  for (int m = 0; m < 3; ++m) {
    out.check(trace_worst[m] <= 1e-10,
              format("%-12s |tr rho(t) - 1|, corpus, t in {0.1,0.5,1,2,5,200/kappa}: max %.3e (%s, t=%g)", names[m],
                     trace_worst[m], trace_worst_state[m].c_str(), trace_worst_t[m]));
    out.check(conv_worst[m] <= 1e-10,
              format("%-12s ||rho(200/kappa) - rho_eq||_1, corpus: max %.3e", names[m], conv_worst[m]));
  }
  out.note(format("diagnostic: spectral |tr rho(0) - 1| = %.3e (the t = 0 mode sum is the completeness series)", at_zero));
  return out;
}

Outcome ladder_equivalence() {
  Outcome out;
  add_suite(out, verify_ladder(kStd, 40, 8, 1e-8));
  return out;
}

Outcome completeness() {
  Outcome out;
  const int dim = 40;
  const SpectralBasis basis(kStd, dim, 2 * dim);
  double worst = 0.0;
  int worst_m = 0, worst_n = 0;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      Matrix unit = Matrix::Zero(dim, dim);
      unit(m, n) = 1.0;
      // The partial sum is linear in rho0, so the matrix units span every
      // state supported on levels <= 5.
      Matrix sum = Matrix::Zero(dim, dim);
      const FockOperator rho{unit};
      for (const ModeBand& band : basis.modes()) band.accumulate_right(band.pair(rho), sum);
      const double err = trace_norm(sum - unit);
      if (err > worst) worst = err, worst_m = m, worst_n = n;
    }
  out.check(worst <= 1e-8, format("partial sums j<=2D=80, D=40, |m><n| with m,n<=5: max trace-norm error %.3e at (%d,%d)",
                                   worst, worst_m, worst_n));
  const double bound = std::pow(kStd.xi, 30);
  const double err = trace_norm(alpha_reconstruction(0, 0, 30, kStd, dim).matrix() - fock_state(0, dim).matrix());
  out.check(err <= bound, format("alpha_q reconstruction of |0><0|, Q=30, D=40: trace-norm error %.3e (bound xi^30 = %.3e)",
                                 err, bound));
  return out;
}

const std::function<Outcome()> kCriteria[] = {
    eigenvalue_law,        biorthonormality,        eigen_residuals, exact_identities,   trace_moments,
    three_propagators,     observable_closed_forms, trace_and_convergence, ladder_equivalence, completeness,
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > 10) {
      std::fprintf(stderr, "usage: acceptance [criterion 1..10]...\n");
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty())
    for (int n = 1; n <= 10; ++n) selected.push_back(n);

  bool all = true;
  for (int n : selected) {
    const Stopwatch clock;
    Outcome o;
    try {
      o = kCriteria[n - 1]();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %d: %s (%.2f s)\n", n, o.pass ? "PASS" : "FAIL", clock.seconds());
    for (const auto& line : o.details) std::printf("  %s\n", line.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
