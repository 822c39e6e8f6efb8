#include "lindblad/verify.hpp"

#include <cmath>
#include <cstdio>

#include "lindblad/combinatorics.hpp"
#include "lindblad/ladder.hpp"
#include "lindblad/spectral.hpp"
#include "lindblad/states.hpp"
#include "lindblad/superop.hpp"

namespace lindblad {

void SuiteReport::add(bool ok, const std::string& line) {
  passed = passed && ok;
  lines.push_back(std::string(ok ? "PASS " : "FAIL ") + line);
}

namespace {

std::string fmt(const char* format, double a) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

ExactRational signed_factorial(int n, bool negative) {
  ExactRational v(factorial(n));
  return negative ? ExactRational(-v) : v;
}

}  // namespace

SuiteReport verify_identities(int pmax) {
  if (pmax < 0) throw ParameterError("pmax", "must be non-negative");
  SuiteReport report{"identities", true, {}};

  long triples = 0, bad_triples = 0, recurrences = 0, bad_recurrences = 0;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= q; ++r) {
        ++triples;
        if (identity_I(p, q, r) != ExactRational(r == 0 ? 1 : 0)) ++bad_triples;
        if (r >= 1) {
          ++recurrences;
          if (!recurrence_check(p, q, r)) ++bad_recurrences;
        }
      }
  report.add(bad_triples == 0, "identity_I: " + std::to_string(triples) + " triples checked, " +
                                   std::to_string(bad_triples) + " failures");
  report.add(bad_recurrences == 0, "recurrence: " + std::to_string(recurrences) + " triples checked, " +
                                       std::to_string(bad_recurrences) + " failures");

  long pairs = 0, bad_pairs = 0;
  for (int p = 0; p <= pmax; ++p)
    for (int r = 0; r <= p; ++r) {
      ++pairs;
      const ExactRational expected = p == r ? signed_factorial(r, r % 2 == 1) : ExactRational(0);
      if (alt_sum(p, r) != expected) ++bad_pairs;
    }
  report.add(bad_pairs == 0,
             "alt_sum: " + std::to_string(pairs) + " pairs checked, " + std::to_string(bad_pairs) + " failures");

  const ExactRational xis[] = {ExactRational(1, 2), ExactRational(1, 3), ExactRational(2, 5)};
  long claims = 0, bad_claims = 0;
  for (const auto& xi : xis)
    for (int k = 0; k <= 8; ++k)
      for (int l = 0; l <= 8; ++l)
        for (int n = 0; n <= l; ++n) {  // the identity is stated for n <= l; n > l follows by symmetry
          ++claims;
          const ExactRational expected =
              l == n ? ExactRational(l % 2 == 0 ? 1 : -1) / ExactRational(factorial(l)) : ExactRational(0);
          if (claim1_sum(k, l, n, xi) != expected) ++bad_claims;
        }
  report.add(bad_claims == 0, "claim1_sum: " + std::to_string(claims) + " (k,l,n,xi) checked, " +
                                  std::to_string(bad_claims) + " failures");

  long moments = 0, bad_moments = 0;
  for (const auto& xi : {ExactRational(1, 2), ExactRational(1, 3)})
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n) {
        ++moments;
        const FockSumResult sum = trace_moment_fock_sum(m, n, xi, 200);
        if (abs(trace_moment(m, n, xi) - sum.partial) > sum.tail_bound) ++bad_moments;
      }
  report.add(bad_moments == 0, "trace_moment: " + std::to_string(moments) + " (m,n,xi) within tail bound, " +
                                   std::to_string(bad_moments) + " failures");
  return report;
}

SuiteReport verify_biorthogonality(const ModelParams& params, int dim, int j_max, double tol) {
  SuiteReport report{"biorthogonality", true, {}};
  std::vector<SpectralMode> modes;
  for (const auto& [j, k] : mode_order(j_max)) modes.push_back(spectral_mode(j, k, params, dim));
  double worst = 0.0;
  int worst_j = 0, worst_k = 0, worst_jp = 0, worst_kp = 0;
  for (const auto& left : modes)
    for (const auto& right : modes) {
      const double expected = (left.j == right.j && left.k == right.k) ? 1.0 : 0.0;
      const double defect = std::abs(pairing(left.left, right.right) - expected);
      if (defect > worst) {
        worst = defect;
        worst_j = right.j, worst_k = right.k, worst_jp = left.j, worst_kp = left.k;
      }
    }
  char buf[200];
  std::snprintf(buf, sizeof buf, "pairings over %zu modes (j <= %d, D = %d): max defect %.3e at <<%d,%d|%d,%d>> (tol %.1e)",
                modes.size(), j_max, dim, worst, worst_jp, worst_kp, worst_j, worst_k, tol);
  report.add(worst <= tol, buf);
  return report;
}

namespace {

/// Largest |entry| of m restricted to vectorized indices (row, col) both below dim - guard.
double interior_block_max(const Matrix& m, int dim, int guard) {
  std::vector<Eigen::Index> keep;
  for (int c = 0; c < dim - guard; ++c)
    for (int r = 0; r < dim - guard; ++r) keep.push_back(r + static_cast<Eigen::Index>(dim) * c);
  double worst = 0.0;
  for (auto i : keep)
    for (auto j : keep) worst = std::max(worst, std::abs(m(i, j)));
  return worst;
}

}  // namespace

SuiteReport verify_ladder(const ModelParams& params, int dim, int order_max, double tol) {
  SuiteReport report{"ladder", true, {}};

  // Commutators as D^2 x D^2 matrices on a small space.
  const int small = 12;
  const int guard = 2;
  const SuperOperator l = liouvillian_matrix(params, small);
  const SuperOperator xp = ladder_matrix(Ladder::x_plus, params, small);
  const SuperOperator xm = ladder_matrix(Ladder::x_minus, params, small);
  const SuperOperator yp = ladder_matrix(Ladder::y_plus, params, small);
  const SuperOperator ym = ladder_matrix(Ladder::y_minus, params, small);
  const SuperOperator id = identity_superoperator(small);
  const Complex i(0.0, 1.0);
  const double k = params.kappa, w = params.omega;
  struct Relation {
    const char* name;
    SuperOperator defect;
  };
  const Relation relations[] = {
      {"[L,X+] = (-k/2 - iw) X+", commutator(l, xp) - (-k / 2 - i * w) * xp},
      {"[L,X-] = (k/2 + iw) X-", commutator(l, xm) - (k / 2 + i * w) * xm},
      {"[L,Y+] = (-k/2 + iw) Y+", commutator(l, yp) - (-k / 2 + i * w) * yp},
      {"[L,Y-] = (k/2 - iw) Y-", commutator(l, ym) - (k / 2 - i * w) * ym},
      {"[X-,X+] = -k", commutator(xm, xp) - Complex(-k) * id},
      {"[Y-,Y+] = -k", commutator(ym, yp) - Complex(-k) * id},
      {"[X+,Y+] = 0", commutator(xp, yp)},
      {"[X-,Y-] = 0", commutator(xm, ym)},
      {"[X+,Y-] = 0", commutator(xp, ym)},
      {"[X-,Y+] = 0", commutator(xm, yp)},
  };
  for (const auto& rel : relations) {
    const double err = interior_block_max(rel.defect.matrix, small, guard);
    report.add(err <= 1e-10, fmt((std::string(rel.name) + ": max interior defect %.3e").c_str(), err));
  }

  bool exact = true;
  for (int m = 0; m <= order_max; ++m)
    for (int n = 0; m + n <= order_max; ++n) exact = exact && ladder_eigenvalue(m, n, params) == eigenvalue(m + n, m - n, params);
  report.add(exact, "mu_{m,n} == lambda_{m+n,m-n} for m + n <= " + std::to_string(order_max));

  double worst = 0.0;
  for (int j = 0; j <= 6; ++j)
    for (int m = j; m >= 0; --m) {
      const LadderState s = build_eigenstate(m, j - m, params, dim);
      const SpectralMode mode = spectral_mode(j, 2 * m - j, params, dim);
      worst = std::max(worst, collinearity_defect(s.ket, mode.right));
    }
  report.add(worst <= 1e-8, fmt("collinearity with spectral kets, m + n <= 6: max defect %.3e", worst));

  const SpectralBasis basis(params, dim, order_max);
  double prop = 0.0;
  for (const auto& s : reference_corpus(params, dim)) {
    const DensityMatrix a = ladder_propagate(s.rho, 1.0, order_max, params);
    const DensityMatrix b = spectral_propagate(s.rho, 1.0, basis).rho;
    prop = std::max(prop, trace_distance(a.op, b.op));
  }
  report.add(prop <= tol, fmt(("ladder_propagate vs spectral_propagate, order " + std::to_string(order_max) +
                               ", t = 1: max trace distance %.3e")
                                  .c_str(),
                              prop));
  return report;
}

SuiteReport verify_completeness(const ModelParams& params, int dim, double tol) {
  SuiteReport report{"completeness", true, {}};
  const SpectralBasis basis(params, dim, 2 * dim);
  for (int n = 0; n <= 5 && n < dim; ++n) {
    const SpectralPropagator prop(basis, fock_state(n, dim));
    const double err = trace_norm(prop.partial_sum().matrix() - fock_state(n, dim).matrix());
    report.add(err <= tol, fmt(("partial sum j <= 2D for |" + std::to_string(n) + "><" + std::to_string(n) +
                                "|: trace-norm error %.3e")
                                   .c_str(),
                               err));
  }
  const int q_max = 30;
  const double bound = std::pow(params.xi, q_max);
  const FockOperator rec = alpha_reconstruction(0, 0, q_max, params, dim);
  const double err = (rec.matrix() - fock_state(0, dim).matrix()).cwiseAbs().maxCoeff();
  report.add(err <= bound, fmt(("alpha_q reconstruction of |0><0|, Q = 30: max entry error %.3e (bound " +
                                fmt("%.3e", bound) + ")")
                                   .c_str(),
                               err));
  return report;
}

}  // namespace lindblad
