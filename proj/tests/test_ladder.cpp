#include <doctest.h>

#include "lindblad/ladder.hpp"
#include "lindblad/oracle.hpp"
#include "lindblad/spectral.hpp"
#include "support.hpp"

using namespace lindblad;
using testing::max_abs;

namespace {

const ModelParams kStd = standard_params();

FockOperator xi_power(const ModelParams& p, int dim) {
  Matrix m = Matrix::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) m(n, n) = std::pow(p.xi, n);
  return FockOperator(std::move(m));
}

}  // namespace

TEST_CASE("lowering superoperators annihilate the Gibbs state") {
  const int d = 30;
  const FockOperator g = xi_power(kStd, d);
  for (Ladder which : {Ladder::x_minus, Ladder::y_minus}) {
    const FockOperator out = apply_ladder(which, g, kStd);
    CHECK(max_abs(interior(out, 1).matrix()) < 1e-15);
  }
  CHECK(max_abs(apply_ladder(Ladder::x_plus, g, kStd).matrix()) > 0.1);
}

TEST_CASE("matrix form agrees with direct application") {
  const ModelParams p = make_params(1.2, 0.9, 0.8);
  const int d = 7;
  std::mt19937_64 rng(testing::kSeed + 40);
  const FockOperator a = testing::random_operator(rng, d, d);
  for (Ladder which : {Ladder::x_plus, Ladder::x_minus, Ladder::y_plus, Ladder::y_minus}) {
    const SuperOperator s = ladder_matrix(which, p, d);
    CHECK(max_abs(s.apply(a).matrix() - apply_ladder(which, a, p).matrix()) < 1e-13);
    CHECK(max_abs(s.apply_trace_dual(a).matrix() - apply_ladder_dual(which, a, p).matrix()) < 1e-13);
  }
}

TEST_CASE("commutation relations on the interior") {
  const ModelParams p = make_params(1.0, 1.3, 0.6);
  const int d = 12;
  const SuperOperator l = liouvillian_matrix(p, d);
  const SuperOperator xp = ladder_matrix(Ladder::x_plus, p, d);
  const SuperOperator xm = ladder_matrix(Ladder::x_minus, p, d);
  const SuperOperator yp = ladder_matrix(Ladder::y_plus, p, d);
  const SuperOperator ym = ladder_matrix(Ladder::y_minus, p, d);
  const Complex plus_shift(-0.5 * p.kappa, -p.omega);  // [L, X+] = (-kappa/2 - i w) X+
  const Complex minus_shift(-0.5 * p.kappa, p.omega);
  std::mt19937_64 rng(testing::kSeed + 41);
  const FockOperator probe = testing::random_operator(rng, d - 4, d);
  auto check = [&](const SuperOperator& lhs, const SuperOperator& rhs) {
    const FockOperator diff = (lhs - rhs).apply(probe);
    CHECK(max_abs(interior(diff, 2).matrix()) < 1e-10);
  };
  const SuperOperator id = identity_superoperator(d);
  check(commutator(l, xp), plus_shift * xp);
  check(commutator(l, yp), minus_shift * yp);
  check(commutator(l, xm), Complex(-1.0) * (std::conj(minus_shift) * xm));
  check(commutator(l, ym), Complex(-1.0) * (std::conj(plus_shift) * ym));
  check(commutator(xp, yp), 0.0 * id);
  check(commutator(xm, ym), 0.0 * id);
  check(commutator(xp, ym), 0.0 * id);
  check(commutator(yp, xm), 0.0 * id);
  check(commutator(xm, xp), Complex(p.gamma_prime - p.gamma) * id);
  check(commutator(ym, yp), Complex(p.gamma_prime - p.gamma) * id);
}

TEST_CASE("eigenvalues and eigenvectors") {
  const int d = 40;
  CHECK(ladder_eigenvalue(0, 0, kStd) == Complex(0.0));
  CHECK(ladder_eigenvalue(2, 1, kStd) == eigenvalue(3, 1, kStd));
  CHECK(ladder_eigenvalue(1, 3, kStd) == eigenvalue(4, -2, kStd));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n + m <= 4; ++n) {
      const LadderState s = build_eigenstate(m, n, kStd, d);
      CHECK(s.mu == eigenvalue(m + n, m - n, kStd));
      CHECK(ladder_residual(s, kStd) < 1e-12);
    }
  const LadderState s00 = build_eigenstate(0, 0, kStd, d);
  CHECK(max_abs(s00.ket.matrix() - xi_power(kStd, d).matrix()) == 0.0);
  CHECK(max_abs(s00.bra.matrix() - 0.5 * Matrix::Identity(d, d)) == 0.0);
  // X+ Y+ rho_eq lies along the (2, 0) spectral mode
  const LadderState s11 = build_eigenstate(1, 1, kStd, d);
  CHECK(collinearity_defect(s11.ket, right_vector(2, 0, kStd, d)) < 1e-12);
}

TEST_CASE("bra-ket pairings") {
  const int d = 40;
  auto pair = [&](int m, int n, int mp, int np) {
    return pairing(dual_vector(m, n, kStd, d), build_eigenstate(mp, np, kStd, d).ket);
  };
  CHECK(std::abs(pair(0, 0, 0, 0) - 1.0) < 1e-10);
  CHECK(std::abs(pair(1, 0, 0, 1)) < 1e-12);
  CHECK(std::abs(pair(1, 1, 1, 1) - 1.0) < 1e-9);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n + m <= 2; ++n)
      for (int mp = 0; mp <= 2; ++mp)
        for (int np = 0; np + mp <= 2; ++np) {
          const double expected = (m == mp && n == np) ? 1.0 : 0.0;
          CHECK(std::abs(pair(m, n, mp, np) - expected) < 1e-9);
        }
}

TEST_CASE("ladder propagation") {
  const int d = 40;
  Matrix c = Matrix::Zero(d, d);
  c(1, 0) = 1.0;
  const DensityMatrix coherence{FockOperator(c)};
  // Against the oracle the error is the discarded high-order modes, which the
  // spectral remainder estimate bounds.
  for (double t : {0.5, 2.0, 8.0}) {
    const DensityMatrix a = ladder_propagate(coherence, t, 10, kStd);
    const DensityMatrix b = expm_propagate(coherence, t, kStd);
    const double bound = spectral_propagate(coherence, t, 10, kStd, d).remainder_estimate;
    CHECK(trace_norm(a.matrix() - b.matrix()) <= bound + 1e-9);
  }

  std::mt19937_64 rng(testing::kSeed + 42);
  const DensityMatrix rho = testing::random_density(rng, 3, d);
  const DensityMatrix lp = ladder_propagate(rho, 1.0, 8, kStd);
  const DensityMatrix sp = spectral_propagate(rho, 1.0, 8, kStd, d).rho;
  CHECK(max_abs(lp.matrix() - sp.matrix()) < 1e-12);
}

TEST_CASE("guard") {
  CHECK_NOTHROW(require_ladder_guard(5, 5, 40));
  CHECK_THROWS_AS(require_ladder_guard(6, 5, 40), ParameterError);
  CHECK_THROWS_AS(build_eigenstate(3, 0, kStd, 10), ParameterError);
  CHECK_THROWS_AS(build_eigenstate(-1, 0, kStd, 10), ParameterError);
}
