#include <doctest.h>

#include "lindblad/superop.hpp"
#include "support.hpp"

using namespace lindblad;
using testing::max_abs;

namespace {

/// Largest entry of (a - b) on the leading dim - guard levels.
double interior_diff(const FockOperator& a, const FockOperator& b, int guard) {
  return max_abs(interior(a - b, guard).matrix());
}

}  // namespace

TEST_CASE("column-stacking convention") {
  Matrix m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  const Vector v = vectorize(FockOperator(m));
  CHECK(v(0) == Complex(1.0));
  CHECK(v(1) == Complex(3.0));
  CHECK(v(2) == Complex(2.0));
  CHECK(v(3) == Complex(4.0));
  CHECK(max_abs(devectorize(v).matrix() - m) == 0.0);
  CHECK_THROWS_AS(devectorize(Vector::Zero(5)), DimensionError);
}

TEST_CASE("sandwich realizes X A Y^dag (property, seeded)") {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 5;
    const FockOperator x = testing::random_operator(rng, d, d);
    const FockOperator y = testing::random_operator(rng, d, d);
    const FockOperator a = testing::random_operator(rng, d, d);
    const FockOperator direct = x * a * y.adjoint();
    CHECK(max_abs(sandwich(x, y).apply(a).matrix() - direct.matrix()) < 1e-12);
  }
}

TEST_CASE("Liouvillian matrix agrees with the direct action (property, seeded)") {
  const ModelParams p = make_params(1.3, 0.7, 0.9);
  const SuperOperator l = liouvillian_matrix(p, 7);
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 10; ++trial) {
    const FockOperator a = testing::random_operator(rng, 7, 7);
    CHECK(max_abs(l.apply(a).matrix() - liouvillian_apply(p, a).matrix()) < 1e-12);
  }
}

TEST_CASE("Liouvillian preserves trace and Hermiticity") {
  const ModelParams p = standard_params();
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 10; ++trial) {
    const DensityMatrix rho = testing::random_density(rng, 5, 8);
    const FockOperator lr = liouvillian_apply(p, rho.op);
    CHECK(std::abs(lr.trace()) < 1e-13);
    CHECK(max_abs(lr.matrix() - lr.matrix().adjoint()) < 1e-13);
  }
}

TEST_CASE("Gibbs state is stationary up to the truncation edge") {
  const ModelParams p = standard_params();
  const FockOperator l_eq = liouvillian_apply(p, gibbs_state(p, 12).op);
  CHECK(max_abs(interior(l_eq, 1).matrix()) < 1e-15);
}

TEST_CASE("adjoint Liouvillian is the Hilbert-Schmidt adjoint") {
  const ModelParams p = make_params(1.0, 0.8, 1.1);
  std::mt19937_64 rng(testing::kSeed + 3);
  const int d = 6;
  for (int trial = 0; trial < 5; ++trial) {
    const FockOperator a = testing::random_operator(rng, d, d);
    const FockOperator b = testing::random_operator(rng, d, d);
    // tr(B^dag L A) == tr((L^dag B)^dag A)
    const Complex lhs = (b.adjoint() * liouvillian_apply(p, a)).trace();
    const Complex rhs = (adjoint_liouvillian_apply(p, b).adjoint() * a).trace();
    CHECK(std::abs(lhs - rhs) < 1e-11);
    CHECK(max_abs(liouvillian_matrix(p, d).adjoint().apply(b).matrix() - adjoint_liouvillian_apply(p, b).matrix()) <
          1e-12);
  }
}

TEST_CASE("trace dual: tr(S*(W) rho) == tr(W S(rho))") {
  std::mt19937_64 rng(testing::kSeed + 4);
  const int d = 5;
  const SuperOperator s{d, liouvillian_matrix(standard_params(), d).matrix};
  for (int trial = 0; trial < 5; ++trial) {
    const FockOperator w = testing::random_operator(rng, d, d);
    const FockOperator rho = testing::random_operator(rng, d, d);
    const Complex lhs = (s.apply_trace_dual(w) * rho).trace();
    const Complex rhs = (w * s.apply(rho)).trace();
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
  // X rho Y has dual W -> Y W X
  const FockOperator x = testing::random_operator(rng, d, d);
  const FockOperator y = testing::random_operator(rng, d, d);
  const FockOperator w = testing::random_operator(rng, d, d);
  CHECK(max_abs(sandwich(x, y.adjoint()).apply_trace_dual(w).matrix() - (y * w * x).matrix()) < 1e-12);
}

TEST_CASE("K operators: matrices, actions and the sl(2) relations") {
  const int d = 10;
  std::mt19937_64 rng(testing::kSeed + 5);
  const FockOperator a = testing::random_operator(rng, 6, d);
  for (KOperator k : {KOperator::k1, KOperator::k2, KOperator::k3})
    CHECK(max_abs(K_matrix(k, d).apply(a).matrix() - apply_K(k, a).matrix()) < 1e-12);

  const SuperOperator k1 = K_matrix(KOperator::k1, d);
  const SuperOperator k2 = K_matrix(KOperator::k2, d);
  const SuperOperator k3 = K_matrix(KOperator::k3, d);
  // [K1, K2] = K3, [K3, K1] = -2 K1, [K3, K2] = 2 K2 on interior-supported input
  CHECK(interior_diff(commutator(k1, k2).apply(a), k3.apply(a), 2) < 1e-11);
  CHECK(interior_diff(commutator(k3, k1).apply(a), Complex(-2.0) * k1.apply(a), 2) < 1e-11);
  CHECK(interior_diff(commutator(k3, k2).apply(a), Complex(2.0) * k2.apply(a), 2) < 1e-11);
}

TEST_CASE("elementary actions and their algebra") {
  const int d = 9;
  std::mt19937_64 rng(testing::kSeed + 6);
  const FockOperator a = testing::random_operator(rng, 5, d);
  for (Elementary e : {Elementary::l_plus, Elementary::l_minus, Elementary::r_plus, Elementary::r_minus})
    CHECK(max_abs(elementary_matrix(e, d).apply(a).matrix() - apply_elementary(e, a).matrix()) < 1e-12);
  const auto lp = elementary_matrix(Elementary::l_plus, d);
  const auto lm = elementary_matrix(Elementary::l_minus, d);
  const auto rp = elementary_matrix(Elementary::r_plus, d);
  const auto rm = elementary_matrix(Elementary::r_minus, d);
  // [L-, L+] = [R-, R+] = 1, mixed pairs commute
  CHECK(interior_diff(commutator(lm, lp).apply(a), a, 1) < 1e-12);
  CHECK(interior_diff(commutator(rm, rp).apply(a), a, 1) < 1e-12);
  CHECK(max_abs(commutator(lp, rp).matrix) < 1e-12);
  CHECK(max_abs(commutator(lm, rm).matrix) < 1e-12);
}

TEST_CASE("Liouvillian rebuilt from elementary actions") {
  const ModelParams p = make_params(1.0, 1.5, 0.4);
  const int d = 9;
  std::mt19937_64 rng(testing::kSeed + 7);
  const FockOperator a = testing::random_operator(rng, 6, d);
  const FockOperator lhs = liouvillian_from_elementary(p, d).apply(a);
  CHECK(interior_diff(lhs, liouvillian_apply(p, a), 1) < 1e-12);
}
