#pragma once

#include "lindblad/core.hpp"

namespace lindblad {

// Vectorization convention (normative): column stacking,
//
//   vec(A)[i + D*j] = A(i, j).
//
// Under this convention the map rho -> X rho Y^dag has the D^2 x D^2 matrix
// kron(conj(Y), X). Every superoperator matrix in this library is built from
// that identity, so matrices are comparable entry by entry.

Vector vectorize(const FockOperator& a);
FockOperator devectorize(const Vector& v);

/// Linear map on FockOperators stored as a dim^2 x dim^2 matrix.
struct SuperOperator {
  int dim = 0;
  Matrix matrix;

  FockOperator apply(const FockOperator& a) const;
  /// Trace dual: the map W -> W' with tr(W' rho) = tr(W S(rho)) for all rho.
  /// Under column stacking tr(W rho) = vec(W^T) . vec(rho), so the dual is
  /// the plain transpose of `matrix` (not the Hilbert-Schmidt adjoint).
  FockOperator apply_trace_dual(const FockOperator& w) const;
  SuperOperator adjoint() const { return {dim, matrix.adjoint()}; }
};

SuperOperator operator+(const SuperOperator& a, const SuperOperator& b);
SuperOperator operator-(const SuperOperator& a, const SuperOperator& b);
SuperOperator operator*(const SuperOperator& a, const SuperOperator& b);
SuperOperator operator*(Complex s, const SuperOperator& a);
SuperOperator commutator(const SuperOperator& a, const SuperOperator& b);
SuperOperator identity_superoperator(int dim);

/// Matrix of rho -> X rho Y^dag.
SuperOperator sandwich(const FockOperator& x, const FockOperator& y);

/// L rho = -i[H, rho] + gamma (a rho a^dag - {a^dag a, rho}/2)
///                    + gamma' (a^dag rho a - {a a^dag, rho}/2)
SuperOperator liouvillian_matrix(const ModelParams& params, int dim);
FockOperator liouvillian_apply(const ModelParams& params, const FockOperator& a);

/// Hilbert-Schmidt adjoint of the Liouvillian:
/// L^dag rho = i[H, rho] + gamma (a^dag rho a - {a^dag a, rho}/2)
///                       + gamma' (a rho a^dag - {a a^dag, rho}/2)
FockOperator adjoint_liouvillian_apply(const ModelParams& params, const FockOperator& a);

// K1 rho = a rho a^dag, K2 rho = a^dag rho a, K3 rho = {N + 1/2, rho}.
// They close an sl(2) algebra away from the truncation edge; K2 drops
// whatever would be pushed above level dim-1.
enum class KOperator { k1 = 1, k2 = 2, k3 = 3 };
FockOperator apply_K(KOperator which, const FockOperator& a);
SuperOperator K_matrix(KOperator which, int dim);

// L+ rho = a^dag rho, L- rho = a rho, R+ rho = rho a, R- rho = rho a^dag.
enum class Elementary { l_plus, l_minus, r_plus, r_minus };
FockOperator apply_elementary(Elementary which, const FockOperator& a);
SuperOperator elementary_matrix(Elementary which, int dim);

/// The Liouvillian rebuilt from elementary actions:
/// -i w (L+L- - R+R-) + g L-R- + g' L+R+ - gbar (L+L- + R+R-) - g'.
/// Agrees with liouvillian_matrix away from the truncation edge only.
SuperOperator liouvillian_from_elementary(const ModelParams& params, int dim);

}  // namespace lindblad
