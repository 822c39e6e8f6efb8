#pragma once

#include "lindblad/core.hpp"
#include "lindblad/superop.hpp"

namespace lindblad {

// Ladder superoperators built from the elementary left/right multiplications:
//
//   X+ = L+ - R-          X- = g' R+ - g L-
//   Y+ = R+ - L-          Y- = g' L+ - g R-
//
// X- and Y- annihilate the Gibbs state; X+ and Y+ shift the Liouvillian
// eigenvalue by -kappa/2 -+ i w. Eigenstates are X+^m Y+^n e^{-beta w N},
// with eigenvalue mu_{m,n} = lambda_{m+n, m-n}.
//
// Normalization: the ground state is e^{-beta w N} itself (constant 1) and the
// dual ground functional is (1 - xi) 1, so their pairing is 1.
//
// Kets and bras are the exact restrictions to levels 0..D-1 of the
// untruncated operators (the products are formed on D + m + n levels).

enum class Ladder { x_plus, x_minus, y_plus, y_minus };

FockOperator apply_ladder(Ladder which, const FockOperator& a, const ModelParams& params);
SuperOperator ladder_matrix(Ladder which, const ModelParams& params, int dim);

/// Trace-dual action W -> W' with tr(W' rho) = tr(W (S rho)). Computed
/// directly: for S rho = X rho Y the dual is W -> Y W X.
FockOperator apply_ladder_dual(Ladder which, const FockOperator& w, const ModelParams& params);

struct LadderState {
  int m;
  int n;
  Complex mu;
  FockOperator ket;
  FockOperator bra;  // functional rho -> tr(bra rho)
};

Complex ladder_eigenvalue(int m, int n, const ModelParams& params);

/// Throws ParameterError when m + n > D/4.
void require_ladder_guard(int m, int n, int dim);

/// Ket and dual for (m, n); the bra is filled as in dual_vector.
LadderState build_eigenstate(int m, int n, const ModelParams& params, int dim);

/// bra_{m,n} = bra0 X-^m Y-^n / (m! n! (g' - g)^{m+n}), acting on the bra side.
FockOperator dual_vector(int m, int n, const ModelParams& params, int dim);

/// ||L ket - mu ket||_F / ||ket||_F on the leading D - guard levels.
double ladder_residual(const LadderState& state, const ModelParams& params, int guard = 2);

/// || u/|u| - e^{i theta} v/|v| ||_F with theta chosen to minimize it
/// (theta = arg <v, u>).
double collinearity_defect(const FockOperator& u, const FockOperator& v);

/// sum_{m+n <= order_max} e^{mu t} tr(bra_{m,n} rho0) ket_{m,n}
DensityMatrix ladder_propagate(const DensityMatrix& rho0, double t, int order_max, const ModelParams& params);

}  // namespace lindblad
