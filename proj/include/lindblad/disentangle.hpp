#pragma once

#include "lindblad/core.hpp"

namespace lindblad {

// Exact propagator written as a product of exponentials of
//   K1 rho = a rho a^dag,  K2 rho = a^dag rho a,  K3 rho = {N + 1/2, rho},
// whose coefficient functions solve a Riccati system in closed form:
//
//   f1(t) = (1 - e^{-kappa t}) / (1 - xi e^{-kappa t})
//   f2(t) = e^{2 gbar t} xi f1(t)
//   f3(t) = gamma t - ln((e^{kappa t} - xi) / (1 - xi))

struct DisentangleCoeffs {
  double t;
  double f1;
  double f2;
  double f3;
};

DisentangleCoeffs f_functions(double t, const ModelParams& params);

enum class DisentangleForm {
  automatic,  // product form while t * gamma_bar <= 20 and it stays finite, rescaled otherwise
  product,    // e^{(-i Omega N - g'/2)t} [e^{f2 K2} e^{f3 K3} e^{f1 K1} rho0] e^{(i Omega* N - g'/2)t}
  rescaled,   // f(x) e^{xi f1 K2} [D_t (e^{f1 K1} rho0) D_t^dag], x = e^{-kappa t}
};

struct DisentangleOptions {
  /// rho0 must be negligible (<= support_tolerance) on the top `buffer` levels.
  int buffer = 8;
  double support_tolerance = 1e-8;
  /// Population that e^{f2 K2} may push onto level D-1 before the result is rejected.
  double top_level_tolerance = 1e-10;
  DisentangleForm form = DisentangleForm::automatic;
};

/// The rescaled form uses 1 - x f(x) = f1 and f2 e^{-2 gbar t} = xi f1 with
/// f(x) = (1 - xi)/(1 - xi x) and D_t = diag((e^{-i w t} sqrt(x) f(x))^n), so
/// no factor grows with t. The K1 and K2 exponentials are finite power series
/// (a is nilpotent on the truncated space). Throws TruncationError when the
/// support or top-level checks fail.
DensityMatrix disentangled_propagate(const DensityMatrix& rho0, double t, const ModelParams& params,
                                     const DisentangleOptions& options = {});

}  // namespace lindblad
