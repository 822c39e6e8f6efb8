#pragma once

#include <string>
#include <vector>

#include "lindblad/core.hpp"

namespace lindblad {

// Self-check suites shared by the `verify` subcommand. Each returns a
// human-readable line per check group and an overall verdict.

struct SuiteReport {
  std::string suite;
  bool passed = true;
  std::vector<std::string> lines;

  void add(bool ok, const std::string& line);
};

/// identity_I over all p >= q >= r with p <= pmax, the recurrence for r >= 1,
/// alt_sum for p <= pmax, claim1_sum for n <= l <= 8, k <= 8 at xi in {1/2, 1/3, 2/5}
/// and the trace-moment formula for m, n <= 10 at xi in {1/2, 1/3}. All exact.
SuiteReport verify_identities(int pmax);

/// |tr(W_{j',k'} R_{j,k}) - delta| over all mode pairs with j, j' <= j_max.
SuiteReport verify_biorthogonality(const ModelParams& params, int dim, int j_max, double tol);

/// Commutators of the ladder superoperators on the interior block, mu = lambda,
/// ket/right-vector collinearity for m + n <= 6, and ladder_propagate against
/// spectral_propagate (j_max = order_max) on the reference corpus at t = 1.
SuiteReport verify_ladder(const ModelParams& params, int dim, int order_max, double tol);

/// Mode-sum partial sums at t = 0 with j_max = 2D for |n><n|, n <= 5 (trace
/// norm <= tol), and the alpha_q reconstruction of |0><0| at Q = 30 (max entry
/// error <= xi^Q).
SuiteReport verify_completeness(const ModelParams& params, int dim, double tol);

}  // namespace lindblad
