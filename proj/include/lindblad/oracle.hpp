#pragma once

#include <vector>

#include "lindblad/core.hpp"
#include "lindblad/superop.hpp"

namespace lindblad {

// Brute-force reference built only from the vectorized Liouvillian matrix.
//
// The matrix is split into the connected components of its sparsity graph
// (for this model they are the coherence diagonals k = m - n, each of size
// D - |k|); exponentials and eigenvalues are taken block by block with
// Eigen's dense kernels. Nothing here uses the closed-form results.

inline constexpr int kOracleMaxDim = 64;
inline constexpr int kSpectrumMaxDim = 40;

/// Index sets of the connected components of the nonzero pattern of `m`,
/// each sorted ascending, ordered by their smallest index.
std::vector<std::vector<Eigen::Index>> invariant_blocks(const Matrix& m);

/// Reusable e^{tL}: blocks and their matrices are extracted once.
class ExpmPropagator {
 public:
  ExpmPropagator(const ModelParams& params, int dim);
  DensityMatrix at(const DensityMatrix& rho0, double t) const;
  int dim() const noexcept { return dim_; }

 private:
  int dim_;
  std::vector<std::vector<Eigen::Index>> blocks_;
  std::vector<Matrix> generators_;
};

/// devec(expm(t L) vec(rho0)) via the block split. Throws DimensionError for D > 64.
DensityMatrix expm_propagate(const DensityMatrix& rho0, double t, const ModelParams& params);

/// Same, exponentiating the full D^2 x D^2 matrix (scaling and squaring with a
/// Pade kernel). Only for cross-checking the block split at small D.
DensityMatrix expm_propagate_dense(const DensityMatrix& rho0, double t, const ModelParams& params);

/// All D^2 eigenvalues of the Liouvillian matrix. Throws DimensionError for D > 40.
std::vector<Complex> numerical_spectrum(const ModelParams& params, int dim);

struct SpectrumMatch {
  int j;
  int k;
  Complex closed_form;
  Complex numerical;
  double error;
};

struct SpectrumReport {
  std::vector<SpectrumMatch> matches;  // in mode order
  double max_error = 0.0;
  bool all_within(double tol) const { return max_error <= tol; }
};

/// Greedy matching: each closed-form lambda_{j,k}, j <= j_cut, in mode order
/// takes the nearest unused numerical eigenvalue. j_cut < 0 means D/4.
SpectrumReport match_spectrum(const std::vector<Complex>& numerical, const ModelParams& params, int dim,
                              int j_cut = -1);

}  // namespace lindblad
