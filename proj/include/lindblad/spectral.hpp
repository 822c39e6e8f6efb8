#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lindblad/combinatorics.hpp"
#include "lindblad/core.hpp"

namespace lindblad {

// Closed-form spectral resolution of the damped-oscillator Liouvillian.
//
// Modes are labelled by a dissipation number j >= 0 and a phase number
// k in {-j, -j+2, ..., j}; l = (j - |k|)/2. For k >= 0
//
//   right  |j,k>> = sqrt(C) sum_m A_m (a^dag)^(k+m) xi^N a^m
//   left   W_{j,k} = sqrt(C) sum_n B_n (a^dag)^n a^(k+n)
//
// with A, B, C from spectral_coefficients(). Negative k is obtained by the
// adjoint of the k > 0 objects, so that Pi_{j,-k} rho = (Pi_{j,k} rho^dag)^dag.
//
// Pairing convention: the left object is stored as the operator W whose
// functional is rho -> tr(W rho), with no adjoint. The Hilbert-Schmidt bra
// <<B| = tr(B^dag .) is recovered with B = W^dag. This is the form in which
// the trace parts of the projections appear, e.g. Pi_{1,1} rho carries
// tr(a rho), so W_{1,1} is proportional to a.
//
// Matrix entries are exact: each entry is sqrt(C h! (h+k)!) times a finite
// rational sum, evaluated in rational arithmetic at a rationalized xi and
// rounded once. Each mode occupies the single diagonal at offset k.

/// Truncation guard for building a single mode: xi^(D-j) must fall below this.
inline constexpr double kTruncationTolerance = 1e-10;

Complex eigenvalue(int j, int k, const ModelParams& params);
void require_valid_mode(int j, int k);

/// Smallest D with xi^(D-j) < kTruncationTolerance.
int minimum_dimension(int j, const ModelParams& params);

/// Modes with j <= j_max, ordered by j ascending then k descending.
std::vector<std::pair<int, int>> mode_order(int j_max);

/// One mode stored as its nonzero diagonal. For k >= 0 the right vector sits
/// at (h+k, h) and the left operator at (h, h+k); for k < 0 both are
/// transposed. Entries are real.
struct ModeBand {
  int j = 0;
  int k = 0;
  int l = 0;
  Complex lambda;
  std::vector<double> right;  // length max(0, D - |k|)
  std::vector<double> left;

  FockOperator right_operator(int dim) const;
  FockOperator left_operator(int dim) const;
  /// tr(W rho)
  Complex pair(const FockOperator& rho) const;
  /// Adds coeff * right vector into `out`.
  void accumulate_right(Complex coeff, Matrix& out) const;
};

/// Computes one mode's band without the truncation guard.
ModeBand compute_mode_band(int j, int k, const ExactRational& xi, const ModelParams& params, int dim);

/// All modes with j <= j_max at dimension D. Immutable after construction.
/// No truncation guard is applied: high-j modes are needed for mode sums
/// even when their top entries are cut off.
class SpectralBasis {
 public:
  SpectralBasis(const ModelParams& params, int dim, int j_max);

  const ModelParams& params() const noexcept { return params_; }
  int dim() const noexcept { return dim_; }
  int j_max() const noexcept { return j_max_; }
  const ExactRational& xi() const noexcept { return xi_; }
  std::span<const ModeBand> modes() const noexcept { return modes_; }
  const ModeBand& mode(int j, int k) const;

 private:
  ModelParams params_;
  int dim_;
  int j_max_;
  ExactRational xi_;
  std::vector<ModeBand> modes_;  // in mode_order(j_max)
};

struct SpectralMode {
  int j;
  int k;
  int l;
  Complex lambda;
  FockOperator right;
  FockOperator left;
};

/// Throws TruncationError when dim < minimum_dimension(j).
SpectralMode spectral_mode(int j, int k, const ModelParams& params, int dim);
FockOperator right_vector(int j, int k, const ModelParams& params, int dim);
FockOperator left_vector(int j, int k, const ModelParams& params, int dim);

/// ||L R - lambda R||_F / ||R||_F for the right vector R.
double right_residual(const SpectralMode& mode, const ModelParams& params);

/// ||L^dag W^dag - conj(lambda) W^dag||_F / ||W^dag||_F restricted to the
/// leading D - guard levels (W is a polynomial in a and a^dag and the
/// truncated adjoint Liouvillian is wrong on the outermost levels).
double left_residual(const SpectralMode& mode, const ModelParams& params, int guard = 2);

/// tr(left * a)
Complex pairing(const FockOperator& left, const FockOperator& a);

/// Pi_{j,k} rho = |j,k>> tr(W_{j,k} rho)
FockOperator projection_apply(int j, int k, const FockOperator& rho, const ModelParams& params, int dim);

/// Sum_{q <= q_max} alpha_q (a^dag)^(q+m) xi^N a^(q+n) / sqrt(m! n!), which
/// tends to |m><n| as q_max grows. Entries are summed exactly and rounded once.
FockOperator alpha_reconstruction(int m, int n, int q_max, const ModelParams& params, int dim);

struct SpectralEvolution {
  DensityMatrix rho;
  /// trace norm of rho0 minus its projection on the retained modes, times
  /// exp(-(j_max+1) kappa t / 2)
  double remainder_estimate;
};

SpectralEvolution spectral_propagate(const DensityMatrix& rho0, double t, int j_max, const ModelParams& params, int dim);
SpectralEvolution spectral_propagate(const DensityMatrix& rho0, double t, const SpectralBasis& basis);

/// Precomputed projections of one initial state; evaluating further times
/// costs one pass over the modes.
class SpectralPropagator {
 public:
  SpectralPropagator(const SpectralBasis& basis, const DensityMatrix& rho0);
  SpectralEvolution at(double t) const;
  /// sum over retained modes of Pi rho0, i.e. the t = 0 partial sum
  FockOperator partial_sum() const;

 private:
  const SpectralBasis* basis_;
  std::vector<Complex> weights_;
  double residual_norm_;
};

}  // namespace lindblad
