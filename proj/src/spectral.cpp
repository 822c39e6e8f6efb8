#include "lindblad/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "lindblad/superop.hpp"

namespace lindblad {

Complex eigenvalue(int j, int k, const ModelParams& params) {
  require_valid_mode(j, k);
  return Complex(-0.5 * j * params.kappa + 0.0, -k * params.omega + 0.0);  // + 0.0 avoids printing -0
}

void require_valid_mode(int j, int k) {
  if (j < 0) throw ParameterError("j", "must be non-negative");
  if (std::abs(k) > j || (j - std::abs(k)) % 2 != 0)
    throw ParameterError("k", "need |k| <= j and j - |k| even (got j=" + std::to_string(j) + ", k=" + std::to_string(k) + ")");
}

int minimum_dimension(int j, const ModelParams& params) {
  const double levels = std::log(kTruncationTolerance) / std::log(params.xi);
  return std::max(2, j + static_cast<int>(std::floor(levels)) + 1);
}

std::vector<std::pair<int, int>> mode_order(int j_max) {
  std::vector<std::pair<int, int>> out;
  for (int j = 0; j <= j_max; ++j)
    for (int k = j; k >= -j; k -= 2) out.emplace_back(j, k);
  return out;
}

FockOperator ModeBand::right_operator(int dim) const {
  Matrix m = Matrix::Zero(dim, dim);
  const int off = std::abs(k);
  for (std::size_t h = 0; h < right.size(); ++h) {
    const auto i = static_cast<Eigen::Index>(h);
    if (k >= 0)
      m(i + off, i) = right[h];
    else
      m(i, i + off) = right[h];
  }
  return FockOperator(std::move(m));
}

FockOperator ModeBand::left_operator(int dim) const {
  Matrix m = Matrix::Zero(dim, dim);
  const int off = std::abs(k);
  for (std::size_t h = 0; h < left.size(); ++h) {
    const auto i = static_cast<Eigen::Index>(h);
    if (k >= 0)
      m(i, i + off) = left[h];
    else
      m(i + off, i) = left[h];
  }
  return FockOperator(std::move(m));
}

Complex ModeBand::pair(const FockOperator& rho) const {
  const int off = std::abs(k);
  if (left.empty()) return Complex(0.0);
  if (rho.dim() != off + static_cast<int>(left.size())) throw DimensionError("ModeBand::pair: dimension mismatch");
  Complex sum(0.0);
  for (std::size_t h = 0; h < left.size(); ++h) {
    const auto i = static_cast<int>(h);
    sum += left[h] * (k >= 0 ? rho(i + off, i) : rho(i, i + off));
  }
  return sum;
}

void ModeBand::accumulate_right(Complex coeff, Matrix& out) const {
  const int off = std::abs(k);
  for (std::size_t h = 0; h < right.size(); ++h) {
    const auto i = static_cast<Eigen::Index>(h);
    if (k >= 0)
      out(i + off, i) += coeff * right[h];
    else
      out(i, i + off) += coeff * right[h];
  }
}

namespace {

double signed_sqrt(const ExactRational& square, int sign) {
  const double mag = std::sqrt(to_double(square));
  return sign < 0 ? -mag : mag;
}

}  // namespace

ModeBand compute_mode_band(int j, int k, const ExactRational& xi, const ModelParams& params, int dim) {
  require_valid_mode(j, k);
  ModeBand band;
  band.j = j;
  band.k = k;
  band.lambda = eigenvalue(j, k, params);
  const int kk = std::abs(k);
  band.l = (j - kk) / 2;
  const int len = std::max(0, dim - kk);
  band.right.assign(static_cast<std::size_t>(len), 0.0);
  band.left.assign(static_cast<std::size_t>(len), 0.0);
  if (len == 0) return band;

  const SpectralCoefficients c = spectral_coefficients(kk, band.l, xi);

  // xi^i / i! and 1 / i!
  std::vector<ExactRational> xi_over_fact(static_cast<std::size_t>(len));
  std::vector<ExactRational> inv_fact(static_cast<std::size_t>(len));
  ExactRational xi_pow(1);
  for (int i = 0; i < len; ++i) {
    inv_fact[static_cast<std::size_t>(i)] = ExactRational(BigInt(1), factorial(i));
    xi_over_fact[static_cast<std::size_t>(i)] = xi_pow * inv_fact[static_cast<std::size_t>(i)];
    xi_pow *= xi;
  }

  for (int h = 0; h < len; ++h) {
    // <h+k| (a^dag)^(k+m) xi^N a^m |h> = sqrt(h! (h+k)!) xi^(h-m) / (h-m)!
    // <h| (a^dag)^n a^(k+n) |h+k>     = sqrt(h! (h+k)!) / (h-n)!
    ExactRational sum_right(0), sum_left(0);
    for (int m = 0; m <= std::min(band.l, h); ++m) {
      const auto hm = static_cast<std::size_t>(h - m);
      sum_right += c.A[static_cast<std::size_t>(m)] * xi_over_fact[hm];
      sum_left += c.B[static_cast<std::size_t>(m)] * inv_fact[hm];
    }
    const ExactRational scale = c.C * ExactRational(factorial(h) * factorial(h + kk));
    const auto idx = static_cast<std::size_t>(h);
    if (sum_right != 0) band.right[idx] = signed_sqrt(scale * sum_right * sum_right, sign(sum_right));
    if (sum_left != 0) band.left[idx] = signed_sqrt(scale * sum_left * sum_left, sign(sum_left));
  }
  return band;
}

SpectralBasis::SpectralBasis(const ModelParams& params, int dim, int j_max)
    : params_(params), dim_(dim), j_max_(j_max), xi_(rationalize(params.xi)) {
  if (dim < 2) throw ParameterError("dim", "truncation dimension must be at least 2");
  if (j_max < 0) throw ParameterError("j_max", "must be non-negative");
  for (const auto& [j, k] : mode_order(j_max)) modes_.push_back(compute_mode_band(j, k, xi_, params_, dim_));
}

const ModeBand& SpectralBasis::mode(int j, int k) const {
  require_valid_mode(j, k);
  if (j > j_max_) throw ParameterError("j", "beyond the basis' j_max");
  // Offset of (j, k) in mode_order: j(j+1)/2 earlier modes, then (j-k)/2.
  const auto index = static_cast<std::size_t>(j * (j + 1) / 2 + (j - k) / 2);
  return modes_[index];
}

namespace {

void require_guard(int j, const ModelParams& params, int dim) {
  const int need = minimum_dimension(j, params);
  if (dim < need)
    throw TruncationError("dimension " + std::to_string(dim) + " too small for mode j=" + std::to_string(j) +
                              "; need at least " + std::to_string(need),
                          need);
}

}  // namespace

SpectralMode spectral_mode(int j, int k, const ModelParams& params, int dim) {
  require_valid_mode(j, k);
  require_guard(j, params, dim);
  const ModeBand band = compute_mode_band(j, k, rationalize(params.xi), params, dim);
  return SpectralMode{j, k, band.l, band.lambda, band.right_operator(dim), band.left_operator(dim)};
}

FockOperator right_vector(int j, int k, const ModelParams& params, int dim) {
  return spectral_mode(j, k, params, dim).right;
}

FockOperator left_vector(int j, int k, const ModelParams& params, int dim) {
  return spectral_mode(j, k, params, dim).left;
}

double right_residual(const SpectralMode& mode, const ModelParams& params) {
  const FockOperator r = liouvillian_apply(params, mode.right) - mode.lambda * mode.right;
  return r.matrix().norm() / mode.right.matrix().norm();
}

double left_residual(const SpectralMode& mode, const ModelParams& params, int guard) {
  const FockOperator w = mode.left.adjoint();
  const FockOperator r = adjoint_liouvillian_apply(params, w) - std::conj(mode.lambda) * w;
  return interior(r, guard).matrix().norm() / interior(w, guard).matrix().norm();
}

Complex pairing(const FockOperator& left, const FockOperator& a) {
  require_same_dim(left, a, "pairing");
  return (left.matrix().transpose().cwiseProduct(a.matrix())).sum();
}

FockOperator projection_apply(int j, int k, const FockOperator& rho, const ModelParams& params, int dim) {
  if (rho.dim() != dim) throw DimensionError("projection_apply: dimension mismatch");
  const SpectralMode mode = spectral_mode(j, k, params, dim);
  return pairing(mode.left, rho) * mode.right;
}

FockOperator alpha_reconstruction(int m, int n, int q_max, const ModelParams& params, int dim) {
  if (m < 0 || n < 0 || m >= dim || n >= dim) throw ParameterError("m,n", "levels must lie in [0, D)");
  if (q_max < 0) throw ParameterError("q_max", "must be non-negative");
  const ExactRational xi = rationalize(params.xi);
  const std::vector<ExactRational> alpha = completeness_alpha(q_max, xi);
  Matrix out = Matrix::Zero(dim, dim);
  // Column h maps to row h - n + m with weight
  //   sqrt(h! (h-n+m)! / (m! n!)) sum_q alpha_q xi^(h-n-q) / (h-n-q)!.
  for (int h = n; h < dim && h - n + m < dim; ++h) {
    const int top = h - n;
    ExactRational sum(0);
    ExactRational xi_pow(1);  // xi^(top - q), built from q = top downwards
    for (int q = top; q >= 0; --q) {
      if (q <= q_max) sum += alpha[static_cast<std::size_t>(q)] * xi_pow / ExactRational(factorial(top - q));
      xi_pow *= xi;
    }
    if (sum == 0) continue;
    const ExactRational scale(factorial(h) * factorial(top + m), factorial(m) * factorial(n));
    out(top + m, h) = signed_sqrt(scale * sum * sum, sign(sum));
  }
  return FockOperator(std::move(out));
}

SpectralPropagator::SpectralPropagator(const SpectralBasis& basis, const DensityMatrix& rho0) : basis_(&basis) {
  if (rho0.dim() != basis.dim()) throw DimensionError("spectral propagation: dimension mismatch");
  weights_.reserve(basis.modes().size());
  for (const ModeBand& band : basis.modes()) weights_.push_back(band.pair(rho0.op));
  residual_norm_ = trace_norm(rho0.matrix() - partial_sum().matrix());
}

FockOperator SpectralPropagator::partial_sum() const {
  const int dim = basis_->dim();
  Matrix out = Matrix::Zero(dim, dim);
  const auto modes = basis_->modes();
  for (std::size_t i = 0; i < modes.size(); ++i)
    if (weights_[i] != Complex(0.0)) modes[i].accumulate_right(weights_[i], out);
  return FockOperator(std::move(out));
}

SpectralEvolution SpectralPropagator::at(double t) const {
  if (!(t >= 0.0)) throw ParameterError("t", "must be non-negative");
  const int dim = basis_->dim();
  Matrix out = Matrix::Zero(dim, dim);
  const auto modes = basis_->modes();
  for (std::size_t i = 0; i < modes.size(); ++i) {
    if (weights_[i] == Complex(0.0)) continue;
    modes[i].accumulate_right(std::exp(modes[i].lambda * t) * weights_[i], out);
  }
  const double decay = std::exp(-0.5 * (basis_->j_max() + 1) * basis_->params().kappa * t);
  return SpectralEvolution{DensityMatrix{FockOperator(std::move(out))}, residual_norm_ * decay};
}

SpectralEvolution spectral_propagate(const DensityMatrix& rho0, double t, const SpectralBasis& basis) {
  return SpectralPropagator(basis, rho0).at(t);
}

SpectralEvolution spectral_propagate(const DensityMatrix& rho0, double t, int j_max, const ModelParams& params,
                                     int dim) {
  const SpectralBasis basis(params, dim, j_max);
  return spectral_propagate(rho0, t, basis);
}

}  // namespace lindblad
