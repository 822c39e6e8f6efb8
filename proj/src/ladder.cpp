#include "lindblad/ladder.hpp"

#include <cmath>
#include <string>

#include "lindblad/spectral.hpp"

namespace lindblad {

FockOperator apply_ladder(Ladder which, const FockOperator& a, const ModelParams& params) {
  using E = Elementary;
  const Complex g(params.gamma), gp(params.gamma_prime);
  switch (which) {
    case Ladder::x_plus: return apply_elementary(E::l_plus, a) - apply_elementary(E::r_minus, a);
    case Ladder::x_minus: return gp * apply_elementary(E::r_plus, a) - g * apply_elementary(E::l_minus, a);
    case Ladder::y_plus: return apply_elementary(E::r_plus, a) - apply_elementary(E::l_minus, a);
    case Ladder::y_minus: return gp * apply_elementary(E::l_plus, a) - g * apply_elementary(E::r_minus, a);
  }
  throw std::logic_error("apply_ladder: unknown operator");
}

SuperOperator ladder_matrix(Ladder which, const ModelParams& params, int dim) {
  using E = Elementary;
  const Complex g(params.gamma), gp(params.gamma_prime);
  switch (which) {
    case Ladder::x_plus: return elementary_matrix(E::l_plus, dim) - elementary_matrix(E::r_minus, dim);
    case Ladder::x_minus: return gp * elementary_matrix(E::r_plus, dim) - g * elementary_matrix(E::l_minus, dim);
    case Ladder::y_plus: return elementary_matrix(E::r_plus, dim) - elementary_matrix(E::l_minus, dim);
    case Ladder::y_minus: return gp * elementary_matrix(E::l_plus, dim) - g * elementary_matrix(E::r_minus, dim);
  }
  throw std::logic_error("ladder_matrix: unknown operator");
}

FockOperator apply_ladder_dual(Ladder which, const FockOperator& w, const ModelParams& params) {
  const int dim = w.dim();
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  const Complex g(params.gamma), gp(params.gamma_prime);
  // L+ -> W a^dag, L- -> W a, R+ -> a W, R- -> a^dag W
  switch (which) {
    case Ladder::x_plus: return w * ad - ad * w;
    case Ladder::x_minus: return gp * (a * w) - g * (w * a);
    case Ladder::y_plus: return a * w - w * a;
    case Ladder::y_minus: return gp * (w * ad) - g * (ad * w);
  }
  throw std::logic_error("apply_ladder_dual: unknown operator");
}

Complex ladder_eigenvalue(int m, int n, const ModelParams& params) {
  if (m < 0 || n < 0) throw ParameterError("m,n", "ladder indices must be non-negative");
  return eigenvalue(m + n, m - n, params);
}

void require_ladder_guard(int m, int n, int dim) {
  if (m < 0 || n < 0) throw ParameterError("m,n", "ladder indices must be non-negative");
  if (4 * (m + n) > dim)
    throw ParameterError("m,n", "m + n = " + std::to_string(m + n) + " exceeds D/4 at D = " + std::to_string(dim));
}

namespace {

FockOperator ground_ket(const ModelParams& params, int dim) {
  Matrix m = Matrix::Zero(dim, dim);
  double w = 1.0;
  for (int n = 0; n < dim; ++n, w *= params.xi) m(n, n) = w;
  return FockOperator(std::move(m));
}

// Each ladder step reads one level past the truncation edge, so the
// products are formed on dim + m + n levels and cropped; the cropped block is
// then the exact restriction of the untruncated operator.
FockOperator crop(const FockOperator& a, int dim) { return FockOperator(a.matrix().topLeftCorner(dim, dim)); }

FockOperator raise(int m, int n, const ModelParams& params, int dim) {
  FockOperator out = ground_ket(params, dim + m + n);
  for (int i = 0; i < n; ++i) out = apply_ladder(Ladder::y_plus, out, params);
  for (int i = 0; i < m; ++i) out = apply_ladder(Ladder::x_plus, out, params);
  return crop(out, dim);
}

FockOperator lower_dual(int m, int n, const ModelParams& params, int dim) {
  // tr(W X-^m Y-^n rho): the X- duals act on W first.
  FockOperator w = Complex(1.0 - params.xi) * FockOperator::identity(dim + m + n);
  for (int i = 0; i < m; ++i) w = apply_ladder_dual(Ladder::x_minus, w, params);
  for (int i = 0; i < n; ++i) w = apply_ladder_dual(Ladder::y_minus, w, params);
  const double scale = std::tgamma(m + 1.0) * std::tgamma(n + 1.0) *
                       std::pow(params.gamma_prime - params.gamma, m + n);
  return Complex(1.0 / scale) * crop(w, dim);
}

}  // namespace

FockOperator dual_vector(int m, int n, const ModelParams& params, int dim) {
  require_ladder_guard(m, n, dim);
  return lower_dual(m, n, params, dim);
}

LadderState build_eigenstate(int m, int n, const ModelParams& params, int dim) {
  require_ladder_guard(m, n, dim);
  return {m, n, ladder_eigenvalue(m, n, params), raise(m, n, params, dim), lower_dual(m, n, params, dim)};
}

double ladder_residual(const LadderState& state, const ModelParams& params, int guard) {
  const FockOperator r = liouvillian_apply(params, state.ket) - state.mu * state.ket;
  return interior(r, guard).matrix().norm() / interior(state.ket, guard).matrix().norm();
}

double collinearity_defect(const FockOperator& u, const FockOperator& v) {
  require_same_dim(u, v, "collinearity_defect");
  const Matrix un = u.matrix() / u.matrix().norm();
  const Matrix vn = v.matrix() / v.matrix().norm();
  const Complex overlap = (vn.conjugate().cwiseProduct(un)).sum();  // <v, u>
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (un - phase * vn).norm();
}

DensityMatrix ladder_propagate(const DensityMatrix& rho0, double t, int order_max, const ModelParams& params) {
  if (order_max < 0) throw ParameterError("order_max", "must be non-negative");
  if (!(t >= 0.0)) throw ParameterError("t", "must be non-negative");
  const int dim = rho0.dim();
  Matrix out = Matrix::Zero(dim, dim);
  for (int j = 0; j <= order_max; ++j) {
    for (int m = j; m >= 0; --m) {
      const int n = j - m;
      const Complex weight = pairing(lower_dual(m, n, params, dim), rho0.op);
      if (weight == Complex(0.0)) continue;
      out += std::exp(ladder_eigenvalue(m, n, params) * t) * weight * raise(m, n, params, dim).matrix();
    }
  }
  return DensityMatrix{FockOperator(std::move(out))};
}

}  // namespace lindblad
