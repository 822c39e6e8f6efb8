#include "lindblad/disentangle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lindblad {

DisentangleCoeffs f_functions(double t, const ModelParams& params) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("t", "must be finite and non-negative");
  const double xi = params.xi;
  const double decay = -std::expm1(-params.kappa * t);  // 1 - e^{-kappa t}
  const double f1 = decay / (1.0 - xi * std::exp(-params.kappa * t));
  const double f2 = std::exp(2.0 * params.gamma_bar * t) * xi * f1;
  // ln((e^{kt} - xi)/(1 - xi)) = kt + ln((1 - xi e^{-kt})/(1 - xi)) = kt + log1p(xi decay/(1 - xi))
  const double f3 = params.gamma * t - (params.kappa * t + std::log1p(xi * decay / (1.0 - xi)));
  return {t, f1, f2, f3};
}

namespace {

/// sum_p s^p/p! a^p rho (a^dag)^p, exact because a^D = 0.
Matrix exp_K1(double s, const Matrix& rho) {
  const auto dim = rho.rows();
  const Matrix a = annihilation(static_cast<int>(dim)).matrix();
  Matrix term = rho;
  Matrix out = rho;
  for (Eigen::Index p = 1; p < dim && s != 0.0; ++p) {
    term = (s / static_cast<double>(p)) * (a * term * a.adjoint());
    out += term;
  }
  return out;
}

/// sum_p s^p/p! (a^dag)^p rho a^p with the truncated a^dag.
Matrix exp_K2(double s, const Matrix& rho) {
  const auto dim = rho.rows();
  const Matrix ad = creation(static_cast<int>(dim)).matrix();
  Matrix term = rho;
  Matrix out = rho;
  for (Eigen::Index p = 1; p < dim && s != 0.0; ++p) {
    term = (s / static_cast<double>(p)) * (ad * term * ad.adjoint());
    out += term;
  }
  return out;
}

/// diag(d) * m * diag(d)^dag
Matrix two_sided(const Vector& d, const Matrix& m) { return d.asDiagonal() * m * d.conjugate().asDiagonal(); }

Matrix product_form(const Matrix& rho0, const DisentangleCoeffs& f, const ModelParams& params) {
  const auto dim = rho0.rows();
  Vector k3(dim), outer(dim);
  const Complex minus_i_omega = Complex(0.0, -1.0) * params.omega_complex;
  for (Eigen::Index n = 0; n < dim; ++n) {
    const double level = static_cast<double>(n);
    k3(n) = std::exp(f.f3 * (level + 0.5));
    outer(n) = std::exp((minus_i_omega * level - 0.5 * params.gamma_prime) * f.t);
  }
  const Matrix inner = exp_K2(f.f2, two_sided(k3, exp_K1(f.f1, rho0)));
  return two_sided(outer, inner);
}

Matrix rescaled_form(const Matrix& rho0, const DisentangleCoeffs& f, const ModelParams& params) {
  const auto dim = rho0.rows();
  const double x = std::exp(-params.kappa * f.t);
  const double fx = (1.0 - params.xi) / (1.0 - params.xi * x);
  const Complex base = std::polar(std::sqrt(x) * fx, -params.omega * f.t);
  Vector d(dim);
  Complex power(1.0);
  for (Eigen::Index n = 0; n < dim; ++n) {
    d(n) = power;
    power *= base;
  }
  return fx * exp_K2(params.xi * f.f1, two_sided(d, exp_K1(f.f1, rho0)));
}

}  // namespace

DensityMatrix disentangled_propagate(const DensityMatrix& rho0, double t, const ModelParams& params,
                                     const DisentangleOptions& options) {
  const int dim = rho0.dim();
  if (options.buffer < 0 || options.buffer >= dim) throw ParameterError("buffer", "must lie in [0, D)");
  const double outside = outside_interior(rho0.op, options.buffer);
  if (outside > options.support_tolerance)
    throw TruncationError("initial state reaches the top " + std::to_string(options.buffer) +
                              " levels (entry " + std::to_string(outside) + ")",
                          dim + options.buffer);

  const DisentangleCoeffs f = f_functions(t, params);
  Matrix out;
  switch (options.form) {
    case DisentangleForm::automatic:
      // The product form's intermediates grow like e^{2 gbar t (D-1)} and can
      // overflow well before t gbar = 20 at large D.
      if (t * params.gamma_bar <= 20.0) out = product_form(rho0.matrix(), f, params);
      if (out.size() == 0 || !out.allFinite()) out = rescaled_form(rho0.matrix(), f, params);
      break;
    case DisentangleForm::product:
      out = product_form(rho0.matrix(), f, params);
      if (!out.allFinite()) throw std::overflow_error("product form overflowed; use the rescaled form");
      break;
    case DisentangleForm::rescaled:
      out = rescaled_form(rho0.matrix(), f, params);
      break;
  }

  const double top = std::abs(out(dim - 1, dim - 1));
  if (top > options.top_level_tolerance)
    throw TruncationError("population " + std::to_string(top) + " reached the truncation level; increase D",
                          dim + options.buffer);
  return DensityMatrix{FockOperator(std::move(out))};
}

}  // namespace lindblad
