#include "lindblad/core.hpp"

#include <cmath>
#include <numbers>

namespace lindblad {

ModelParams make_params(double omega, double gamma, double beta) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw ParameterError("omega", "must be positive and finite");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ParameterError("gamma", "must be positive and finite");
  // beta <= 0 would give kappa <= 0, where the generator is not diagonalizable.
  if (!(beta > 0.0) || !std::isfinite(beta)) throw ParameterError("beta", "must be positive and finite");

  ModelParams p{};
  p.omega = omega;
  p.gamma = gamma;
  p.beta = beta;
  p.xi = std::exp(-beta * omega);
  if (!(p.xi > 0.0) || !(p.xi < 1.0)) throw ParameterError("beta", "exp(-beta*omega) must lie strictly in (0, 1)");
  p.gamma_prime = gamma * p.xi;
  p.kappa = gamma - p.gamma_prime;
  p.gamma_bar = 0.5 * (gamma + p.gamma_prime);
  p.omega_complex = Complex(omega, -p.gamma_bar);
  return p;
}

ModelParams standard_params() { return make_params(1.0, 1.0, std::numbers::ln2); }

FockOperator::FockOperator(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) throw DimensionError("FockOperator: matrix must be square");
  if (entries_.rows() < 2) throw DimensionError("FockOperator: dimension must be at least 2");
  for (Eigen::Index i = 0; i < entries_.size(); ++i) {
    const Complex z = entries_.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw std::invalid_argument("FockOperator: non-finite entry");
  }
}

FockOperator FockOperator::zero(int dim) { return FockOperator(Matrix::Zero(dim, dim)); }
FockOperator FockOperator::identity(int dim) { return FockOperator(Matrix::Identity(dim, dim)); }

void require_same_dim(const FockOperator& a, const FockOperator& b, const char* where) {
  if (a.dim() != b.dim())
    throw DimensionError(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
}

FockOperator operator+(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "operator+");
  return FockOperator(a.entries_ + b.entries_);
}

FockOperator operator-(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "operator-");
  return FockOperator(a.entries_ - b.entries_);
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "operator*");
  return FockOperator(a.entries_ * b.entries_);
}

FockOperator operator*(Complex s, const FockOperator& a) { return FockOperator(s * a.entries_); }

namespace {

void check_dim(int dim) {
  if (dim < 2) throw ParameterError("dim", "truncation dimension must be at least 2");
}

}  // namespace

FockOperator annihilation(int dim) {
  check_dim(dim);
  Matrix a = Matrix::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return FockOperator(std::move(a));
}

FockOperator creation(int dim) { return annihilation(dim).adjoint(); }

FockOperator number_operator(int dim) {
  check_dim(dim);
  Matrix n = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) n(i, i) = static_cast<double>(i);
  return FockOperator(std::move(n));
}

FockOperator fock_operator(OperatorKind kind, const ModelParams& params, int dim) {
  switch (kind) {
    case OperatorKind::annihilate: return annihilation(dim);
    case OperatorKind::create: return creation(dim);
    case OperatorKind::number: return number_operator(dim);
    case OperatorKind::hamiltonian: return Complex(params.omega) * number_operator(dim);
    case OperatorKind::identity: check_dim(dim); return FockOperator::identity(dim);
  }
  throw std::logic_error("fock_operator: unknown kind");
}

FockOperator position_operator(const ModelParams& params, int dim) {
  const auto a = annihilation(dim);
  return Complex(1.0 / std::sqrt(2.0 * params.omega)) * (a + a.adjoint());
}

FockOperator momentum_operator(const ModelParams& params, int dim) {
  const auto a = annihilation(dim);
  return Complex(0.0, -std::sqrt(0.5 * params.omega)) * (a - a.adjoint());
}

DensityMatrix gibbs_state(const ModelParams& params, int dim) {
  check_dim(dim);
  Matrix rho = Matrix::Zero(dim, dim);
  double weight = 1.0 - params.xi;
  for (int n = 0; n < dim; ++n) {
    rho(n, n) = weight;
    weight *= params.xi;
  }
  return DensityMatrix{FockOperator(std::move(rho))};
}

DensityMatrix fock_state(int n, int dim) {
  check_dim(dim);
  if (n < 0 || n >= dim) throw ParameterError("n", "Fock level outside the truncated space");
  Matrix rho = Matrix::Zero(dim, dim);
  rho(n, n) = 1.0;
  return DensityMatrix{FockOperator(std::move(rho))};
}

DensityReport validate_density(const FockOperator& rho) {
  const Matrix& m = rho.matrix();
  DensityReport r{};
  r.hermiticity_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  r.trace_defect = std::abs(m.trace() - Complex(1.0));
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  return r;
}

double trace_norm(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues().sum();
}

double trace_distance(const FockOperator& a, const FockOperator& b) {
  require_same_dim(a, b, "trace_distance");
  return 0.5 * trace_norm(a.matrix() - b.matrix());
}

FockOperator interior(const FockOperator& a, int guard) {
  const int keep = a.dim() - guard;
  Matrix m = Matrix::Zero(a.dim(), a.dim());
  if (keep > 0) m.topLeftCorner(keep, keep) = a.matrix().topLeftCorner(keep, keep);
  return FockOperator(std::move(m));
}

double outside_interior(const FockOperator& a, int guard) {
  return (a.matrix() - interior(a, guard).matrix()).cwiseAbs().maxCoeff();
}

}  // namespace lindblad
