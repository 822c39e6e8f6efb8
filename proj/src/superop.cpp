#include "lindblad/superop.hpp"

#include <cmath>

namespace lindblad {

Vector vectorize(const FockOperator& a) {
  const Matrix& m = a.matrix();
  return Eigen::Map<const Vector>(m.data(), m.size());  // Eigen storage is column-major
}

FockOperator devectorize(const Vector& v) {
  const auto n = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (n * n != v.size()) throw DimensionError("devectorize: length is not a perfect square");
  return FockOperator(Eigen::Map<const Matrix>(v.data(), n, n));
}

FockOperator SuperOperator::apply(const FockOperator& a) const {
  if (a.dim() != dim) throw DimensionError("SuperOperator::apply: dimension mismatch");
  return devectorize(matrix * vectorize(a));
}

FockOperator SuperOperator::apply_trace_dual(const FockOperator& w) const {
  if (w.dim() != dim) throw DimensionError("SuperOperator::apply_trace_dual: dimension mismatch");
  const Vector f = matrix.transpose() * vectorize(FockOperator(w.matrix().transpose()));
  return FockOperator(devectorize(f).matrix().transpose());
}

namespace {

void require_same(const SuperOperator& a, const SuperOperator& b) {
  if (a.dim != b.dim) throw DimensionError("SuperOperator: dimension mismatch");
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

FockOperator anticommutator(const FockOperator& x, const FockOperator& a) { return x * a + a * x; }

}  // namespace

SuperOperator operator+(const SuperOperator& a, const SuperOperator& b) {
  require_same(a, b);
  return {a.dim, a.matrix + b.matrix};
}

SuperOperator operator-(const SuperOperator& a, const SuperOperator& b) {
  require_same(a, b);
  return {a.dim, a.matrix - b.matrix};
}

SuperOperator operator*(const SuperOperator& a, const SuperOperator& b) {
  require_same(a, b);
  return {a.dim, a.matrix * b.matrix};
}

SuperOperator operator*(Complex s, const SuperOperator& a) { return {a.dim, s * a.matrix}; }

SuperOperator commutator(const SuperOperator& a, const SuperOperator& b) { return a * b - b * a; }

SuperOperator identity_superoperator(int dim) { return {dim, Matrix::Identity(dim * dim, dim * dim)}; }

SuperOperator sandwich(const FockOperator& x, const FockOperator& y) {
  require_same_dim(x, y, "sandwich");
  return {x.dim(), kron(y.matrix().conjugate(), x.matrix())};
}

SuperOperator liouvillian_matrix(const ModelParams& params, int dim) {
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  const auto id = FockOperator::identity(dim);
  const auto h = fock_operator(OperatorKind::hamiltonian, params, dim);
  const auto n_down = ad * a;
  const auto n_up = a * ad;
  const Complex i(0.0, 1.0);

  SuperOperator l = -i * (sandwich(h, id) - sandwich(id, h));
  l = l + Complex(params.gamma) * (sandwich(a, a) - 0.5 * sandwich(n_down, id) - 0.5 * sandwich(id, n_down));
  l = l + Complex(params.gamma_prime) * (sandwich(ad, ad) - 0.5 * sandwich(n_up, id) - 0.5 * sandwich(id, n_up));
  return l;
}

FockOperator liouvillian_apply(const ModelParams& params, const FockOperator& rho) {
  const int dim = rho.dim();
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  const auto h = fock_operator(OperatorKind::hamiltonian, params, dim);
  const Complex i(0.0, 1.0);
  const Matrix& r = rho.matrix();
  Matrix out = -i * (h.matrix() * r - r * h.matrix());
  out += params.gamma * (a.matrix() * r * ad.matrix() - 0.5 * anticommutator(ad * a, rho).matrix());
  out += params.gamma_prime * (ad.matrix() * r * a.matrix() - 0.5 * anticommutator(a * ad, rho).matrix());
  return FockOperator(std::move(out));
}

FockOperator adjoint_liouvillian_apply(const ModelParams& params, const FockOperator& rho) {
  const int dim = rho.dim();
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  const auto h = fock_operator(OperatorKind::hamiltonian, params, dim);
  const Complex i(0.0, 1.0);
  const Matrix& r = rho.matrix();
  Matrix out = i * (h.matrix() * r - r * h.matrix());
  out += params.gamma * (ad.matrix() * r * a.matrix() - 0.5 * anticommutator(ad * a, rho).matrix());
  out += params.gamma_prime * (a.matrix() * r * ad.matrix() - 0.5 * anticommutator(a * ad, rho).matrix());
  return FockOperator(std::move(out));
}

FockOperator apply_K(KOperator which, const FockOperator& rho) {
  const int dim = rho.dim();
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  switch (which) {
    case KOperator::k1: return a * rho * ad;
    case KOperator::k2: return ad * rho * a;
    case KOperator::k3: {
      const FockOperator shifted = number_operator(dim) + Complex(0.5) * FockOperator::identity(dim);
      return anticommutator(shifted, rho);
    }
  }
  throw std::logic_error("apply_K: unknown operator");
}

SuperOperator K_matrix(KOperator which, int dim) {
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  const auto id = FockOperator::identity(dim);
  switch (which) {
    case KOperator::k1: return sandwich(a, a);
    case KOperator::k2: return sandwich(ad, ad);
    case KOperator::k3: {
      const FockOperator shifted = number_operator(dim) + Complex(0.5) * id;
      return sandwich(shifted, id) + sandwich(id, shifted);
    }
  }
  throw std::logic_error("K_matrix: unknown operator");
}

FockOperator apply_elementary(Elementary which, const FockOperator& rho) {
  const int dim = rho.dim();
  switch (which) {
    case Elementary::l_plus: return creation(dim) * rho;
    case Elementary::l_minus: return annihilation(dim) * rho;
    case Elementary::r_plus: return rho * annihilation(dim);
    case Elementary::r_minus: return rho * creation(dim);
  }
  throw std::logic_error("apply_elementary: unknown operator");
}

SuperOperator elementary_matrix(Elementary which, int dim) {
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  const auto id = FockOperator::identity(dim);
  // rho Y = rho (Y^dag)^dag, so right multiplication by a is sandwich(1, a^dag).
  switch (which) {
    case Elementary::l_plus: return sandwich(ad, id);
    case Elementary::l_minus: return sandwich(a, id);
    case Elementary::r_plus: return sandwich(id, ad);
    case Elementary::r_minus: return sandwich(id, a);
  }
  throw std::logic_error("elementary_matrix: unknown operator");
}

SuperOperator liouvillian_from_elementary(const ModelParams& params, int dim) {
  const auto lp = elementary_matrix(Elementary::l_plus, dim);
  const auto lm = elementary_matrix(Elementary::l_minus, dim);
  const auto rp = elementary_matrix(Elementary::r_plus, dim);
  const auto rm = elementary_matrix(Elementary::r_minus, dim);
  const Complex i(0.0, 1.0);
  SuperOperator l = -i * params.omega * (lp * lm - rp * rm);
  l = l + Complex(params.gamma) * (lm * rm) + Complex(params.gamma_prime) * (lp * rp);
  l = l - Complex(params.gamma_bar) * (lp * lm + rp * rm);
  l = l - Complex(params.gamma_prime) * identity_superoperator(dim);
  return l;
}

}  // namespace lindblad
