#pragma once

#include <random>

#include "lindblad/core.hpp"

namespace lindblad::testing {

inline constexpr std::uint64_t kSeed = 20240611;

/// Random density matrix on levels 0..levels-1 embedded in dimension `dim`:
/// G G^dag / tr, G with standard normal complex entries.
inline DensityMatrix random_density(std::mt19937_64& rng, int levels, int dim) {
  std::normal_distribution<double> normal;
  Matrix g(levels, levels);
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < levels; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  Matrix small = g * g.adjoint();
  small /= small.trace();
  Matrix m = Matrix::Zero(dim, dim);
  m.topLeftCorner(levels, levels) = small;
  return DensityMatrix{FockOperator(std::move(m))};
}

/// Random (non-Hermitian) operator on levels 0..levels-1.
inline FockOperator random_operator(std::mt19937_64& rng, int levels, int dim) {
  std::normal_distribution<double> normal;
  Matrix m = Matrix::Zero(dim, dim);
  for (int i = 0; i < levels; ++i)
    for (int j = 0; j < levels; ++j) m(i, j) = Complex(normal(rng), normal(rng));
  return FockOperator(std::move(m));
}

inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace lindblad::testing
