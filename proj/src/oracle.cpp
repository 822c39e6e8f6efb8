#include "lindblad/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

#include "lindblad/spectral.hpp"

namespace lindblad {

std::vector<std::vector<Eigen::Index>> invariant_blocks(const Matrix& m) {
  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&parent](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      auto& p = parent[static_cast<std::size_t>(i)];
      p = parent[static_cast<std::size_t>(p)];
      i = p;
    }
    return i;
  };
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      if (m(r, c) != Complex(0.0)) {
        const Eigen::Index a = find(r), b = find(c);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }

  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(n), -1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index root = find(i);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<Eigen::Index>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(s)].push_back(i);
  }
  return blocks;
}

namespace {

Matrix extract(const Matrix& m, const std::vector<Eigen::Index>& idx) {
  const auto n = static_cast<Eigen::Index>(idx.size());
  Matrix out(n, n);
  for (Eigen::Index c = 0; c < n; ++c)
    for (Eigen::Index r = 0; r < n; ++r) out(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
  return out;
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ParameterError("t", "must be finite and non-negative");
}

}  // namespace

ExpmPropagator::ExpmPropagator(const ModelParams& params, int dim) : dim_(dim) {
  if (dim > kOracleMaxDim) throw DimensionError("oracle: D must not exceed " + std::to_string(kOracleMaxDim));
  const Matrix l = liouvillian_matrix(params, dim).matrix;
  blocks_ = invariant_blocks(l);
  generators_.reserve(blocks_.size());
  for (const auto& b : blocks_) generators_.push_back(extract(l, b));
}

DensityMatrix ExpmPropagator::at(const DensityMatrix& rho0, double t) const {
  require_time(t);
  if (rho0.dim() != dim_) throw DimensionError("oracle: dimension mismatch");
  const Vector v = vectorize(rho0.op);
  Vector out = Vector::Zero(v.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& idx = blocks_[b];
    const auto n = static_cast<Eigen::Index>(idx.size());
    Vector sub(n);
    bool nonzero = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      sub(i) = v(idx[static_cast<std::size_t>(i)]);
      nonzero = nonzero || sub(i) != Complex(0.0);
    }
    if (!nonzero) continue;
    const Matrix e = (t * generators_[b]).exp();
    const Vector res = e * sub;
    for (Eigen::Index i = 0; i < n; ++i) out(idx[static_cast<std::size_t>(i)]) = res(i);
  }
  return DensityMatrix{devectorize(out)};
}

DensityMatrix expm_propagate(const DensityMatrix& rho0, double t, const ModelParams& params) {
  return ExpmPropagator(params, rho0.dim()).at(rho0, t);
}

DensityMatrix expm_propagate_dense(const DensityMatrix& rho0, double t, const ModelParams& params) {
  require_time(t);
  if (rho0.dim() > kOracleMaxDim) throw DimensionError("oracle: D must not exceed " + std::to_string(kOracleMaxDim));
  const Matrix l = liouvillian_matrix(params, rho0.dim()).matrix;
  const Matrix e = (t * l).exp();
  return DensityMatrix{devectorize(e * vectorize(rho0.op))};
}

std::vector<Complex> numerical_spectrum(const ModelParams& params, int dim) {
  if (dim > kSpectrumMaxDim)
    throw DimensionError("numerical_spectrum: D must not exceed " + std::to_string(kSpectrumMaxDim));
  const Matrix l = liouvillian_matrix(params, dim).matrix;
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(l.rows()));
  for (const auto& b : invariant_blocks(l)) {
    Eigen::ComplexEigenSolver<Matrix> solver(extract(l, b), false);
    if (solver.info() != Eigen::Success) throw std::runtime_error("numerical_spectrum: eigensolver failed");
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()(i));
  }
  return out;
}

SpectrumReport match_spectrum(const std::vector<Complex>& numerical, const ModelParams& params, int dim, int j_cut) {
  if (j_cut < 0) j_cut = dim / 4;
  SpectrumReport report;
  std::vector<bool> used(numerical.size(), false);
  for (const auto& [j, k] : mode_order(j_cut)) {
    const Complex target = eigenvalue(j, k, params);
    std::size_t best = numerical.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < numerical.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(numerical[i] - target);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    if (best == numerical.size()) throw std::runtime_error("match_spectrum: ran out of numerical eigenvalues");
    used[best] = true;
    report.matches.push_back({j, k, target, numerical[best], best_dist});
    report.max_error = std::max(report.max_error, best_dist);
  }
  return report;
}

}  // namespace lindblad
