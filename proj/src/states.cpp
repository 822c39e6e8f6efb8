#include "lindblad/states.hpp"

#include <charconv>
#include <cmath>

#include "lindblad/matrix_io.hpp"

namespace lindblad {

namespace {

void require_fits(int levels, int dim) {
  if (dim < levels) throw DimensionError("state needs at least " + std::to_string(levels) + " levels, got D=" + std::to_string(dim));
}

/// Embeds a small matrix in the top-left corner of a dim x dim zero matrix.
DensityMatrix embed(const Matrix& small, int dim) {
  require_fits(static_cast<int>(small.rows()), dim);
  Matrix m = Matrix::Zero(dim, dim);
  m.topLeftCorner(small.rows(), small.cols()) = small;
  return DensityMatrix{FockOperator(std::move(m))};
}

Matrix pure(const Vector& psi) { return psi * psi.adjoint() / psi.squaredNorm(); }

}  // namespace

DensityMatrix paper_example_state(int dim) {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return embed(m, dim);
}

DensityMatrix parse_initial_state(const std::string& spec, const ModelParams& params, int dim) {
  if (spec == "gibbs") return gibbs_state(params, dim);
  if (spec == "paper-example") return paper_example_state(dim);
  if (spec.rfind("fock:", 0) == 0) {
    const std::string digits = spec.substr(5);
    int n = -1;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size() || n < 0)
      throw ParameterError("init", "malformed Fock level in '" + spec + "'");
    require_fits(n + 1, dim);
    return fock_state(n, dim);
  }
  if (spec.rfind("file:", 0) == 0) {
    FockOperator op = read_matrix_file(spec.substr(5));
    if (op.dim() > dim) throw DimensionError("state file has D=" + std::to_string(op.dim()) + " > " + std::to_string(dim));
    const DensityReport report = validate_density(op);
    if (!report.ok(1e-10, 1e-10, -1e-10))
      throw ParameterError("init", "'" + spec + "' is not a density matrix (trace defect " +
                                       std::to_string(report.trace_defect) + ", hermiticity defect " +
                                       std::to_string(report.hermiticity_defect) + ", min eigenvalue " +
                                       std::to_string(report.min_eigenvalue) + ")");
    return embed(op.matrix(), dim);
  }
  throw ParameterError("init", "unknown initial state '" + spec + "' (expected fock:n, gibbs, paper-example, file:PATH)");
}

std::vector<NamedState> reference_corpus(const ModelParams& params, int dim) {
  require_fits(4, dim);
  const Complex i(0.0, 1.0);
  std::vector<NamedState> out;
  out.push_back({"fock0", fock_state(0, dim)});
  out.push_back({"fock1", fock_state(1, dim)});
  out.push_back({"fock2", fock_state(2, dim)});
  out.push_back({"paper-example", paper_example_state(dim)});
  out.push_back({"gibbs", gibbs_state(params, dim)});

  Vector cat = Vector::Zero(3);
  cat << 1.0, 0.0, 1.0;
  out.push_back({"superpos02", embed(pure(cat), dim)});

  Vector phased = Vector::Zero(4);
  phased << 0.0, 1.0, 0.0, i;
  out.push_back({"superpos13", embed(pure(phased), dim)});

  Matrix diag = Matrix::Zero(4, 4);
  diag.diagonal() << 0.4, 0.3, 0.2, 0.1;
  out.push_back({"mixed-diagonal", embed(diag, dim)});

  Matrix mixed(3, 3);
  mixed << 0.5, Complex(0.1, 0.1), 0.05,
           Complex(0.1, -0.1), 0.3, Complex(0.0, -0.05),
           0.05, Complex(0.0, 0.05), 0.2;
  out.push_back({"mixed-coherent", embed(mixed, dim)});

  // Coherent amplitude alpha = 1/2 cut to levels 0..3 and renormalized.
  Vector coherent(4);
  double fact = 1.0;
  for (int n = 0; n < 4; ++n) {
    if (n > 0) fact *= n;
    coherent(n) = std::pow(0.5, n) / std::sqrt(fact);
  }
  out.push_back({"coherent-0.5", embed(pure(coherent), dim)});
  return out;
}

}  // namespace lindblad
