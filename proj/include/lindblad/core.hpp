#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace lindblad {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Raised when a physical or numerical parameter is out of range.
/// `parameter()` names the offending input.
class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string parameter, const std::string& what)
      : std::invalid_argument(parameter + ": " + what), parameter_(std::move(parameter)) {}
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The Fock space is too small for the requested construction.
class TruncationError : public std::runtime_error {
 public:
  TruncationError(const std::string& what, int required_dim)
      : std::runtime_error(what), required_dim_(required_dim) {}
  int required_dim() const noexcept { return required_dim_; }

 private:
  int required_dim_;
};

/// Physical constants of the damped oscillator (hbar = 1).
///
/// omega is the oscillator frequency, gamma the downward (emission) rate and
/// beta the bath inverse temperature. The upward rate obeys detailed balance,
/// gamma' = gamma * exp(-beta * omega).
struct ModelParams {
  double omega;
  double gamma;
  double beta;
  double gamma_prime;  // gamma * xi
  double xi;           // exp(-beta * omega), in (0, 1)
  double kappa;        // gamma - gamma', net relaxation rate
  double gamma_bar;    // (gamma + gamma') / 2
  Complex omega_complex;  // omega - i * gamma_bar
};

/// Validates the inputs and fills every derived field.
ModelParams make_params(double omega, double gamma, double beta);

/// omega = gamma = 1, beta = ln 2, so that xi = 1/2 and kappa = 1/2.
ModelParams standard_params();

/// Dense operator on the Fock levels 0..dim-1.
class FockOperator {
 public:
  FockOperator() = default;
  explicit FockOperator(Matrix entries);
  static FockOperator zero(int dim);
  static FockOperator identity(int dim);

  int dim() const noexcept { return static_cast<int>(entries_.rows()); }
  const Matrix& matrix() const noexcept { return entries_; }
  Complex operator()(int row, int col) const { return entries_(row, col); }

  FockOperator adjoint() const { return FockOperator(entries_.adjoint()); }
  Complex trace() const { return entries_.trace(); }

  friend FockOperator operator+(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b);
  friend FockOperator operator*(Complex s, const FockOperator& a);

 private:
  Matrix entries_;
};

void require_same_dim(const FockOperator& a, const FockOperator& b, const char* where);

enum class OperatorKind { annihilate, create, number, hamiltonian, identity };

/// Truncated ladder operators: a|n> = sqrt(n)|n-1>, a^dag|n> = sqrt(n+1)|n+1>,
/// with a^dag|dim-1> dropped.
FockOperator fock_operator(OperatorKind kind, const ModelParams& params, int dim);
FockOperator annihilation(int dim);
FockOperator creation(int dim);
FockOperator number_operator(int dim);

/// x = (a + a^dag) / sqrt(2 omega)
FockOperator position_operator(const ModelParams& params, int dim);
/// p = -i sqrt(omega / 2) (a - a^dag)
FockOperator momentum_operator(const ModelParams& params, int dim);

/// Trace-class, Hermitian, positive operator. Construction does not validate;
/// use validate_density() for a diagnostic report.
struct DensityMatrix {
  FockOperator op;
  int dim() const noexcept { return op.dim(); }
  const Matrix& matrix() const noexcept { return op.matrix(); }
};

/// (1 - xi) xi^N on the truncated space. Not renormalized: the trace is
/// 1 - xi^dim and the deficit is left visible.
DensityMatrix gibbs_state(const ModelParams& params, int dim);

/// |n><n|
DensityMatrix fock_state(int n, int dim);

struct DensityReport {
  double hermiticity_defect;  // max |A - A^dag| entry
  double trace_defect;        // |tr A - 1|
  double min_eigenvalue;      // of the Hermitian part
  bool ok(double herm_tol = 1e-12, double trace_tol = 1e-12, double eig_tol = -1e-10) const {
    return hermiticity_defect <= herm_tol && trace_defect <= trace_tol && min_eigenvalue >= eig_tol;
  }
};

DensityReport validate_density(const FockOperator& rho);

/// Trace norm (sum of singular values).
double trace_norm(const Matrix& a);

/// Half the trace norm of the difference.
double trace_distance(const FockOperator& a, const FockOperator& b);

/// Copy of `a` restricted to the leading (dim - guard) levels, zero elsewhere.
FockOperator interior(const FockOperator& a, int guard);

/// Largest |entry| of `a` outside the leading (dim - guard) block.
double outside_interior(const FockOperator& a, int guard);

}  // namespace lindblad
