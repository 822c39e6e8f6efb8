#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lindblad/core.hpp"

namespace lindblad {

/// tr(obs rho)
Complex expectation(const FockOperator& rho, const FockOperator& obs);

struct EnergyMoments {
  double mean;      // <E>
  double second;    // <E^2>
  double variance;  // <E^2> - <E>^2
};

/// <E>_eq = w xi/(1-xi), <E^2>_eq = w^2 xi (1+xi)/(1-xi)^2
EnergyMoments energy_equilibrium(const ModelParams& params);

/// Closed-form energy moments at time t from the initial <E>_0 and <E^2>_0.
/// With x = e^{-kappa t}:
///   <E>_t   = E_eq - x (E_eq - E_0)
///   <E^2>_t = E2_eq - x (E2_eq + 2 E_eq^2 - 4 E_eq E_0 - w E_0)
///                   + x^2 (2 E_eq^2 - 4 E_eq E_0 - w E_0 + E2_0)
///   var_t   = var_eq - x (E2_eq - 2 E_eq E_0 - w E_0)
///                    + x^2 (E_eq^2 - 2 E_eq E_0 - w E_0 + var_0)
/// The variance line is <E^2>_t - <E>_t^2 expanded; it is evaluated in this
/// form and tested against the difference.
EnergyMoments energy_trajectory(double e0, double e2_0, double t, const ModelParams& params);

/// The traces of rho0 that the quadrature closed forms depend on.
struct QuadratureInputs {
  Complex a;       // tr(a rho0)
  Complex ad;      // tr(a^dag rho0)
  Complex a2;      // tr(a^2 rho0)
  Complex ad2;     // tr((a^dag)^2 rho0)
  Complex n;       // tr(a^dag a rho0)
  Complex n_plus;  // tr(a a^dag rho0), untruncated: tr(a^dag a rho0) + tr(rho0)
};

QuadratureInputs quadrature_inputs(const DensityMatrix& rho0);

struct QuadratureMoments {
  double x;
  double p;
  double x2;
  double p2;
  double var_x;
  double var_p;
};

/// <x^2>_eq = (1+xi)/(2w(1-xi)), <p^2>_eq = w(1+xi)/(2(1-xi)); <x>_eq = <p>_eq = 0.
QuadratureMoments quadrature_equilibrium(const ModelParams& params);

/// Closed forms for the first and second quadrature moments. Computed in
/// complex arithmetic; throws std::domain_error if an imaginary residue
/// above 1e-10 (relative to the magnitude) survives.
QuadratureMoments quadrature_trajectory(const QuadratureInputs& in, double t, const ModelParams& params);
QuadratureMoments quadrature_trajectory(const DensityMatrix& rho0, double t, const ModelParams& params);

enum class Observable { energy, energy2, energy_var, x, p, x2, p2, x_var, p_var };

std::string observable_name(Observable o);
Observable parse_observable(const std::string& name);
std::vector<Observable> all_observables();

/// Evaluates an observable on a state by tracing (variances as second
/// moment minus squared mean). Returns the real part.
double observable_value(Observable o, const DensityMatrix& rho, const ModelParams& params);

enum class Method { closed_form, spectral, disentangled, oracle };

std::string method_name(Method m);
Method parse_method(const std::string& name);

struct Trajectory {
  Method method;
  std::vector<double> times;
  std::vector<Observable> observables;
  std::vector<std::vector<double>> values;  // values[observable][time]
};

struct TrajectoryOptions {
  int dim = 40;
  int j_max = -1;  // spectral mode cutoff; < 0 means 2D
  int buffer = 8;  // disentangled support buffer
};

/// Times must be non-negative and strictly increasing.
void require_time_grid(const std::vector<double>& times);

Trajectory compute_trajectory(Method method, const DensityMatrix& rho0, const std::vector<double>& times,
                              const std::vector<Observable>& observables, const ModelParams& params,
                              const TrajectoryOptions& options = {});

struct Discrepancy {
  Method first;
  Method second;
  Observable observable;
  double max_abs;
};

struct CompareReport {
  std::vector<Trajectory> trajectories;
  std::vector<Discrepancy> pairwise;       // every method pair and observable
  std::vector<double> max_by_observable;  // aligned with the observables argument
};

CompareReport trajectory_compare(const DensityMatrix& rho0, const std::vector<double>& times,
                                 const std::vector<Method>& methods, const std::vector<Observable>& observables,
                                 const ModelParams& params, const TrajectoryOptions& options = {});

/// "# method=<name>" then "t,<obs>,..." and one row per time, `precision`
/// significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, int precision = 17);

}  // namespace lindblad
