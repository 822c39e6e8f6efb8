#include "lindblad/observables.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "lindblad/disentangle.hpp"
#include "lindblad/matrix_io.hpp"
#include "lindblad/oracle.hpp"
#include "lindblad/spectral.hpp"

namespace lindblad {

Complex expectation(const FockOperator& rho, const FockOperator& obs) {
  require_same_dim(rho, obs, "expectation");
  return (obs.matrix().transpose().cwiseProduct(rho.matrix())).sum();
}

EnergyMoments energy_equilibrium(const ModelParams& params) {
  const double xi = params.xi, w = params.omega;
  const double mean = w * xi / (1.0 - xi);
  const double second = w * w * xi * (1.0 + xi) / ((1.0 - xi) * (1.0 - xi));
  return {mean, second, second - mean * mean};
}

EnergyMoments energy_trajectory(double e0, double e2_0, double t, const ModelParams& params) {
  if (!(t >= 0.0)) throw ParameterError("t", "must be non-negative");
  const EnergyMoments eq = energy_equilibrium(params);
  const double x = std::exp(-params.kappa * t);
  const double w = params.omega;
  const double cross = eq.mean * e0;
  const double var0 = e2_0 - e0 * e0;
  EnergyMoments out;
  out.mean = eq.mean - x * (eq.mean - e0);
  out.second = eq.second - x * (eq.second + 2.0 * eq.mean * eq.mean - 4.0 * cross - w * e0) +
               x * x * (2.0 * eq.mean * eq.mean - 4.0 * cross - w * e0 + e2_0);
  out.variance = eq.variance - x * (eq.second - 2.0 * cross - w * e0) +
                 x * x * (eq.mean * eq.mean - 2.0 * cross - w * e0 + var0);
  return out;
}

QuadratureInputs quadrature_inputs(const DensityMatrix& rho0) {
  const int dim = rho0.dim();
  const auto a = annihilation(dim);
  const auto ad = creation(dim);
  QuadratureInputs in;
  in.a = expectation(rho0.op, a);
  in.ad = expectation(rho0.op, ad);
  in.a2 = expectation(rho0.op, a * a);
  in.ad2 = expectation(rho0.op, ad * ad);
  in.n = expectation(rho0.op, ad * a);
  // The truncated a a^dag loses the top level; use the commutator instead.
  in.n_plus = in.n + rho0.op.trace();
  return in;
}

QuadratureMoments quadrature_equilibrium(const ModelParams& params) {
  const double ratio = (1.0 + params.xi) / (1.0 - params.xi);
  const double x2 = ratio / (2.0 * params.omega);
  const double p2 = params.omega * ratio / 2.0;
  return {0.0, 0.0, x2, p2, x2, p2};
}

namespace {

double real_part(Complex z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z.real())))
    throw std::domain_error(std::string(what) + ": closed form has a non-negligible imaginary part");
  return z.real();
}

}  // namespace

QuadratureMoments quadrature_trajectory(const QuadratureInputs& in, double t, const ModelParams& params) {
  if (!(t >= 0.0)) throw ParameterError("t", "must be non-negative");
  const double w = params.omega;
  const QuadratureMoments eq = quadrature_equilibrium(params);
  const double half_decay = std::exp(-0.5 * params.kappa * t);
  const double decay = half_decay * half_decay;
  const Complex rot = std::polar(1.0, -w * t);  // e^{-i w t}
  const Complex rot2 = rot * rot;
  const Complex i(0.0, 1.0);

  const Complex x = half_decay / std::sqrt(2.0 * w) * (rot * in.a + std::conj(rot) * in.ad);
  const Complex p = -i * std::sqrt(w / 2.0) * half_decay * (rot * in.a - std::conj(rot) * in.ad);
  const Complex squeeze = rot2 * in.a2 + std::conj(rot2) * in.ad2;
  const Complex x2 = eq.x2 + decay / (2.0 * w) * (squeeze + in.n + in.n_plus - 2.0 * w * eq.x2);
  const Complex p2 = eq.p2 - 0.5 * w * decay * (squeeze - in.n - in.n_plus + (2.0 / w) * eq.p2);

  QuadratureMoments out;
  out.x = real_part(x, "<x>");
  out.p = real_part(p, "<p>");
  out.x2 = real_part(x2, "<x^2>");
  out.p2 = real_part(p2, "<p^2>");
  out.var_x = out.x2 - out.x * out.x;
  out.var_p = out.p2 - out.p * out.p;
  return out;
}

QuadratureMoments quadrature_trajectory(const DensityMatrix& rho0, double t, const ModelParams& params) {
  return quadrature_trajectory(quadrature_inputs(rho0), t, params);
}

namespace {

struct NamedObservable {
  Observable value;
  const char* name;
};

constexpr NamedObservable kObservables[] = {
    {Observable::energy, "E"}, {Observable::energy2, "E2"}, {Observable::energy_var, "varE"},
    {Observable::x, "x"},      {Observable::p, "p"},        {Observable::x2, "x2"},
    {Observable::p2, "p2"},    {Observable::x_var, "varx"}, {Observable::p_var, "varp"},
};

struct NamedMethod {
  Method value;
  const char* name;
};

constexpr NamedMethod kMethods[] = {
    {Method::closed_form, "closed-form"},
    {Method::spectral, "spectral"},
    {Method::disentangled, "disentangled"},
    {Method::oracle, "oracle"},
};

}  // namespace

std::string observable_name(Observable o) {
  for (const auto& entry : kObservables)
    if (entry.value == o) return entry.name;
  throw std::logic_error("observable_name: unknown observable");
}

Observable parse_observable(const std::string& name) {
  for (const auto& entry : kObservables)
    if (name == entry.name) return entry.value;
  throw ParameterError("obs", "unknown observable '" + name + "' (expected E, E2, varE, x, p, x2, p2, varx, varp)");
}

std::vector<Observable> all_observables() {
  std::vector<Observable> out;
  for (const auto& entry : kObservables) out.push_back(entry.value);
  return out;
}

std::string method_name(Method m) {
  for (const auto& entry : kMethods)
    if (entry.value == m) return entry.name;
  throw std::logic_error("method_name: unknown method");
}

Method parse_method(const std::string& name) {
  for (const auto& entry : kMethods)
    if (name == entry.name) return entry.value;
  throw ParameterError("method", "unknown method '" + name + "' (expected closed-form, spectral, disentangled, oracle)");
}

double observable_value(Observable o, const DensityMatrix& rho, const ModelParams& params) {
  const int dim = rho.dim();
  auto trace_with = [&rho](const FockOperator& op) { return expectation(rho.op, op).real(); };
  switch (o) {
    case Observable::energy: return trace_with(fock_operator(OperatorKind::hamiltonian, params, dim));
    case Observable::energy2: {
      const auto h = fock_operator(OperatorKind::hamiltonian, params, dim);
      return trace_with(h * h);
    }
    case Observable::energy_var:
      return observable_value(Observable::energy2, rho, params) -
             std::pow(observable_value(Observable::energy, rho, params), 2);
    case Observable::x: return trace_with(position_operator(params, dim));
    case Observable::p: return trace_with(momentum_operator(params, dim));
    case Observable::x2: {
      const auto x = position_operator(params, dim);
      return trace_with(x * x);
    }
    case Observable::p2: {
      const auto p = momentum_operator(params, dim);
      return trace_with(p * p);
    }
    case Observable::x_var:
      return observable_value(Observable::x2, rho, params) - std::pow(observable_value(Observable::x, rho, params), 2);
    case Observable::p_var:
      return observable_value(Observable::p2, rho, params) - std::pow(observable_value(Observable::p, rho, params), 2);
  }
  throw std::logic_error("observable_value: unknown observable");
}

void require_time_grid(const std::vector<double>& times) {
  if (times.empty()) throw ParameterError("times", "empty time grid");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0) || !std::isfinite(times[i])) throw ParameterError("times", "must be finite and non-negative");
    if (i > 0 && !(times[i] > times[i - 1])) throw ParameterError("times", "must be strictly increasing");
  }
}

namespace {

double closed_form_value(Observable o, const EnergyMoments& e, const QuadratureMoments& q) {
  switch (o) {
    case Observable::energy: return e.mean;
    case Observable::energy2: return e.second;
    case Observable::energy_var: return e.variance;
    case Observable::x: return q.x;
    case Observable::p: return q.p;
    case Observable::x2: return q.x2;
    case Observable::p2: return q.p2;
    case Observable::x_var: return q.var_x;
    case Observable::p_var: return q.var_p;
  }
  throw std::logic_error("closed_form_value: unknown observable");
}

}  // namespace

Trajectory compute_trajectory(Method method, const DensityMatrix& rho0, const std::vector<double>& times,
                              const std::vector<Observable>& observables, const ModelParams& params,
                              const TrajectoryOptions& options) {
  require_time_grid(times);
  if (rho0.dim() != options.dim) throw DimensionError("compute_trajectory: state dimension differs from options.dim");
  Trajectory out{method, times, observables, std::vector<std::vector<double>>(observables.size())};
  for (auto& series : out.values) series.reserve(times.size());

  auto record = [&](const DensityMatrix& rho) {
    for (std::size_t i = 0; i < observables.size(); ++i)
      out.values[i].push_back(observable_value(observables[i], rho, params));
  };

  switch (method) {
    case Method::closed_form: {
      const double e0 = observable_value(Observable::energy, rho0, params);
      const double e2 = observable_value(Observable::energy2, rho0, params);
      const QuadratureInputs in = quadrature_inputs(rho0);
      for (double t : times) {
        const EnergyMoments e = energy_trajectory(e0, e2, t, params);
        const QuadratureMoments q = quadrature_trajectory(in, t, params);
        for (std::size_t i = 0; i < observables.size(); ++i) out.values[i].push_back(closed_form_value(observables[i], e, q));
      }
      break;
    }
    case Method::spectral: {
      const int j_max = options.j_max < 0 ? 2 * options.dim : options.j_max;
      const SpectralBasis basis(params, options.dim, j_max);
      const SpectralPropagator prop(basis, rho0);
      for (double t : times) record(prop.at(t).rho);
      break;
    }
    case Method::disentangled: {
      DisentangleOptions opt;
      opt.buffer = options.buffer;
      for (double t : times) record(disentangled_propagate(rho0, t, params, opt));
      break;
    }
    case Method::oracle: {
      const ExpmPropagator prop(params, options.dim);
      for (double t : times) record(prop.at(rho0, t));
      break;
    }
  }
  return out;
}

CompareReport trajectory_compare(const DensityMatrix& rho0, const std::vector<double>& times,
                                 const std::vector<Method>& methods, const std::vector<Observable>& observables,
                                 const ModelParams& params, const TrajectoryOptions& options) {
  if (methods.empty()) throw ParameterError("methods", "at least one method is required");
  CompareReport report;
  report.max_by_observable.assign(observables.size(), 0.0);
  for (Method m : methods) report.trajectories.push_back(compute_trajectory(m, rho0, times, observables, params, options));
  for (std::size_t a = 0; a < methods.size(); ++a) {
    for (std::size_t b = a + 1; b < methods.size(); ++b) {
      for (std::size_t i = 0; i < observables.size(); ++i) {
        double worst = 0.0;
        const auto& va = report.trajectories[a].values[i];
        const auto& vb = report.trajectories[b].values[i];
        for (std::size_t s = 0; s < times.size(); ++s) worst = std::max(worst, std::abs(va[s] - vb[s]));
        report.pairwise.push_back({methods[a], methods[b], observables[i], worst});
        report.max_by_observable[i] = std::max(report.max_by_observable[i], worst);
      }
    }
  }
  return report;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& trajectory, int precision) {
  out << "# method=" << method_name(trajectory.method) << '\n';
  out << 't';
  for (Observable o : trajectory.observables) out << ',' << observable_name(o);
  out << '\n';
  for (std::size_t s = 0; s < trajectory.times.size(); ++s) {
    out << format_double(trajectory.times[s], precision);
    for (const auto& series : trajectory.values) out << ',' << format_double(series[s], precision);
    out << '\n';
  }
}

}  // namespace lindblad
