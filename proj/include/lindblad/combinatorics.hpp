#pragma once

#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace lindblad {

// Exact arithmetic for the spectral coefficients and the summation identities
// behind biorthonormality and completeness. Everything here is evaluated at a
// rational Boltzmann factor xi; nothing is rounded.

using BigInt = boost::multiprecision::mpz_int;
using ExactRational = boost::multiprecision::mpq_rational;

BigInt factorial(int n);

/// Rejects xi outside the open interval (0, 1).
void require_unit_interval(const ExactRational& xi);

/// Best rational approximation of `x` (continued fractions) with
/// |r - x| <= rel_tol * |x|. Used to lift ModelParams' floating xi onto an
/// exact value; for xi = exp(-ln 2) it returns exactly 1/2.
ExactRational rationalize(double x, double rel_tol = 1e-15);

double to_double(const ExactRational& q);

struct SpectralCoefficients {
  int k = 0;
  int l = 0;
  std::vector<ExactRational> A;  // A_{k,l,m}, m = 0..l
  std::vector<ExactRational> B;  // B_{k,l,n}, n = 0..l
  ExactRational C;
};

/// A_{k,l,m} = (-1)^m (1-xi)^m / ((k+m)! (l-m)! m!)
/// B_{k,l,n} = (-1)^n ((1-xi)/xi)^n / ((k+n)! (l-n)! n!)
/// C_{k,l}   = (k+l)! l! (1-xi)^(k+1) xi^l
SpectralCoefficients spectral_coefficients(int k, int l, const ExactRational& xi);

/// I(p,q,r) = sum_{s=0}^{q} (-1)^s (p+q-s-r)! / ((p-s)! (q-s)! s!), p >= q >= r >= 0.
/// Evaluated term by term; the closed value delta_{r,0} is what callers check.
ExactRational identity_I(int p, int q, int r);

/// I(p,q,r-1) == (p+q-r+1) I(p,q,r) + I(p-1,q-1,r-1), each side summed directly.
/// Requires p >= q >= r >= 1.
bool recurrence_check(int p, int q, int r);

/// sum_{q=r}^{p} (-1)^q p! / ((p-q)! (q-r)!), p >= r >= 0.
ExactRational alt_sum(int p, int r);

/// Double sum whose value delta_{l,n} (-1)^l / l! yields biorthonormality:
/// sum_m sum_alpha (-1)^m (k+m+n-alpha)! (1-xi)^alpha xi^(l-alpha)
///                 / ((k+m)! (l-m)! (m-alpha)! (n-alpha)! alpha!)
/// The identity holds for n <= l; for n > l the sum is generally nonzero and
/// the pairing with the roles of the two modes swapped applies instead.
ExactRational claim1_sum(int k, int l, int n, const ExactRational& xi);

/// tr[a^m (a^dag)^n xi^N] = delta_{m,n} m! / (1-xi)^(m+1)
ExactRational trace_moment(int m, int n, const ExactRational& xi);

struct FockSumResult {
  ExactRational partial;  // sum over levels h < levels
  ExactRational tail_bound;  // bound on |closed form - partial|
};

/// Same trace as trace_moment, summed level by level over h < `levels`,
/// together with a rigorous bound on the omitted tail.
FockSumResult trace_moment_fock_sum(int m, int n, const ExactRational& xi, int levels);

/// alpha_0 = 1, alpha_q = (-1)^q/q! - sum_{p=1}^{q} tau^p/p! alpha_{q-p}, tau = xi - 1.
/// Returns alpha_0..alpha_qmax.
std::vector<ExactRational> completeness_alpha(int qmax, const ExactRational& xi);

}  // namespace lindblad
