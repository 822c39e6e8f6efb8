#include "lindblad/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "lindblad/core.hpp"

namespace lindblad {

namespace {

std::mutex factorial_mutex;
std::vector<BigInt> factorial_cache{BigInt(1)};

ExactRational pow(const ExactRational& base, int exponent) {
  ExactRational out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

ExactRational sign(int exponent) { return (exponent % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

ExactRational inv_factorial(int n) { return ExactRational(BigInt(1), factorial(n)); }

void require_nonnegative(int value, const char* name) {
  if (value < 0) throw ParameterError(name, "must be non-negative");
}

}  // namespace

BigInt factorial(int n) {
  if (n < 0) throw ParameterError("n", "factorial of a negative number");
  std::lock_guard<std::mutex> lock(factorial_mutex);
  while (static_cast<int>(factorial_cache.size()) <= n) {
    const auto next = static_cast<long>(factorial_cache.size());
    factorial_cache.push_back(factorial_cache.back() * next);
  }
  return factorial_cache[static_cast<std::size_t>(n)];
}

void require_unit_interval(const ExactRational& xi) {
  if (!(xi > 0 && xi < 1)) throw ParameterError("xi", "must lie strictly between 0 and 1");
}

ExactRational rationalize(double x, double rel_tol) {
  if (!std::isfinite(x)) throw ParameterError("x", "cannot rationalize a non-finite value");
  const ExactRational target(x);  // exact binary value
  const ExactRational tol = abs(target) * ExactRational(rel_tol);

  // Continued-fraction convergents h/k of the exact binary value.
  BigInt h_prev(1), h_prev2(0), k_prev(0), k_prev2(1);
  ExactRational rest = target;
  for (int iter = 0; iter < 200; ++iter) {
    BigInt a = numerator(rest) / denominator(rest);
    if (rest < 0 && a * denominator(rest) != numerator(rest)) a -= 1;  // floor
    const BigInt h = a * h_prev + h_prev2;
    const BigInt k = a * k_prev + k_prev2;
    const ExactRational convergent(h, k);
    if (abs(convergent - target) <= tol) return convergent;
    const ExactRational frac = rest - ExactRational(a);
    if (frac == 0) return convergent;
    rest = 1 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return target;
}

double to_double(const ExactRational& q) {
  // A wide-exponent float keeps huge numerators and denominators from
  // overflowing before the division.
  const boost::multiprecision::mpf_float_50 wide(q);
  return wide.convert_to<double>();
}

SpectralCoefficients spectral_coefficients(int k, int l, const ExactRational& xi) {
  require_nonnegative(k, "k");
  require_nonnegative(l, "l");
  require_unit_interval(xi);
  const ExactRational one_minus = 1 - xi;
  const ExactRational ratio = one_minus / xi;

  SpectralCoefficients c;
  c.k = k;
  c.l = l;
  c.A.reserve(static_cast<std::size_t>(l + 1));
  c.B.reserve(static_cast<std::size_t>(l + 1));
  for (int m = 0; m <= l; ++m) {
    const ExactRational denom(factorial(k + m) * factorial(l - m) * factorial(m));
    c.A.push_back(sign(m) * pow(one_minus, m) / denom);
    c.B.push_back(sign(m) * pow(ratio, m) / denom);
  }
  c.C = ExactRational(factorial(k + l) * factorial(l)) * pow(one_minus, k + 1) * pow(xi, l);
  return c;
}

namespace {

void require_ordered(int p, int q, int r) {
  if (r < 0 || q < r || p < q)
    throw ParameterError("p,q,r", "require p >= q >= r >= 0 (got " + std::to_string(p) + "," + std::to_string(q) + "," +
                                      std::to_string(r) + ")");
}

}  // namespace

ExactRational identity_I(int p, int q, int r) {
  require_ordered(p, q, r);
  ExactRational sum(0);
  for (int s = 0; s <= q; ++s) {
    const ExactRational term(factorial(p + q - s - r), factorial(p - s) * factorial(q - s) * factorial(s));
    sum += sign(s) * term;
  }
  return sum;
}

bool recurrence_check(int p, int q, int r) {
  require_ordered(p, q, r);
  if (r < 1) throw ParameterError("r", "recurrence needs r >= 1");
  const ExactRational lhs = identity_I(p, q, r - 1);
  const ExactRational rhs = ExactRational(p + q - r + 1) * identity_I(p, q, r) + identity_I(p - 1, q - 1, r - 1);
  return lhs == rhs;
}

ExactRational alt_sum(int p, int r) {
  if (r < 0 || p < r) throw ParameterError("p,r", "require p >= r >= 0");
  ExactRational sum(0);
  const BigInt pf = factorial(p);
  for (int q = r; q <= p; ++q) sum += sign(q) * ExactRational(pf, factorial(p - q) * factorial(q - r));
  return sum;
}

ExactRational claim1_sum(int k, int l, int n, const ExactRational& xi) {
  require_nonnegative(k, "k");
  require_nonnegative(l, "l");
  require_nonnegative(n, "n");
  require_unit_interval(xi);
  const ExactRational one_minus = 1 - xi;
  ExactRational sum(0);
  for (int m = 0; m <= l; ++m) {
    for (int alpha = 0; alpha <= std::min(m, n); ++alpha) {
      const BigInt den = factorial(k + m) * factorial(l - m) * factorial(m - alpha) * factorial(n - alpha) * factorial(alpha);
      const ExactRational term(factorial(k + m + n - alpha), den);
      sum += sign(m) * term * pow(one_minus, alpha) * pow(xi, l - alpha);
    }
  }
  return sum;
}

ExactRational trace_moment(int m, int n, const ExactRational& xi) {
  require_nonnegative(m, "m");
  require_nonnegative(n, "n");
  require_unit_interval(xi);
  if (m != n) return ExactRational(0);
  return ExactRational(factorial(m)) / pow(1 - xi, m + 1);
}

FockSumResult trace_moment_fock_sum(int m, int n, const ExactRational& xi, int levels) {
  require_nonnegative(m, "m");
  require_nonnegative(n, "n");
  require_unit_interval(xi);
  if (levels < 1) throw ParameterError("levels", "must be positive");
  FockSumResult out{ExactRational(0), ExactRational(0)};
  // <h| a^m (a^dag)^n |h> vanishes unless m == n, so every level contributes 0.
  if (m != n) return out;

  // <h| a^n (a^dag)^n xi^N |h> = (h+n)!/h! xi^h
  ExactRational xi_pow(1);
  for (int h = 0; h < levels; ++h) {
    out.partial += ExactRational(factorial(h + n), factorial(h)) * xi_pow;
    xi_pow *= xi;
  }
  // Successive terms have ratio xi (h+n+1)/(h+1), decreasing in h, so the tail
  // is dominated by a geometric series started at the first omitted term.
  const ExactRational first = ExactRational(factorial(levels + n), factorial(levels)) * xi_pow;
  const ExactRational ratio = xi * ExactRational(levels + n + 1, levels + 1);
  if (ratio >= 1) throw ParameterError("levels", "too few levels for a convergent tail bound");
  out.tail_bound = first / (1 - ratio);
  return out;
}

std::vector<ExactRational> completeness_alpha(int qmax, const ExactRational& xi) {
  require_nonnegative(qmax, "q");
  require_unit_interval(xi);
  const ExactRational tau = xi - 1;
  std::vector<ExactRational> alpha;
  alpha.reserve(static_cast<std::size_t>(qmax + 1));
  alpha.emplace_back(1);
  for (int q = 1; q <= qmax; ++q) {
    ExactRational value = sign(q) * inv_factorial(q);
    ExactRational tau_pow(1);
    for (int p = 1; p <= q; ++p) {
      tau_pow *= tau;
      value -= tau_pow * inv_factorial(p) * alpha[static_cast<std::size_t>(q - p)];
    }
    alpha.push_back(value);
  }
  return alpha;
}

}  // namespace lindblad
