#include "su11/specialfn.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace su11 {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxBesselOrder)
    throw std::invalid_argument("bessel order out of range: " + std::to_string(order));
}

// Trapezoid rule for K_n(x) = int_0^inf exp(-x cosh t) cosh(n t) dt.
// The integrand extends to an even analytic function of t that decays
// doubly exponentially, so the trapezoid error falls off like
// exp(-c/h); h = 1/16 is already beyond double precision.
double bessel_k_integral(int n, double x) {
  const double h = 0.0625;
  double sum = 0.5 * 1.0;  // t = 0: exp(-x)*cosh(0), exp factored below
  for (int j = 1;; ++j) {
    const double t = h * j;
    const double expo = -x * (std::cosh(t) - 1.0) ;
    if (expo < -746.0) break;
    sum += std::exp(expo) * std::cosh(n * t);
    if (j > 4000000) throw std::runtime_error("bessel_k: integral failed to converge");
  }
  return h * sum * std::exp(-x);
}

}  // namespace

double bessel_i(int order, double x) {
  check_order(order);
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error("bessel_i: argument must be finite and non-negative");
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;

  // first term (x/2)^n / n! in log form so large orders underflow cleanly
  const double lt0 = order * std::log(x / 2.0) - log_factorial(order);
  if (lt0 < -745.0) return 0.0;
  const double q = 0.25 * x * x;
  double term = std::exp(lt0);
  double sum = term;
  for (int m = 1;; ++m) {
    term *= q / (static_cast<double>(m) * (m + order));
    sum += term;
    if (term <= sum * 1e-16) break;
    if (m > 1000000) throw std::runtime_error("bessel_i: series failed to converge");
  }
  return sum;
}

double bessel_k(int order, double x) {
  check_order(order);
  if (!std::isfinite(x) || x <= 0.0)
    throw std::domain_error("bessel_k: argument must be positive");
  const double k0 = bessel_k_integral(0, x);
  if (order == 0) return k0;
  const double k1 = bessel_k_integral(1, x);
  if (order == 1) return k1;
  // upward recurrence: all terms positive, stable
  double km = k0, kc = k1;
  for (int n = 1; n < order; ++n) {
    const double kn = km + (2.0 * n / x) * kc;
    km = kc;
    kc = kn;
  }
  return kc;
}

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  static const double exact[21] = {
      std::log(1.0),
      std::log(1.0),
      std::log(2.0),
      std::log(6.0),
      std::log(24.0),
      std::log(120.0),
      std::log(720.0),
      std::log(5040.0),
      std::log(40320.0),
      std::log(362880.0),
      std::log(3628800.0),
      std::log(39916800.0),
      std::log(479001600.0),
      std::log(6227020800.0),
      std::log(87178291200.0),
      std::log(1307674368000.0),
      std::log(20922789888000.0),
      std::log(355687428096000.0),
      std::log(6402373705728000.0),
      std::log(121645100408832000.0),
      std::log(2432902008176640000.0)};
  if (n <= 20) return exact[n];
  return std::lgamma(n + 1.0);
}

std::complex<double> bessel_i_complex(int order, std::complex<double> x) {
  check_order(order);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw std::domain_error("bessel_i_complex: non-finite argument");
  const std::complex<double> half = 0.5 * x;
  std::complex<double> term = 1.0;
  for (int j = 0; j < order; ++j) term *= half / static_cast<double>(j + 1);
  const std::complex<double> q = half * half;
  std::complex<double> sum = term;
  for (int m = 1;; ++m) {
    term *= q / (static_cast<double>(m) * (m + order));
    sum += term;
    if (std::abs(term) <= (std::abs(sum) + 1e-300) * 1e-17 && m > 4) break;
    if (m > 1000000) throw std::runtime_error("bessel_i_complex: series failed to converge");
  }
  return sum;
}

TruncatedSums truncated_sums(double abs_z, int sigma) {
  if (!std::isfinite(abs_z) || abs_z < 0.0)
    throw std::domain_error("truncated_sums: |z| must be finite and non-negative");
  if (sigma < 0) throw std::domain_error("truncated_sums: sigma must be non-negative");
  TruncatedSums out;
  out.abs_z = abs_z;
  out.sigma = sigma;

  const double q = abs_z * abs_z;

  // t0 tail from m = sigma
  {
    const double lt = 2.0 * sigma * std::log(abs_z > 0 ? abs_z : 1.0) - 2.0 * log_factorial(sigma);
    double term = (abs_z == 0.0) ? (sigma == 0 ? 1.0 : 0.0) : std::exp(lt);
    double sum = term;
    for (int m = sigma; term > 0.0; ++m) {
      const double next = term * q / ((m + 1.0) * (m + 1.0));
      if (next <= sum * 1e-17) { sum += next; break; }
      term = next;
      sum += term;
    }
    out.t0 = sum;
  }

  // t1 tail from m = max(sigma-1, 0)
  {
    const int m0 = sigma >= 1 ? sigma - 1 : 0;
    double term;
    if (abs_z == 0.0) {
      term = 0.0;
    } else {
      const double lt = (2.0 * m0 + 1.0) * std::log(abs_z) - log_factorial(m0) - log_factorial(m0 + 1);
      term = std::exp(lt);
    }
    double sum = term;
    for (int m = m0; term > 0.0; ++m) {
      const double next = term * q / ((m + 1.0) * (m + 2.0));
      if (next <= sum * 1e-17) { sum += next; break; }
      term = next;
      sum += term;
    }
    out.t1 = sum;
  }
  return out;
}

std::complex<double> truncated_t0_product(std::complex<double> w, int sigma) {
  if (sigma < 0) throw std::domain_error("truncated_t0_product: sigma must be non-negative");
  // term at m = sigma: w^sigma / (sigma!)^2
  std::complex<double> term = 1.0;
  for (int j = 1; j <= sigma; ++j) term *= w / (static_cast<double>(j) * j);
  std::complex<double> sum = term;
  for (int m = sigma;; ++m) {
    term *= w / ((m + 1.0) * (m + 1.0));
    sum += term;
    if (std::abs(term) <= (std::abs(sum) + 1e-300) * 1e-17 && m > sigma + 4) break;
    if (m > 1000000) throw std::runtime_error("truncated_t0_product: series failed to converge");
  }
  return sum;
}

std::complex<double> bessel_i_ratio_series(int nu, std::complex<double> w) {
  if (nu < 0) throw std::domain_error("bessel_i_ratio_series: order must be non-negative");
  std::complex<double> term = std::exp(-log_factorial(nu));
  std::complex<double> sum = term;
  for (int m = 0;; ++m) {
    term *= w / (static_cast<double>(m + 1) * (m + 1 + nu));
    sum += term;
    if (std::abs(term) <= (std::abs(sum) + 1e-300) * 1e-17 && m > 4) break;
    if (m > 1000000) throw std::runtime_error("bessel_i_ratio_series: series failed to converge");
  }
  return sum;
}

}  // namespace su11
