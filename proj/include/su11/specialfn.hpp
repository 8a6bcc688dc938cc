#ifndef SU11_SPECIALFN_HPP
#define SU11_SPECIALFN_HPP

#include <complex>

// Modified Bessel functions of integer order, log-factorials, and the
// truncated tail sums T0/T1 used by the positive-sigma state family.
// Everything here is a pure function of its arguments and safe for
// unrestricted concurrent use.

namespace su11 {

// Largest Bessel order accepted by bessel_i / bessel_k.
inline constexpr int kMaxBesselOrder = 8192;

// I_n(x) for integer n >= 0, x >= 0.  Ascending power series; all terms
// are positive, so there is no cancellation.  Relative error stays below
// ~1e-13 at desk scale (x <= ~400).  Throws std::domain_error for
// negative or non-finite x, std::invalid_argument for a bad order.
double bessel_i(int order, double x);

// K_n(x) for integer n >= 0, x > 0.  K_0 and K_1 come from the
// exponentially convergent trapezoid rule on the cosh integral
// representation; higher orders use the (stable) upward recurrence
// K_{n+1} = K_{n-1} + (2n/x) K_n.  Throws std::domain_error for x <= 0.
double bessel_k(int order, double x);

// ln(n!).  Exact table for n <= 20, lgamma beyond.
double log_factorial(int n);

// I_n evaluated at a complex argument by the same ascending series.
// Intended for moderate |x| (overlap formulas at desk scale).
std::complex<double> bessel_i_complex(int order, std::complex<double> x);

struct TruncatedSums {
  double abs_z = 0.0;
  int sigma = 0;
  double t0 = 0.0;  // I_0(2|z|) minus its first sigma series terms
  double t1 = 0.0;  // I_1(2|z|) minus its first sigma-1 series terms
};

// Tail sums
//   t0 = sum_{m>=sigma}      |z|^{2m}   / (m!)^2
//   t1 = sum_{m>=sigma-1,>=0} |z|^{2m+1} / (m!(m+1)!)
// computed directly as convergent positive-term series (never as a
// difference of near-equal numbers).  sigma >= 0.
TruncatedSums truncated_sums(double abs_z, int sigma);

// Entire-function extension of t0 in the squared argument:
// sum_{m>=sigma} w^m / (m!)^2 with w = z1^* z2.  Used by overlaps,
// branch-free by construction.
std::complex<double> truncated_t0_product(std::complex<double> w, int sigma);

// Same extension for the full I-family series sum_{m>=0} w^m / (m! Gamma(m+nu+1)),
// nu >= 0 integer.  Equals I_nu(2 sqrt(w)) / w^{nu/2} for any branch of the root.
std::complex<double> bessel_i_ratio_series(int nu, std::complex<double> w);

}  // namespace su11

#endif  // SU11_SPECIALFN_HPP
