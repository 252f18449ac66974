#ifndef SUBFRAC_SPECFUN_HPP
#define SUBFRAC_SPECFUN_HPP

#include <complex>

namespace subfrac::specfun {

using Complex = std::complex<double>;

/// Gamma function on the real line. Throws PoleError at non-positive
/// integers and OverflowError when the result is not representable.
double gamma_real(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma_real(double x);

/// Gamma function of a complex argument (Lanczos, reflection for
/// Re z < 1/2). Accurate to ~1e-13 relative for |Im z| <= 200.
Complex gamma_complex(Complex z);

/// A logarithm of Gamma(z): exp(log_gamma_complex(z)) == gamma_complex(z).
/// The branch is unspecified; intended for products of Gamma factors
/// that are exponentiated once at the end.
Complex log_gamma_complex(Complex z);

/// ln B(a, b) = lnGamma(a) + lnGamma(b) - lnGamma(a+b), a, b > 0.
double log_beta(double a, double b);

/// Modified Bessel function of the second kind K_order(z), order in
/// [0, 5], z > 0. Computed from the cosh-integral representation by a
/// trapezoidal rule (spectrally accurate; integrand is even with
/// double-exponential decay).
double bessel_k(double order, double z);

/// exp(z) * K_order(z); stays representable out to very large z.
double bessel_k_scaled(double order, double z);

/// Mittag-Leffler function on the negative real axis: E_nu(-x),
/// nu in (0,1], x >= 0. Integral representation for moderate nu and
/// x >= 1, power series otherwise; E_1(-x) = exp(-x).
double mittag_leffler_neg(double nu, double x);

/// Power-series evaluation of E_nu(-x); exposed as the independent
/// cross-check for the integral route.
double mittag_leffler_neg_series(double nu, double x);

} // namespace subfrac::specfun

#endif
