#ifndef SUBFRAC_SUBORDINATOR_HPP
#define SUBFRAC_SUBORDINATOR_HPP

#include "subfrac/quadrature.hpp"

#include <complex>
#include <optional>

namespace subfrac::subordinator {

using Complex = std::complex<double>;

/// Stability index nu in (0, 1], remembering the exact reciprocal
/// structure nu = 1/(n+1) when present.
struct StabilityIndex {
    double nu;
    std::optional<int> reciprocal; // nu == 1/(reciprocal + 1)

    static StabilityIndex from_fraction(long num, long den);
    /// Detects (and snaps to) a reciprocal-integer nu.
    static StabilityIndex from_value(double nu);
};

/// Time-stretching functions phi_m(s) = (s/m)^m and psi_m(s) = m s^{1/m};
/// psi_m inverts phi_m.
struct TimeStretch {
    enum class Kind { phi, psi };
    int m;
    Kind kind;
};

double time_stretch(const TimeStretch& ts, double s);

/// Density of the nu-stable subordinator for reciprocal nu = 1/(n+1),
/// n >= 1: closed forms for n = 1, 2, paired Bessel-K chains beyond.
double h_density(const StabilityIndex& idx, double x, double t,
                 const quadrature::QuadratureSpec& spec = {});

/// Density of the stable subordinator for any nu in (0,1), by Mellin
/// inversion of the x-transform multiplier.
double h_density_general(double nu, double x, double t,
                         const quadrature::ContourSpec& contour = {0.5, 0.0, 0.0});

/// x-Mellin transform of h_nu: Gamma((1-eta)/nu) t^{(eta-1)/nu} / (nu Gamma(1-eta)).
Complex h_mellin_in_x(double nu, Complex eta, double t);

/// t-Mellin transform of h_nu: Gamma(eta) / Gamma(eta nu) x^{eta nu - 1}.
Complex h_mellin_in_t(double nu, Complex eta, double x);

/// Density of the inverse stable subordinator. Closed Bessel forms for
/// reciprocal nu, Fox-H route otherwise; nu = 1 is a point mass at
/// x = t and is refused (DegenerateCase).
double l_density(const StabilityIndex& idx, double x, double t,
                 const quadrature::QuadratureSpec& spec = {});

/// x-Mellin transform of l_nu: Gamma(eta) / Gamma(eta nu - nu + 1) t^{nu(eta-1)}.
Complex l_mellin_in_x(double nu, Complex eta, double t);

/// Density of the ratio of two independent nu-stable subordinators.
double ratio_density_r(double nu, double w);

/// Density of the ratio of two independent inverse processes.
double ratio_density_k(double nu, double x);

/// CDFs of the two ratio laws (closed arctan forms).
double ratio_cdf_k(double nu, double x);
double ratio_cdf_r(double nu, double w);

/// Composition laws: h o l (x, t) = r(x/t)/t and l o h (x, t) = k(x/t)/t.
double compose_hl_density(double nu, double x, double t);
double compose_lh_density(double nu, double x, double t);

/// The two equivalent e-factor pairings of h_{1/5}; both are single
/// integrals of K x K kernels and must agree.
enum class QuinticPairing { adjacent, interleaved };
double h_quintic(double x, double t, QuinticPairing pairing,
                 const quadrature::QuadratureSpec& spec = {});

} // namespace subfrac::subordinator

#endif
