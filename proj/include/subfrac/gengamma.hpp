#ifndef SUBFRAC_GENGAMMA_HPP
#define SUBFRAC_GENGAMMA_HPP

#include "subfrac/quadrature.hpp"

#include <complex>
#include <vector>

namespace subfrac::montecarlo {
class CounterRng;
}

namespace subfrac::gengamma {

using Complex = std::complex<double>;

/// (gamma, mu) pair of a generalized Gamma law; gamma < 0 selects the
/// reciprocal (inverse-process) branch.
struct ShapeParams {
    double gamma;
    double mu;
};

using ShapeVector = std::vector<ShapeParams>;

/// Generalized Gamma density gamma z^{gamma mu - 1} e^{-z^gamma} / Gamma(mu),
/// z > 0; requires gamma > 0.
double q_pdf(const ShapeParams& p, double z);

/// Scaled family |gamma| x^{gamma mu - 1} t^{-gamma mu}
/// e^{-(x/t)^gamma} / Gamma(mu); gamma < 0 gives the inverse-process
/// density (e = g with gamma negated).
double g_density(const ShapeParams& p, double x, double t);

/// Density of the inverse process, e^gamma_mu = g^{-gamma}_mu; requires
/// gamma > 0.
double e_density(const ShapeParams& p, double x, double t);

/// x-Mellin transform: Gamma((eta-1)/gamma + mu) / Gamma(mu) t^{eta-1}.
Complex mellin_g_in_x(const ShapeParams& p, Complex eta, double t);

/// t-Mellin transform: Gamma(mu - eta/gamma) / Gamma(mu) x^{eta-1}.
Complex mellin_g_in_t(const ShapeParams& p, Complex eta, double x);

/// Closed form of g^gamma_mu1 * g^{-gamma}_mu2 (Beta-type law).
double conv_opposite_closed(double gamma, double mu1, double mu2, double x, double t);

/// Closed form of g^gamma_mu1 * g^gamma_mu2 (Bessel-K law).
double conv_same_closed(double gamma, double mu1, double mu2, double x, double t);

/// n-fold star-convolution g_{p1} * ... * g_{pn} (x, t). Adjacent pairs
/// with matching |gamma| collapse to the closed Beta/Bessel forms before
/// the remaining chain is integrated numerically; set allow_closed_forms
/// = false to force pure quadrature (useful as an independent route).
double star_convolve(const ShapeVector& v, double x, double t,
                     const quadrature::QuadratureSpec& spec = {},
                     bool allow_closed_forms = true);

/// One draw from g^gamma_mu(., t): t G^{1/gamma} with G ~ Gamma(mu, 1);
/// gamma > 0.
double sample_gengamma(const ShapeParams& p, double t, montecarlo::CounterRng& rng);

} // namespace subfrac::gengamma

#endif
