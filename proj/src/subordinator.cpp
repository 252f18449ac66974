#include "subfrac/subordinator.hpp"
#include "subfrac/errors.hpp"
#include "subfrac/foxh.hpp"
#include "subfrac/gengamma.hpp"
#include "subfrac/specfun.hpp"

#include <cmath>
#include <vector>

namespace subfrac::subordinator {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_xt(double x, double t)
{
    if (!(x > 0.0) || !(t > 0.0))
        throw DomainError("subordinator: requires x > 0 and t > 0");
}

void check_nu_open(double nu)
{
    if (!(nu > 0.0) || !(nu < 1.0))
        throw DomainError("subordinator: requires nu in (0, 1)");
}

} // namespace

StabilityIndex StabilityIndex::from_fraction(long num, long den)
{
    if (num <= 0 || den <= 0 || num > den)
        throw DomainError("StabilityIndex: fraction must lie in (0, 1]");
    StabilityIndex idx{static_cast<double>(num) / static_cast<double>(den), std::nullopt};
    if (num == 1)
        idx.reciprocal = static_cast<int>(den - 1);
    return idx;
}

StabilityIndex StabilityIndex::from_value(double nu)
{
    if (!(nu > 0.0) || nu > 1.0)
        throw DomainError("StabilityIndex: requires nu in (0, 1]");
    const double inv = 1.0 / nu;
    const double rounded = std::round(inv);
    if (std::fabs(inv - rounded) < 1e-12 * inv && rounded >= 1.0) {
        StabilityIndex idx{1.0 / rounded, static_cast<int>(rounded) - 1};
        return idx;
    }
    return StabilityIndex{nu, std::nullopt};
}

double time_stretch(const TimeStretch& ts, double s)
{
    if (ts.m < 1)
        throw DomainError("time_stretch: requires m >= 1");
    if (!(s > 0.0))
        throw DomainError("time_stretch: requires s > 0");
    if (ts.kind == TimeStretch::Kind::phi)
        return std::pow(s / ts.m, static_cast<double>(ts.m));
    return ts.m * std::pow(s, 1.0 / ts.m);
}

namespace {

using quadrature::Kernel;

// e_mu = g^{-1}_mu; one collapsed pair e_mu1 * e_mu2 (a Bessel-K kernel).
Kernel e_pair_kernel(double mu1, double mu2)
{
    return [mu1, mu2](double a, double b) {
        return gengamma::conv_same_closed(-1.0, mu1, mu2, a, b);
    };
}

Kernel e_single_kernel(double mu)
{
    return [mu](double a, double b) { return gengamma::g_density({-1.0, mu}, a, b); };
}

// Kernels of the e-chain e_{nu} * e_{2nu} * ... * e_{n nu}, adjacent
// pairs collapsed left to right (order is free by commutativity).
std::vector<Kernel> e_chain(int n, double nu)
{
    std::vector<Kernel> out;
    int j = 1;
    for (; j + 1 <= n; j += 2)
        out.push_back(e_pair_kernel(j * nu, (j + 1) * nu));
    if (j == n)
        out.push_back(e_single_kernel(n * nu));
    return out;
}

// Same for the g^{(n+1)}-chain of Lemma 2.
std::vector<Kernel> g_chain(int n, double nu)
{
    const double gam = n + 1.0;
    std::vector<Kernel> out;
    int j = 1;
    for (; j + 1 <= n; j += 2) {
        const double mu1 = j * nu, mu2 = (j + 1) * nu;
        out.push_back([gam, mu1, mu2](double a, double b) {
            return gengamma::conv_same_closed(gam, mu1, mu2, a, b);
        });
    }
    if (j == n) {
        const double mu = n * nu;
        out.push_back([gam, mu](double a, double b) {
            return gengamma::g_density({gam, mu}, a, b);
        });
    }
    return out;
}

} // namespace

double h_density(const StabilityIndex& idx, double x, double t,
                 const quadrature::QuadratureSpec& spec)
{
    check_xt(x, t);
    if (!idx.reciprocal || *idx.reciprocal < 1)
        throw DomainError("h_density: requires nu = 1/(n+1) with n >= 1");
    const int n = *idx.reciprocal;
    const double nu = 1.0 / (n + 1.0);
    if (n == 1) {
        // h_{1/2}(x,t) = t x^{-3/2} e^{-t^2/(4x)} / (2 sqrt(pi))
        return t * std::pow(x, -1.5) * std::exp(-t * t / (4.0 * x)) / (2.0 * std::sqrt(kPi));
    }
    if (n == 2) {
        // h_{1/3}(x,t) = (1/(3 pi)) (t/x)^{3/2} K_{1/3}(2 t^{3/2} / (3^{3/2} sqrt(x)))
        const double z = 2.0 * std::pow(t, 1.5) / (std::pow(3.0, 1.5) * std::sqrt(x));
        return std::pow(t / x, 1.5) * specfun::bessel_k(1.0 / 3.0, z) / (3.0 * kPi);
    }
    const double u = time_stretch({n + 1, TimeStretch::Kind::phi}, t);
    // The density decays over many orders of magnitude in x; an absolute
    // tolerance would let the refinement stop at the first level deep in the
    // tail, so the chain is integrated against the relative tolerance only.
    quadrature::QuadratureSpec rel = spec;
    rel.abs_tol = 0.0;
    return quadrature::circ_compose(e_chain(n, nu), x, u, rel);
}

double h_density_general(double nu, double x, double t,
                         const quadrature::ContourSpec& contour)
{
    check_nu_open(nu);
    check_xt(x, t);
    auto mult = [nu, t](Complex eta) { return h_mellin_in_x(nu, eta, t); };
    return quadrature::mellin_invert_adaptive(mult, x, contour).value;
}

Complex h_mellin_in_x(double nu, Complex eta, double t)
{
    check_nu_open(nu);
    if (!(t > 0.0))
        throw DomainError("h_mellin_in_x: requires t > 0");
    if (std::abs(eta - 1.0) < 1e-14)
        return 1.0; // normalization, as the analytic limit
    if (!(eta.real() > 0.0) || !(eta.real() < 1.0))
        throw StripViolation("h_mellin_in_x: requires Re eta in (0, 1)");
    return std::exp(specfun::log_gamma_complex((1.0 - eta) / nu)
                    - specfun::log_gamma_complex(1.0 - eta)
                    + (eta - 1.0) / nu * std::log(t))
        / nu;
}

Complex h_mellin_in_t(double nu, Complex eta, double x)
{
    check_nu_open(nu);
    if (!(x > 0.0))
        throw DomainError("h_mellin_in_t: requires x > 0");
    const Complex en = eta * nu;
    if (!(en.real() > 0.0) || !(en.real() < 1.0))
        throw StripViolation("h_mellin_in_t: requires Re(eta nu) in (0, 1)");
    return std::exp(specfun::log_gamma_complex(eta) - specfun::log_gamma_complex(en)
                    + (en - 1.0) * std::log(x));
}

double l_density(const StabilityIndex& idx, double x, double t,
                 const quadrature::QuadratureSpec& spec)
{
    check_xt(x, t);
    if (idx.nu == 1.0)
        throw DegenerateCase("l_density: nu = 1 is a point mass at x = t");
    const double nu = idx.nu;
    if (idx.reciprocal) {
        const int n = *idx.reciprocal;
        if (n == 1) {
            // l_{1/2}(x,t) = e^{-x^2/(4t)} / sqrt(pi t)
            return std::exp(-x * x / (4.0 * t)) / std::sqrt(kPi * t);
        }
        if (n == 2) {
            // l_{1/3}(x,t) = (1/pi) sqrt(x/t) K_{1/3}(2 x^{3/2} / (3^{3/2} sqrt(t)))
            const double z = 2.0 * std::pow(x, 1.5) / (std::pow(3.0, 1.5) * std::sqrt(t));
            return std::sqrt(x / t) * specfun::bessel_k(1.0 / 3.0, z) / kPi;
        }
        const double u = time_stretch({n + 1, TimeStretch::Kind::psi}, t);
        // Relative tolerance only, for the same reason as in h_density.
        quadrature::QuadratureSpec rel = spec;
        rel.abs_tol = 0.0;
        return quadrature::circ_compose(g_chain(n, nu), x, u, rel);
    }
    // General nu via the Fox-H representation of l_nu.
    foxh::FoxHParams params;
    params.m = 1;
    params.n = 0;
    params.upper = {{1.0 - nu, nu}};
    params.lower = {{0.0, 1.0}};
    const double tn = std::pow(t, nu);
    return foxh::eval(params, x / tn) / tn;
}

Complex l_mellin_in_x(double nu, Complex eta, double t)
{
    check_nu_open(nu);
    if (!(t > 0.0))
        throw DomainError("l_mellin_in_x: requires t > 0");
    if (!(eta.real() > 0.0) || !(eta.real() < 1.0 / nu))
        throw StripViolation("l_mellin_in_x: requires Re eta in (0, 1/nu)");
    return std::exp(specfun::log_gamma_complex(eta)
                    - specfun::log_gamma_complex(eta * nu - nu + 1.0)
                    + nu * (eta - 1.0) * std::log(t));
}

double ratio_density_r(double nu, double w)
{
    check_nu_open(nu);
    if (!(w > 0.0))
        throw DomainError("ratio_density_r: requires w > 0");
    // log-space for the powers of w to keep the tails finite.
    const double lw = std::log(w);
    const double c = std::cos(kPi * nu), s = std::sin(kPi * nu);
    // r(w) = (s/pi) w^{nu-1} / (1 + 2 w^nu c + w^{2nu}); divide through by
    // w^{2nu} when w^nu is large.
    const double a = nu * lw;
    if (a < 350.0) {
        const double wn = std::exp(a);
        return s / kPi * std::exp((nu - 1.0) * lw) / (1.0 + 2.0 * wn * c + wn * wn);
    }
    return s / kPi * std::exp((nu - 1.0) * lw - 2.0 * a);
}

double ratio_density_k(double nu, double x)
{
    check_nu_open(nu);
    if (!(x > 0.0))
        throw DomainError("ratio_density_k: requires x > 0");
    const double c = std::cos(kPi * nu), s = std::sin(kPi * nu);
    return s / (nu * kPi) / (1.0 + 2.0 * x * c + x * x);
}

double ratio_cdf_k(double nu, double x)
{
    check_nu_open(nu);
    if (!(x >= 0.0))
        throw DomainError("ratio_cdf_k: requires x >= 0");
    const double c = std::cos(kPi * nu), s = std::sin(kPi * nu);
    return (std::atan((x + c) / s) - (0.5 * kPi - kPi * nu)) / (nu * kPi);
}

double ratio_cdf_r(double nu, double w)
{
    if (!(w >= 0.0))
        throw DomainError("ratio_cdf_r: requires w >= 0");
    return ratio_cdf_k(nu, std::pow(w, nu));
}

double compose_hl_density(double nu, double x, double t)
{
    check_xt(x, t);
    return ratio_density_r(nu, x / t) / t;
}

double compose_lh_density(double nu, double x, double t)
{
    check_xt(x, t);
    return ratio_density_k(nu, x / t) / t;
}

double h_quintic(double x, double t, QuinticPairing pairing,
                 const quadrature::QuadratureSpec& spec)
{
    check_xt(x, t);
    const double t52 = std::pow(t, 2.5);
    const double c5 = 2.0 / std::pow(5.0, 2.5);
    if (pairing == QuinticPairing::adjacent) {
        // (e_{1/5} * e_{2/5}) * (e_{3/5} * e_{4/5}) at (x, (t/5)^5)
        const double pref = std::pow(t, 3.5) / (125.0 * kPi * kPi * std::pow(x, 1.3));
        return pref
            * quadrature::integrate_semi_infinite(
                  [&](double s) {
                      return std::pow(s, -1.4)
                          * specfun::bessel_k(0.2, 2.0 * std::sqrt(s / x))
                          * specfun::bessel_k(0.2, c5 * t52 / std::sqrt(s));
                  },
                  spec)
                  .value;
    }
    // (e_{1/5} * e_{3/5}) * (e_{2/5} * e_{4/5}) at (x, (t/5)^5)
    const double pref = std::pow(t, 3.0) / (std::pow(5.0, 2.5) * kPi * kPi * std::pow(x, 1.4));
    return pref
        * quadrature::integrate_semi_infinite(
              [&](double s) {
                  return std::pow(s, -1.2)
                      * specfun::bessel_k(0.4, 2.0 * std::sqrt(s / x))
                      * specfun::bessel_k(0.4, c5 * t52 / std::sqrt(s));
              },
              spec)
              .value;
}

} // namespace subfrac::subordinator
