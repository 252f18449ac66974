#include "subfrac/gengamma.hpp"
#include "subfrac/errors.hpp"
#include "subfrac/montecarlo.hpp"
#include "subfrac/specfun.hpp"

#include <cmath>

namespace subfrac::gengamma {

namespace {

void check_positive(double x, double t)
{
    if (!(x > 0.0) || !(t > 0.0))
        throw DomainError("gengamma: requires x > 0 and t > 0");
}

void check_shape(const ShapeParams& p)
{
    if (p.gamma == 0.0 || !(p.mu > 0.0))
        throw DomainError("gengamma: requires gamma != 0 and mu > 0");
}

} // namespace

double q_pdf(const ShapeParams& p, double z)
{
    check_shape(p);
    if (!(p.gamma > 0.0))
        throw DomainError("q_pdf: requires gamma > 0");
    if (!(z > 0.0))
        throw DomainError("q_pdf: requires z > 0");
    return g_density(p, z, 1.0);
}

double g_density(const ShapeParams& p, double x, double t)
{
    check_shape(p);
    check_positive(x, t);
    // log-density first, exponentiate last.
    const double r = std::pow(x / t, p.gamma);
    if (!std::isfinite(r))
        throw OverflowError("g_density: (x/t)^gamma not representable");
    const double logd = std::log(std::fabs(p.gamma))
        + (p.gamma * p.mu - 1.0) * std::log(x)
        - p.gamma * p.mu * std::log(t)
        - r - std::lgamma(p.mu);
    return std::exp(logd);
}

double e_density(const ShapeParams& p, double x, double t)
{
    check_shape(p);
    if (!(p.gamma > 0.0))
        throw DomainError("e_density: requires gamma > 0");
    return g_density({-p.gamma, p.mu}, x, t);
}

Complex mellin_g_in_x(const ShapeParams& p, Complex eta, double t)
{
    check_shape(p);
    if (!(t > 0.0))
        throw DomainError("mellin_g_in_x: requires t > 0");
    const Complex arg = (eta - 1.0) / p.gamma + p.mu;
    if (!(arg.real() > 0.0))
        throw StripViolation("mellin_g_in_x: Re((eta-1)/gamma + mu) must be positive");
    return std::exp(specfun::log_gamma_complex(arg) - std::lgamma(p.mu)
                    + (eta - 1.0) * std::log(t));
}

Complex mellin_g_in_t(const ShapeParams& p, Complex eta, double x)
{
    check_shape(p);
    if (!(x > 0.0))
        throw DomainError("mellin_g_in_t: requires x > 0");
    const Complex arg = p.mu - eta / p.gamma;
    if (!(arg.real() > 0.0))
        throw StripViolation("mellin_g_in_t: Re(mu - eta/gamma) must be positive");
    return std::exp(specfun::log_gamma_complex(arg) - std::lgamma(p.mu)
                    + (eta - 1.0) * std::log(x));
}

double conv_opposite_closed(double gamma, double mu1, double mu2, double x, double t)
{
    if (!(gamma > 0.0) || !(mu1 > 0.0) || !(mu2 > 0.0))
        throw DomainError("conv_opposite_closed: requires gamma, mu1, mu2 > 0");
    check_positive(x, t);
    const double logd = std::log(gamma) - specfun::log_beta(mu1, mu2)
        + (gamma * mu1 - 1.0) * std::log(x) + gamma * mu2 * std::log(t)
        - (mu1 + mu2) * std::log(std::pow(t, gamma) + std::pow(x, gamma));
    return std::exp(logd);
}

double conv_same_closed(double gamma, double mu1, double mu2, double x, double t)
{
    if (gamma == 0.0 || !(mu1 > 0.0) || !(mu2 > 0.0))
        throw DomainError("conv_same_closed: requires gamma != 0, mu1, mu2 > 0");
    check_positive(x, t);
    const double lr = gamma * (std::log(x) - std::log(t)); // log((x/t)^gamma)
    const double z = 2.0 * std::exp(0.5 * lr);             // 2 sqrt((x/t)^gamma)
    if (!(z > 0.0) || !std::isfinite(z))
        return 0.0;
    const double logk = std::log(specfun::bessel_k_scaled(mu2 - mu1, z)) - z;
    const double logd = std::log(2.0 * std::fabs(gamma))
        + 0.5 * (mu1 + mu2) * lr + logk
        - std::log(x) - std::lgamma(mu1) - std::lgamma(mu2);
    return std::exp(logd);
}

namespace {

using quadrature::Kernel;

// Turn the shape chain into composition kernels, collapsing adjacent
// compatible pairs to their closed forms (left to right).
std::vector<Kernel> chain_kernels(const ShapeVector& v, bool allow_closed)
{
    std::vector<Kernel> out;
    for (std::size_t i = 0; i < v.size();) {
        if (allow_closed && i + 1 < v.size()) {
            const ShapeParams a = v[i], b = v[i + 1];
            if (a.gamma == b.gamma) {
                out.push_back([a, b](double xx, double tt) {
                    return conv_same_closed(a.gamma, a.mu, b.mu, xx, tt);
                });
                i += 2;
                continue;
            }
            if (a.gamma == -b.gamma) {
                if (a.gamma > 0.0)
                    out.push_back([a, b](double xx, double tt) {
                        return conv_opposite_closed(a.gamma, a.mu, b.mu, xx, tt);
                    });
                else
                    // mirrored form: g^{-gamma}_mu1 * g^gamma_mu2 swaps the
                    // roles of the two exponents (B is symmetric).
                    out.push_back([a, b](double xx, double tt) {
                        return conv_opposite_closed(b.gamma, b.mu, a.mu, xx, tt);
                    });
                i += 2;
                continue;
            }
        }
        const ShapeParams a = v[i];
        out.push_back([a](double xx, double tt) { return g_density(a, xx, tt); });
        ++i;
    }
    return out;
}

} // namespace

double star_convolve(const ShapeVector& v, double x, double t,
                     const quadrature::QuadratureSpec& spec, bool allow_closed_forms)
{
    if (v.empty())
        throw DomainError("star_convolve: empty shape vector");
    for (const auto& p : v)
        check_shape(p);
    check_positive(x, t);
    if (v.size() == 1)
        return g_density(v.front(), x, t);
    return quadrature::circ_compose(chain_kernels(v, allow_closed_forms), x, t, spec);
}

double sample_gengamma(const ShapeParams& p, double t, montecarlo::CounterRng& rng)
{
    check_shape(p);
    if (!(p.gamma > 0.0) || !(t > 0.0))
        throw DomainError("sample_gengamma: requires gamma > 0 and t > 0");
    const double g = rng.gamma_variate(p.mu);
    return t * std::pow(g, 1.0 / p.gamma);
}

} // namespace subfrac::gengamma
