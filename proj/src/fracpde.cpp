#include "subfrac/fracpde.hpp"
#include "subfrac/errors.hpp"
#include "subfrac/foxh.hpp"
#include "subfrac/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subfrac::fracpde {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_spec(const SolutionSpec& spec)
{
    if (!(spec.shape.gamma > 0.0) || !(spec.shape.mu > 0.0))
        throw DomainError("fracpde: requires gamma > 0 and mu > 0");
    if (!(spec.idx.nu > 0.0) || spec.idx.nu > 1.0)
        throw DomainError("fracpde: requires nu in (0, 1]");
}

double g_tilde(const gengamma::ShapeParams& shape, double x, double t)
{
    return gengamma::g_density(shape, x, std::pow(t, 1.0 / shape.gamma));
}

} // namespace

double u_composition(const SolutionSpec& spec, double x, double t,
                     const quadrature::QuadratureSpec& quad)
{
    check_spec(spec);
    if (!(x > 0.0) || !(t > 0.0))
        throw DomainError("u_composition: requires x > 0 and t > 0");
    if (spec.idx.nu == 1.0)
        return g_tilde(spec.shape, x, t);
    const double invg = 1.0 / spec.shape.gamma;
    return quadrature::integrate_semi_infinite(
               [&](double s) {
                   const double g = gengamma::g_density(spec.shape, x, std::pow(s, invg));
                   if (g == 0.0)
                       return 0.0;
                   return g * subordinator::l_density(spec.idx, s, t, quad);
               },
               quad)
        .value;
}

double u_closed(const SolutionSpec& spec, double x, double t,
                const quadrature::QuadratureSpec& quad)
{
    check_spec(spec);
    if (!(x > 0.0) || !(t > 0.0))
        throw DomainError("u_closed: requires x > 0 and t > 0");
    const double nu = spec.idx.nu;
    if (!spec.idx.reciprocal || *spec.idx.reciprocal % 2 != 0)
        throw DomainError("u_closed: requires nu = 1/(2n+1)");
    const int n = *spec.idx.reciprocal / 2;
    if (n == 0)
        return g_tilde(spec.shape, x, t);
    const double gam = spec.shape.gamma, mu = spec.shape.mu;
    const double xg = std::pow(x, gam);
    const double T = std::pow(t, nu) / nu;
    const double order = 0.5 * (1.0 - nu);
    // Q_{(1-nu)/2}(a, b) = K_{(1-nu)/2}(2 sqrt((a/b)^{1/nu}))
    auto q_kernel = [nu, order](double a, double b) {
        const double z = 2.0 * std::exp(0.5 / nu * (std::log(a) - std::log(b)));
        if (!(z > 0.0) || !std::isfinite(z))
            return 0.0;
        const double lk = std::log(specfun::bessel_k_scaled(order, z)) - z;
        return lk < -745.0 ? 0.0 : std::exp(lk);
    };
    std::vector<quadrature::Kernel> chain(n, q_kernel);
    auto v = [&](double s) { return quadrature::circ_compose(chain, s, T, quad); };
    const double s_exp = 0.25 / nu - 0.25 - mu;
    const double log_pref = std::log(gam) + (gam * mu - 1.0) * std::log(x)
        + (1.0 - 3.0 * nu) / (4.0 * nu) * std::log(nu)
        - (1.0 - nu) / (4.0 * nu) * std::log(kPi * kPi * std::pow(t, 3.0 * nu))
        - std::lgamma(mu);
    const double integral = quadrature::integrate_semi_infinite(
                                [&](double s) {
                                    const double w = s_exp * std::log(s) - xg / s;
                                    if (w < -745.0)
                                        return 0.0;
                                    return std::exp(w) * v(s);
                                },
                                quad)
                                .value;
    return std::exp(log_pref) * integral;
}

namespace {

foxh::FoxHParams u_foxh_params(const SolutionSpec& spec)
{
    foxh::FoxHParams params;
    params.m = 2;
    params.n = 0;
    params.upper = {{1.0, spec.idx.nu}, {spec.shape.mu, 0.0}};
    params.lower = {{1.0, 1.0}, {spec.shape.mu, 1.0}};
    return params;
}

} // namespace

double u_foxh(const SolutionSpec& spec, double x, double t,
              const quadrature::ContourSpec& contour)
{
    check_spec(spec);
    if (!(x > 0.0) || !(t > 0.0))
        throw DomainError("u_foxh: requires x > 0 and t > 0");
    const double z = std::pow(x, spec.shape.gamma) / std::pow(t, spec.idx.nu);
    return spec.shape.gamma / x * foxh::eval(u_foxh_params(spec), z, contour);
}

double u_foxh(const SolutionSpec& spec, double x, double t)
{
    check_spec(spec);
    if (!(x > 0.0) || !(t > 0.0))
        throw DomainError("u_foxh: requires x > 0 and t > 0");
    const auto params = u_foxh_params(spec);
    const double z = std::pow(x, spec.shape.gamma) / std::pow(t, spec.idx.nu);
    return spec.shape.gamma / x * foxh::eval(params, z);
}

Complex u_mellin(const SolutionSpec& spec, Complex eta, double t)
{
    check_spec(spec);
    if (!(t > 0.0))
        throw DomainError("u_mellin: requires t > 0");
    const double gam = spec.shape.gamma, mu = spec.shape.mu, nu = spec.idx.nu;
    if (!(eta.real() > 1.0 - gam * mu) || !(eta.real() < 1.0 + gam / nu - gam))
        throw StripViolation("u_mellin: Re eta outside (1 - gamma mu, 1 + gamma/nu - gamma)");
    const Complex s = (eta - 1.0) / gam;
    return std::exp(specfun::log_gamma_complex(s + mu) + specfun::log_gamma_complex(s + 1.0)
                    - std::lgamma(mu) - specfun::log_gamma_complex(s * nu + 1.0)
                    + s * nu * std::log(t));
}

namespace {

// Nonuniform 3-point central first derivative along x, per t column.
std::vector<double> ddx(const std::vector<double>& x, const std::vector<double>& f)
{
    const std::size_t n = x.size();
    std::vector<double> out(n, std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = x[i] - x[i - 1];
        const double h2 = x[i + 1] - x[i];
        out[i] = -h2 / (h1 * (h1 + h2)) * f[i - 1]
            + (h2 - h1) / (h1 * h2) * f[i]
            + h1 / (h2 * (h1 + h2)) * f[i + 1];
    }
    return out;
}

} // namespace

GridField apply_generator(const gengamma::ShapeParams& shape, const GridField& field)
{
    if (field.x.size() < 5)
        throw GridTooCoarse("apply_generator: needs at least 5 x nodes");
    if (field.values.size() != field.x.size() * field.t.size())
        throw DomainError("apply_generator: value matrix shape mismatch");
    for (std::size_t i = 1; i < field.x.size(); ++i)
        if (!(field.x[i] > field.x[i - 1]))
            throw DomainError("apply_generator: x nodes must be strictly increasing");
    const double gam = shape.gamma;
    const double c1 = 1.0 / (gam * gam);
    const std::size_t nx = field.x.size(), nt = field.t.size();
    GridField out{field.x, field.t,
                  std::vector<double>(nx * nt, std::numeric_limits<double>::quiet_NaN())};
    std::vector<double> col(nx), flux(nx), drift(nx);
    for (std::size_t j = 0; j < nt; ++j) {
        for (std::size_t i = 0; i < nx; ++i)
            col[i] = field.at(i, j);
        const auto fp = ddx(field.x, col);
        for (std::size_t i = 0; i < nx; ++i) {
            flux[i] = std::pow(field.x[i], 2.0 - gam) * fp[i];
            drift[i] = std::pow(field.x[i], 1.0 - gam) * col[i];
        }
        const auto dflux = ddx(field.x, flux);
        const auto ddrift = ddx(field.x, drift);
        for (std::size_t i = 2; i + 2 < nx; ++i)
            out.at(i, j) = c1 * (dflux[i] - (gam * shape.mu - 1.0) * ddrift[i]);
    }
    return out;
}

std::vector<double> riemann_liouville_dt(double nu, const std::vector<double>& series,
                                         double dt)
{
    if (!(nu > 0.0) || !(nu < 1.0))
        throw DomainError("riemann_liouville_dt: requires nu in (0, 1)");
    if (!(dt > 0.0))
        throw DomainError("riemann_liouville_dt: requires dt > 0");
    if (series.empty())
        throw DomainError("riemann_liouville_dt: empty series");
    const std::size_t n = series.size();
    // Grunwald-Letnikov weights g_j = (-1)^j binom(nu, j).
    std::vector<double> w(n);
    if (n > 0)
        w[0] = 1.0;
    for (std::size_t j = 1; j < n; ++j)
        w[j] = w[j - 1] * (static_cast<double>(j) - 1.0 - nu) / static_cast<double>(j);
    std::vector<double> out(n, 0.0);
    const double scale = std::pow(dt, -nu);
    for (std::size_t k = 0; k < n; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j)
            acc += w[j] * series[k - j];
        out[k] = scale * acc;
    }
    return out;
}

std::vector<double> caputo_dt(double nu, const std::vector<double>& series, double dt)
{
    auto out = riemann_liouville_dt(nu, series, dt);
    if (out.empty())
        return out;
    const double f0 = series.front();
    const double c = f0 / std::tgamma(1.0 - nu);
    for (std::size_t k = 1; k < out.size(); ++k)
        out[k] -= c * std::pow(k * dt, -nu);
    out[0] = f0 == 0.0 ? out[0] : std::numeric_limits<double>::quiet_NaN();
    return out;
}

double pde_residual(const SolutionSpec& spec, const ResidualOptions& opt)
{
    check_spec(spec);
    const double nu = spec.idx.nu;
    const double dt = opt.dt;
    const long k_max = std::lround(opt.t_hi / dt);

    std::vector<double> x_check(opt.nx_check);
    for (int i = 0; i < opt.nx_check; ++i) {
        const double f = opt.nx_check == 1 ? 0.5 : static_cast<double>(i) / (opt.nx_check - 1);
        x_check[i] = opt.x_lo * std::pow(opt.x_hi / opt.x_lo, f);
    }
    std::vector<long> k_check(opt.nt_check);
    for (int j = 0; j < opt.nt_check; ++j) {
        const double f = opt.nt_check == 1 ? 0.5 : static_cast<double>(j) / (opt.nt_check - 1);
        k_check[j] = std::lround((opt.t_lo + f * (opt.t_hi - opt.t_lo)) / dt);
    }

    const double r = opt.stencil_ratio;
    double worst = 0.0;
    for (double xc : x_check) {
        // Time series at the stencil center for the fractional derivative.
        const long k_top = nu == 1.0 ? k_max + 1 : k_max;
        std::vector<double> series(k_top + 1, 0.0);
        for (long k = 1; k <= k_top; ++k)
            series[k] = u_composition(spec, xc, k * dt, opt.quad);
        std::vector<double> dnu;
        if (nu < 1.0)
            dnu = riemann_liouville_dt(nu, series, dt);

        GridField field;
        field.x = {xc / (r * r), xc / r, xc, xc * r, xc * r * r};
        for (long kc : k_check)
            field.t.push_back(kc * dt);
        field.values.assign(field.x.size() * field.t.size(), 0.0);
        for (std::size_t i = 0; i < field.x.size(); ++i)
            for (std::size_t j = 0; j < field.t.size(); ++j)
                field.at(i, j) = i == 2 ? series[k_check[j]]
                                        : u_composition(spec, field.x[i], field.t[j], opt.quad);
        const GridField gen = apply_generator(spec.shape, field);

        // Normalize by the largest time-derivative magnitude among the check
        // times at this x: the derivative crosses zero inside the grid (for
        // nu = 1 along x = 2t already), where a pointwise relative error is
        // meaningless.
        std::vector<double> dt_terms(field.t.size());
        double scale = 0.0;
        for (std::size_t j = 0; j < field.t.size(); ++j) {
            const long kc = k_check[j];
            dt_terms[j] = nu == 1.0
                ? (series[kc + 1] - series[kc - 1]) / (2.0 * dt)
                : dnu[kc];
            scale = std::max(scale, std::fabs(dt_terms[j]));
        }
        for (std::size_t j = 0; j < field.t.size(); ++j) {
            const double res = std::fabs(dt_terms[j] - gen.at(2, j)) / (scale + 1e-12);
            worst = std::max(worst, res);
        }
    }
    return worst;
}

} // namespace subfrac::fracpde
