#include "subfrac/foxh.hpp"
#include "subfrac/errors.hpp"
#include "subfrac/specfun.hpp"

#include <cmath>
#include <limits>

namespace subfrac::foxh {

namespace {

void check_orders(const FoxHParams& params)
{
    if (params.m < 0 || params.m > params.q() || params.n < 0 || params.n > params.p())
        throw DomainError("foxh: orders must satisfy 0 <= m <= q, 0 <= n <= p");
    for (const auto& gp : params.upper)
        if (gp.alpha < 0.0)
            throw DomainError("foxh: negative alpha weight");
    for (const auto& gp : params.lower)
        if (gp.alpha < 0.0)
            throw DomainError("foxh: negative beta weight");
}

} // namespace

Complex mellin_multiplier(const FoxHParams& params, Complex eta)
{
    check_orders(params);
    // Sum of log-Gammas, exponentiated once; phases carried by the
    // complex logs, so overflow along the contour is not an issue.
    Complex lg = 0.0;
    for (int j = 0; j < params.m; ++j)
        lg += specfun::log_gamma_complex(params.lower[j].a + eta * params.lower[j].alpha);
    for (int i = 0; i < params.n; ++i)
        lg += specfun::log_gamma_complex(1.0 - params.upper[i].a - eta * params.upper[i].alpha);
    for (int j = params.m; j < params.q(); ++j)
        lg -= specfun::log_gamma_complex(1.0 - params.lower[j].a - eta * params.lower[j].alpha);
    for (int i = params.n; i < params.p(); ++i)
        lg -= specfun::log_gamma_complex(params.upper[i].a + eta * params.upper[i].alpha);
    return std::exp(lg);
}

std::pair<double, double> fundamental_strip(const FoxHParams& params)
{
    check_orders(params);
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < params.m; ++j)
        if (params.lower[j].alpha > 0.0)
            lo = std::max(lo, -params.lower[j].a / params.lower[j].alpha);
    for (int i = 0; i < params.n; ++i)
        if (params.upper[i].alpha > 0.0)
            hi = std::min(hi, (1.0 - params.upper[i].a) / params.upper[i].alpha);
    if (!(lo < hi))
        throw EmptyStrip("foxh: fundamental strip is empty");
    return {lo, hi};
}

quadrature::ContourSpec default_contour(const FoxHParams& params)
{
    const auto [lo, hi] = fundamental_strip(params);
    double clo = lo, chi = hi;
    if (!std::isfinite(clo) && !std::isfinite(chi)) {
        clo = -1.0;
        chi = 1.0;
    } else if (!std::isfinite(chi)) {
        chi = clo + 2.0;
    } else if (!std::isfinite(clo)) {
        clo = chi - 2.0;
    }
    quadrature::ContourSpec contour;
    contour.abscissa = 0.5 * (clo + chi);
    return contour; // truncation/step left adaptive
}

double eval(const FoxHParams& params, double x, const quadrature::ContourSpec& contour)
{
    if (!(x > 0.0))
        throw DomainError("foxh::eval: requires x > 0");
    const auto [lo, hi] = fundamental_strip(params);
    if (!(contour.abscissa > lo) || !(contour.abscissa < hi))
        throw StripViolation("foxh::eval: contour abscissa outside the fundamental strip");
    auto mult = [&](Complex eta) { return mellin_multiplier(params, eta); };
    return quadrature::mellin_invert(mult, x, contour);
}

double eval(const FoxHParams& params, double x)
{
    // Keep x^{-theta} of moderate size on the contour: for extreme x the
    // midpoint abscissa makes the trapezoid terms enormous relative to the
    // result and cancellation noise blocks convergence.  Placing theta at
    // distance ~ 1/|log x| from the strip edge bounds x^{-theta} by e.
    quadrature::ContourSpec contour = default_contour(params);
    const auto [lo, hi] = fundamental_strip(params);
    const double llx = std::fabs(std::log(x));
    if (llx > 2.0) {
        const double half = contour.abscissa - (std::isfinite(lo) ? lo : hi - 2.0);
        if (x < 1.0 && std::isfinite(lo))
            contour.abscissa = lo + std::min(half, 1.0 / llx);
        else if (x > 1.0 && std::isfinite(hi))
            contour.abscissa = hi - std::min(half, 1.0 / llx);
    }
    return eval(params, x, contour);
}

FoxHParams rescale_argument(const FoxHParams& params, double c)
{
    if (!(c > 0.0))
        throw DomainError("rescale_argument: requires c > 0");
    FoxHParams out = params;
    for (auto& gp : out.upper)
        gp.alpha *= c;
    for (auto& gp : out.lower)
        gp.alpha *= c;
    return out;
}

FoxHParams shift_power(const FoxHParams& params, double c)
{
    FoxHParams out = params;
    for (auto& gp : out.upper)
        gp.a += c * gp.alpha;
    for (auto& gp : out.lower)
        gp.a += c * gp.alpha;
    return out;
}

} // namespace subfrac::foxh
