#include "subfrac/quadrature.hpp"
#include "subfrac/errors.hpp"

#include <cmath>
#include <limits>

namespace subfrac::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 0.5 * kPi;

struct LevelSum {
    double value = 0.0;
    long evaluations = 0;
};

// One trapezoid level of the exp-sinh rule: x = exp((pi/2) sinh t).
LevelSum exp_sinh_level(const std::function<double(double)>& f, double h)
{
    LevelSum out;
    // k = 0 node
    {
        const double x = 1.0;
        const double w = kHalfPi;
        const double v = f(x);
        if (std::isnan(v))
            throw NaNDetected("integrate_semi_infinite: integrand returned NaN at x = 1");
        out.value += w * v;
        ++out.evaluations;
    }
    for (int sign : {+1, -1}) {
        int stale = 0;
        for (int k = 1; k < 100000; ++k) {
            const double t = sign * k * h;
            const double a = kHalfPi * std::sinh(t);
            if (a > 700.0 || a < -700.0)
                break;
            const double x = std::exp(a);
            const double w = kHalfPi * std::cosh(t) * x;
            const double v = f(x);
            if (std::isnan(v))
                throw NaNDetected("integrate_semi_infinite: integrand returned NaN at x = "
                                  + std::to_string(x));
            const double term = w * v;
            out.value += term;
            ++out.evaluations;
            if (std::fabs(term) < 1e-18 * (std::fabs(out.value) + 1e-300))
                ++stale;
            else
                stale = 0;
            // The break needs |t| >= 3 as well: a displaced peak can leave
            // a cluster of underflowed nodes next to x = 1 at small h.
            if (stale >= 3 && std::fabs(t) >= 3.0)
                break;
        }
    }
    out.value *= h;
    return out;
}

// tanh-sinh level on (a, b): x = mid + half tanh((pi/2) sinh t).
LevelSum tanh_sinh_level(const std::function<double(double)>& f,
                         double a, double b, double h)
{
    LevelSum out;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    {
        const double v = f(mid);
        if (std::isnan(v))
            throw NaNDetected("integrate_finite: integrand returned NaN");
        out.value += kHalfPi * v;
        ++out.evaluations;
    }
    for (int sign : {+1, -1}) {
        int stale = 0;
        for (int k = 1; k < 100000; ++k) {
            const double t = sign * k * h;
            const double s = kHalfPi * std::sinh(t);
            if (std::fabs(s) > 35.0)
                break;
            const double c = std::cosh(s);
            const double x = mid + half * std::tanh(s);
            if (x <= a || x >= b)
                break;
            const double w = kHalfPi * std::cosh(t) / (c * c);
            const double v = f(x);
            if (std::isnan(v))
                throw NaNDetected("integrate_finite: integrand returned NaN");
            const double term = w * v;
            out.value += term;
            ++out.evaluations;
            if (std::fabs(term) < 1e-18 * (std::fabs(out.value) + 1e-300))
                ++stale;
            else
                stale = 0;
            if (stale >= 3 && std::fabs(t) >= 3.0)
                break;
        }
    }
    out.value *= h * half;
    return out;
}

// Plain truncated-uniform fallback on (0, X): midpoint rule, doubling.
LevelSum uniform_level(const std::function<double(double)>& f, double h)
{
    LevelSum out;
    const double X = 50.0;
    const long n = static_cast<long>(X / h);
    for (long k = 0; k < n; ++k) {
        const double x = (k + 0.5) * h;
        const double v = f(x);
        if (std::isnan(v))
            throw NaNDetected("integrate_semi_infinite: integrand returned NaN");
        out.value += v;
        ++out.evaluations;
    }
    out.value *= h;
    return out;
}

IntegralResult refine(const std::function<LevelSum(double)>& level,
                      double h0, const QuadratureSpec& spec)
{
    IntegralResult res;
    double h = h0;
    LevelSum prev = level(h);
    res.evaluations = prev.evaluations;
    for (int r = 0; r < spec.max_refinements; ++r) {
        h *= 0.5;
        const LevelSum cur = level(h);
        res.evaluations += cur.evaluations;
        const double diff = std::fabs(cur.value - prev.value);
        res.value = cur.value;
        res.error_estimate = diff;
        if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(cur.value)))
            return res;
        prev = cur;
    }
    throw NonConvergence("quadrature: tolerance not met after "
                         + std::to_string(spec.max_refinements) + " refinements (last change "
                         + std::to_string(res.error_estimate) + ")");
}

} // namespace

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec)
{
    if (spec.transform == Transform::truncated_uniform)
        return refine([&](double h) { return uniform_level(f, h); }, 0.5, spec);
    return refine([&](double h) { return exp_sinh_level(f, h); }, 0.5, spec);
}

IntegralResult integrate_finite(const std::function<double(double)>& f,
                                double a, double b, const QuadratureSpec& spec)
{
    if (!(b > a))
        throw DomainError("integrate_finite: requires b > a");
    return refine([&](double h) { return tanh_sinh_level(f, a, b, h); }, 0.5, spec);
}

double circ_compose(const std::vector<Kernel>& kernels, double x, double t,
                    const QuadratureSpec& spec)
{
    if (kernels.empty())
        throw DomainError("circ_compose: no kernels");
    if (kernels.size() > 5)
        throw DepthExceeded("circ_compose: more than 4 nested levels");
    if (kernels.size() == 1)
        return kernels.front()(x, t);
    // Tighten the tolerance by 10 per nesting level so the outer error
    // budget is not eaten by the inner integrals.
    QuadratureSpec inner = spec;
    inner.abs_tol *= 0.1;
    inner.rel_tol *= 0.1;
    const std::vector<Kernel> rest(kernels.begin() + 1, kernels.end());
    const auto& head = kernels.front();
    return integrate_semi_infinite(
               [&](double s) {
                   const double a = head(x, s);
                   if (a == 0.0)
                       return 0.0;
                   return a * circ_compose(rest, s, t, inner);
               },
               spec)
        .value;
}

namespace {

struct ContourSum {
    Complex value;
    double last_term = 0.0;
    long evaluations = 0;
};

ContourSum contour_trapezoid(const std::function<Complex(Complex)>& multiplier,
                             double x, double theta, double h, double T)
{
    ContourSum out;
    const double lx = std::log(x);
    const double xmt = std::pow(x, -theta);
    out.value = multiplier(Complex(theta, 0.0)) * xmt;
    ++out.evaluations;
    double peak = std::abs(out.value);
    for (int sign : {+1, -1}) {
        int stale = 0;
        for (int k = 1;; ++k) {
            const double y = sign * k * h;
            if (T > 0.0 && std::fabs(y) > T)
                break;
            const Complex m = multiplier(Complex(theta, y));
            const Complex term = m * (xmt * std::exp(Complex(0.0, -y * lx)));
            out.value += term;
            ++out.evaluations;
            const double mag = std::abs(term);
            peak = std::max(peak, mag);
            out.last_term = mag;
            if (T <= 0.0) {
                if (mag < 1e-16 * (peak + 1e-300))
                    ++stale;
                else
                    stale = 0;
                if (stale >= 3)
                    break;
                if (k > 2000000)
                    throw NonConvergence("mellin_invert: contour terms do not decay");
            }
        }
    }
    out.value *= h / (2.0 * kPi);
    return out;
}

} // namespace

double mellin_invert(const std::function<Complex(Complex)>& multiplier,
                     double x, const ContourSpec& contour)
{
    if (!(x > 0.0))
        throw DomainError("mellin_invert: requires x > 0");
    if (contour.step > 0.0) {
        const ContourSum s = contour_trapezoid(multiplier, x, contour.abscissa,
                                               contour.step, contour.truncation);
        if (contour.truncation > 0.0
            && s.last_term * contour.step > 1e-10 * (std::abs(s.value) + 1e-300))
            throw TruncationError("mellin_invert: tail terms exceed tolerance at |Im eta| = "
                                  + std::to_string(contour.truncation));
        const double re = s.value.real();
        if (std::fabs(s.value.imag()) > 1e-8 * std::fabs(re) + 1e-14)
            throw NonConvergence("mellin_invert: imaginary residual too large");
        return re;
    }
    return mellin_invert_adaptive(multiplier, x, contour).value;
}

IntegralResult mellin_invert_adaptive(const std::function<Complex(Complex)>& multiplier,
                                      double x, ContourSpec contour, double tol)
{
    if (!(x > 0.0))
        throw DomainError("mellin_invert: requires x > 0");
    IntegralResult res;
    double h = contour.step > 0.0 ? contour.step : 0.25;
    ContourSum prev = contour_trapezoid(multiplier, x, contour.abscissa, h, contour.truncation);
    res.evaluations = prev.evaluations;
    for (int r = 0; r < 8; ++r) {
        h *= 0.5;
        const ContourSum cur = contour_trapezoid(multiplier, x, contour.abscissa, h,
                                                 contour.truncation);
        res.evaluations += cur.evaluations;
        const double diff = std::abs(cur.value - prev.value);
        res.value = cur.value.real();
        res.error_estimate = diff;
        if (diff <= std::max(tol * std::fabs(res.value), 1e-14)) {
            if (std::fabs(cur.value.imag()) > 1e-8 * std::fabs(res.value) + 1e-14)
                throw NonConvergence("mellin_invert: imaginary residual too large");
            return res;
        }
        prev = cur;
    }
    throw NonConvergence("mellin_invert: step refinement did not converge");
}

} // namespace subfrac::quadrature
