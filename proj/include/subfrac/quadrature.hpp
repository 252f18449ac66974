#ifndef SUBFRAC_QUADRATURE_HPP
#define SUBFRAC_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace subfrac::quadrature {

using Complex = std::complex<double>;

enum class Transform { double_exponential, truncated_uniform };

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_refinements = 9;
    Transform transform = Transform::double_exponential;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

/// int_0^inf f(x) dx by exp-sinh double-exponential quadrature with
/// step halving until the requested tolerance is met.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureSpec& spec = {});

/// int_a^b f(x) dx by tanh-sinh quadrature (endpoint singularities ok).
IntegralResult integrate_finite(const std::function<double(double)>& f,
                                double a, double b,
                                const QuadratureSpec& spec = {});

/// Two-argument kernel f(x, t).
using Kernel = std::function<double(double, double)>;

/// Iterated composition integral
///   f1 o f2 o ... o fk (x, t) = int...int f1(x,s1) f2(s1,s2) ... fk(s_{k-1},t) ds
/// evaluated by nested adaptive quadrature; the tolerance tightens by a
/// factor of 10 per nesting level. At most 4 nested levels (5 kernels).
double circ_compose(const std::vector<Kernel>& kernels, double x, double t,
                    const QuadratureSpec& spec = {});

/// Vertical-line contour for Mellin inversion: eta = abscissa + i y,
/// |y| <= truncation, trapezoid step h.
struct ContourSpec {
    double abscissa = 1.0;
    double truncation = 0.0; // <= 0: extend until the terms die out
    double step = 0.0;       // <= 0: refine automatically
};

/// Inverse Mellin transform (1/2pi) sum_k M(theta + i k h) x^{-theta-ikh} h
/// over the vertical line. Throws NonConvergence if the imaginary
/// residual exceeds 1e-8 |value| and TruncationError if the truncated
/// tail is not negligible.
double mellin_invert(const std::function<Complex(Complex)>& multiplier,
                     double x, const ContourSpec& contour);

/// Same, but refines the step until the value is stationary and returns
/// the final change as the error estimate.
IntegralResult mellin_invert_adaptive(const std::function<Complex(Complex)>& multiplier,
                                      double x, ContourSpec contour,
                                      double tol = 1e-10);

} // namespace subfrac::quadrature

#endif
