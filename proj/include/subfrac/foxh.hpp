#ifndef SUBFRAC_FOXH_HPP
#define SUBFRAC_FOXH_HPP

#include "subfrac/quadrature.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace subfrac::foxh {

using Complex = std::complex<double>;

/// One (parameter, weight) pair of a Fox H specification. A zero weight
/// is a constant Gamma factor.
struct GammaPair {
    double a;
    double alpha;
};

/// H^{m,n}_{p,q} parameter block: `upper` holds the (a_i, alpha_i)
/// (length p, first n in the numerator), `lower` the (b_j, beta_j)
/// (length q, first m in the numerator).
struct FoxHParams {
    int m = 0;
    int n = 0;
    std::vector<GammaPair> upper;
    std::vector<GammaPair> lower;

    int p() const { return static_cast<int>(upper.size()); }
    int q() const { return static_cast<int>(lower.size()); }
};

/// The Mellin multiplier
///   prod_1^m Gamma(b_j + eta beta_j) prod_1^n Gamma(1 - a_i - eta alpha_i)
///   / (prod_{m+1}^q Gamma(1 - b_j - eta beta_j) prod_{n+1}^p Gamma(a_i + eta alpha_i)).
Complex mellin_multiplier(const FoxHParams& params, Complex eta);

/// The maximal open interval of Re eta on which every numerator Gamma
/// argument has positive real part (lo from the m-group, hi from the
/// n-group; infinite bounds allowed). Throws EmptyStrip if lo >= hi.
std::pair<double, double> fundamental_strip(const FoxHParams& params);

/// H function value at x > 0 by Mellin-Barnes contour integration.
double eval(const FoxHParams& params, double x, const quadrature::ContourSpec& contour);

/// Same with an automatic contour: abscissa at the midpoint of the
/// (clamped) fundamental strip, adaptive truncation and step.
double eval(const FoxHParams& params, double x);

/// Argument-rescaling identity: eval(params, x) == c * eval(rescale_argument(params, c), x^c).
FoxHParams rescale_argument(const FoxHParams& params, double c);

/// Power-shift identity: eval(params, x) == x^{-c} * eval(shift_power(params, c), x).
FoxHParams shift_power(const FoxHParams& params, double c);

/// Default contour for the given parameters (strip midpoint abscissa).
quadrature::ContourSpec default_contour(const FoxHParams& params);

} // namespace subfrac::foxh

#endif
