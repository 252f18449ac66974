#ifndef SUBFRAC_FRACPDE_HPP
#define SUBFRAC_FRACPDE_HPP

#include "subfrac/gengamma.hpp"
#include "subfrac/quadrature.hpp"
#include "subfrac/subordinator.hpp"

#include <complex>
#include <vector>

namespace subfrac::fracpde {

using Complex = std::complex<double>;

/// Parameters of the solution field u^{gamma,mu}_nu: the generalized
/// Gamma shape (gamma > 0) and the stability index of the time change.
struct SolutionSpec {
    gengamma::ShapeParams shape; // gamma > 0, mu > 0
    subordinator::StabilityIndex idx;
};

/// A density/solution field sampled on an (x, t) grid; values stored
/// row-major as values[i * t.size() + j] = field(x[i], t[j]).
struct GridField {
    std::vector<double> x;
    std::vector<double> t;
    std::vector<double> values;

    double& at(std::size_t i, std::size_t j) { return values[i * t.size() + j]; }
    double at(std::size_t i, std::size_t j) const { return values[i * t.size() + j]; }
};

/// Composition representation: int_0^inf g^gamma_mu(x, s^{1/gamma})
/// l_nu(s, t) ds; reduces to g^gamma_mu(x, t^{1/gamma}) at nu = 1.
double u_composition(const SolutionSpec& spec, double x, double t,
                     const quadrature::QuadratureSpec& quad = {});

/// Closed generalized-Gamma-convolution form for nu = 1/(2n+1): outer
/// integral over Bessel-K kernel chains.
double u_closed(const SolutionSpec& spec, double x, double t,
                const quadrature::QuadratureSpec& quad = {});

/// Fox H representation (gamma/x) H^{2,0}_{2,2}[x^gamma / t^nu | ...].
double u_foxh(const SolutionSpec& spec, double x, double t);
double u_foxh(const SolutionSpec& spec, double x, double t,
              const quadrature::ContourSpec& contour);

/// x-Mellin transform of the solution field.
Complex u_mellin(const SolutionSpec& spec, Complex eta, double t);

/// G_{gamma,mu} f = gamma^{-2} (d/dx x^{2-gamma} d/dx - (gamma mu - 1)
/// d/dx x^{1-gamma}) f, by central finite differences on the (possibly
/// nonuniform) x grid, applied per t column. Boundary rows are left as
/// NaN (one-sided stencils are not attempted).
GridField apply_generator(const gengamma::ShapeParams& shape, const GridField& field);

/// Grunwald-Letnikov discretization of the Riemann-Liouville derivative
/// of order nu in (0,1) of a series sampled at t_k = k dt.
std::vector<double> riemann_liouville_dt(double nu, const std::vector<double>& series,
                                         double dt);

/// Caputo derivative: Riemann-Liouville minus the initial-value term
/// f(0) t^{-nu} / Gamma(1-nu).
std::vector<double> caputo_dt(double nu, const std::vector<double>& series, double dt);

struct ResidualOptions {
    double x_lo = 0.5, x_hi = 3.0;
    double t_lo = 0.5, t_hi = 2.0;
    int nx_check = 4;
    int nt_check = 4;
    double dt = 2e-3;             // uniform GL step
    double stencil_ratio = 1.015; // log spacing of the local x stencil
    quadrature::QuadratureSpec quad{1e-11, 1e-9, 9, quadrature::Transform::double_exponential};
};

/// Max over the interior check nodes of |D^nu_t u - G_{gamma,mu} u|,
/// normalized per x by the largest |D^nu_t u| among the check times
/// (the derivative changes sign inside the grid, so a pointwise
/// relative error is not meaningful). u is evaluated from the
/// composition representation.
double pde_residual(const SolutionSpec& spec, const ResidualOptions& opt = {});

} // namespace subfrac::fracpde

#endif
