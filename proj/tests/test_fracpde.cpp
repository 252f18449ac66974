#include "subfrac/errors.hpp"
#include "subfrac/fracpde.hpp"
#include "subfrac/gengamma.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace subfrac;
using fracpde::SolutionSpec;
using subordinator::StabilityIndex;

namespace {

std::vector<double> sample_series(const std::function<double(double)>& f, double dt, long k_max)
{
    std::vector<double> s(k_max + 1);
    for (long k = 0; k <= k_max; ++k)
        s[k] = f(k * dt);
    return s;
}

} // namespace

TEST_CASE("Grunwald-Letnikov derivatives of monomials")
{
    const double nu = 0.5, dt = 1e-3;
    const long k_max = 1500;

    // f = t: RL^nu t = Caputo^nu t = t^{1-nu} / Gamma(2-nu)
    const auto lin = sample_series([](double t) { return t; }, dt, k_max);
    const auto rl = fracpde::riemann_liouville_dt(nu, lin, dt);
    const auto cap = fracpde::caputo_dt(nu, lin, dt);
    for (long k : {500L, 1000L, 1500L}) {
        const double t = k * dt;
        const double exact = std::pow(t, 1.0 - nu) / std::tgamma(2.0 - nu);
        CHECK(rl[k] == doctest::Approx(exact).epsilon(0.02));
        CHECK(cap[k] == doctest::Approx(exact).epsilon(0.02));
    }

    // f = 1: Caputo kills constants, RL gives t^{-nu} / Gamma(1-nu)
    const auto ones = sample_series([](double) { return 1.0; }, dt, k_max);
    const auto rl1 = fracpde::riemann_liouville_dt(nu, ones, dt);
    const auto cap1 = fracpde::caputo_dt(nu, ones, dt);
    for (long k : {500L, 1500L}) {
        const double t = k * dt;
        CHECK(rl1[k] == doctest::Approx(std::pow(t, -nu) / std::tgamma(1.0 - nu)).epsilon(0.02));
        CHECK(std::fabs(cap1[k]) <= 0.02 * rl1[k]);
    }

    // RL = Caputo + f(0) t^{-nu} / Gamma(1-nu) for f with f(0) != 0
    const auto shifted = sample_series([](double t) { return 1.0 + t * t; }, dt, k_max);
    const auto rl2 = fracpde::riemann_liouville_dt(nu, shifted, dt);
    const auto cap2 = fracpde::caputo_dt(nu, shifted, dt);
    for (long k : {700L, 1400L}) {
        const double t = k * dt;
        const double iv = std::pow(t, -nu) / std::tgamma(1.0 - nu);
        CHECK(rl2[k] == doctest::Approx(cap2[k] + iv).epsilon(0.02));
    }
}

TEST_CASE("derivative order and input validation")
{
    const std::vector<double> s{0.0, 0.1, 0.2};
    CHECK_THROWS_AS(fracpde::riemann_liouville_dt(1.2, s, 0.1), DomainError);
    CHECK_THROWS_AS(fracpde::riemann_liouville_dt(0.5, s, 0.0), DomainError);
    CHECK_THROWS_AS(fracpde::riemann_liouville_dt(0.5, {}, 0.1), DomainError);
}

TEST_CASE("apply_generator matches the analytic generator of g")
{
    // For gamma = 1, mu = 2: G g = (-2/t + x/t^2) g = d/dt g.
    const gengamma::ShapeParams shape{1.0, 2.0};
    const double r = 1.01, t = 1.0;
    fracpde::GridField f;
    for (double xc : {0.8, 1.5}) {
        f.x = {xc / (r * r), xc / r, xc, xc * r, xc * r * r};
        f.t = {t};
        f.values.assign(5, 0.0);
        for (int i = 0; i < 5; ++i)
            f.at(i, 0) = gengamma::g_density(shape, f.x[i], t);
        const auto gen = fracpde::apply_generator(shape, f);
        const double exact = (-2.0 / t + xc / (t * t)) * gengamma::g_density(shape, xc, t);
        CHECK(gen.at(2, 0) == doctest::Approx(exact).epsilon(1e-3));
        // boundary rows carry no stencil
        CHECK(std::isnan(gen.at(0, 0)));
        CHECK(std::isnan(gen.at(4, 0)));
    }
}

TEST_CASE("apply_generator refuses a grid without interior points")
{
    fracpde::GridField f;
    f.x = {0.9, 1.0, 1.1};
    f.t = {1.0};
    f.values.assign(3, 0.5);
    CHECK_THROWS_AS(fracpde::apply_generator({1.0, 1.0}, f), GridTooCoarse);
}

TEST_CASE("u_composition reduces to g at nu = 1")
{
    const SolutionSpec spec{{2.0, 0.7}, StabilityIndex::from_fraction(1, 1)};
    for (double x : {0.3, 1.0, 2.1})
        for (double t : {0.6, 1.7})
            CHECK(fracpde::u_composition(spec, x, t)
                  == doctest::Approx(gengamma::g_density({2.0, 0.7}, x, std::pow(t, 0.5)))
                         .epsilon(1e-12));
}

TEST_CASE("the three solution representations agree")
{
    const SolutionSpec spec{{1.0, 1.0}, StabilityIndex::from_fraction(1, 3)};
    for (double x : {0.4, 1.0, 2.3}) {
        const double comp = fracpde::u_composition(spec, x, 1.2);
        const double closed = fracpde::u_closed(spec, x, 1.2);
        const double fox = fracpde::u_foxh(spec, x, 1.2);
        CHECK(closed == doctest::Approx(comp).epsilon(1e-6));
        CHECK(fox == doctest::Approx(comp).epsilon(1e-6));
    }
}

TEST_CASE("u_mellin matches direct integration of the composition")
{
    const SolutionSpec spec{{1.0, 1.0}, StabilityIndex::from_fraction(1, 2)};
    quadrature::QuadratureSpec qs;
    qs.abs_tol = 1e-12;
    qs.rel_tol = 1e-9;
    for (double eta : {0.8, 1.0, 1.6}) {
        const double num = quadrature::integrate_semi_infinite(
                               [&](double x) {
                                   return std::pow(x, eta - 1.0)
                                       * fracpde::u_composition(spec, x, 1.0, qs);
                               },
                               qs)
                               .value;
        CHECK(num == doctest::Approx(fracpde::u_mellin(spec, {eta, 0.0}, 1.0).real())
                         .epsilon(1e-7));
    }
    CHECK_THROWS_AS(fracpde::u_mellin(spec, {-2.0, 0.0}, 1.0), StripViolation);
}

TEST_CASE("pde_residual smoke test")
{
    const SolutionSpec spec{{1.0, 1.0}, StabilityIndex::from_fraction(1, 2)};
    fracpde::ResidualOptions opt;
    opt.nx_check = 2;
    opt.nt_check = 2;
    opt.dt = 4e-3;
    CHECK(fracpde::pde_residual(spec, opt) < 0.02);
}
