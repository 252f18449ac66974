#include "subfrac/errors.hpp"
#include "subfrac/quadrature.hpp"
#include "subfrac/specfun.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace subfrac;
using quadrature::Complex;

TEST_CASE("integrate_semi_infinite on standard integrals")
{
    auto one = quadrature::integrate_semi_infinite([](double x) { return std::exp(-x); });
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-12));

    auto gauss = quadrature::integrate_semi_infinite([](double x) { return std::exp(-x * x); });
    CHECK(gauss.value == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));

    // slow power-law decay with an integrable singularity at 0
    auto cauchy = quadrature::integrate_semi_infinite(
        [](double x) { return 1.0 / (std::sqrt(x) * (1.0 + x)); });
    CHECK(cauchy.value == doctest::Approx(M_PI).epsilon(1e-10));
}

TEST_CASE("integrate_semi_infinite resolves a displaced narrow peak")
{
    // The peak sits at s ~ 2 phi / 3 ~ 0.0026, far from the exp-sinh
    // center; the first trapezoid nodes next to s = 1 underflow, which
    // must not be mistaken for a dead tail.
    const double phi = std::pow(0.25, 4);
    auto res = quadrature::integrate_semi_infinite(
        [phi](double s) { return std::pow(s, -1.5) * std::exp(-phi / s); });
    CHECK(res.value == doctest::Approx(std::sqrt(M_PI / phi)).epsilon(1e-11));
}

TEST_CASE("integrate_finite handles endpoint singularities")
{
    auto sqrt_sing = quadrature::integrate_finite(
        [](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    // node placement next to x = 0 bottoms out near 1e-17 in doubles, so
    // an x^{-1/2} endpoint singularity keeps a ~1e-8 truncation remainder
    CHECK(sqrt_sing.value == doctest::Approx(2.0).epsilon(1e-7));

    auto log_sing = quadrature::integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(log_sing.value == doctest::Approx(-1.0).epsilon(1e-12));

    auto plain = quadrature::integrate_finite([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(plain.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("circ_compose agrees with separable closed forms")
{
    using quadrature::Kernel;
    const Kernel k1 = [](double x, double s) { return std::exp(-x - s); };
    const Kernel k2 = [](double s, double t) { return std::exp(-2.0 * s - t); };
    // int_0^inf e^{-x-s} e^{-2s-t} ds = e^{-x-t} / 3
    const double two = quadrature::circ_compose({k1, k2}, 0.7, 1.3);
    CHECK(two == doctest::Approx(std::exp(-0.7 - 1.3) / 3.0).epsilon(1e-10));

    // three kernels: e^{-x-s1} e^{-2 s1 - s2} e^{-3 s2 - t}
    const Kernel k3 = [](double s, double t) { return std::exp(-3.0 * s - t); };
    const double three = quadrature::circ_compose({k1, k2, k3}, 0.4, 0.9);
    CHECK(three == doctest::Approx(std::exp(-0.4 - 0.9) / 12.0).epsilon(1e-9));
}

TEST_CASE("circ_compose argument validation")
{
    using quadrature::Kernel;
    const Kernel k = [](double, double) { return 1.0; };
    CHECK_THROWS_AS(quadrature::circ_compose({}, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(quadrature::circ_compose({k, k, k, k, k, k}, 1.0, 1.0), DepthExceeded);
    // single kernel is a plain evaluation
    const Kernel g = [](double x, double t) { return x * t; };
    CHECK(quadrature::circ_compose({g}, 2.0, 3.0) == doctest::Approx(6.0));
}

TEST_CASE("mellin_invert recovers e^{-x} from the Gamma multiplier")
{
    auto mult = [](Complex eta) { return specfun::gamma_complex(eta); };
    for (double x : {0.3, 1.0, 2.4}) {
        const double v = quadrature::mellin_invert(mult, x, {1.0, 0.0, 0.0});
        CHECK(v == doctest::Approx(std::exp(-x)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(quadrature::mellin_invert(mult, -1.0, {1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("mellin_invert rejects a non-real inversion")
{
    // A multiplier without conjugate symmetry leaves an imaginary residual.
    auto mult = [](Complex eta) { return specfun::gamma_complex(eta) * Complex(1.0, 0.5); };
    CHECK_THROWS_AS(quadrature::mellin_invert(mult, 1.0, {1.0, 0.0, 0.0}), NonConvergence);
}

TEST_CASE("mellin_invert flags an inadequate truncation")
{
    auto mult = [](Complex eta) { return specfun::gamma_complex(eta); };
    // |y| <= 1 with a fixed step is far too short for x away from 1
    CHECK_THROWS_AS(quadrature::mellin_invert(mult, 0.05, {1.0, 1.0, 0.05}), TruncationError);
}
