#include "subfrac/errors.hpp"
#include "subfrac/gengamma.hpp"
#include "subfrac/montecarlo.hpp"
#include "subfrac/quadrature.hpp"
#include "subfrac/subordinator.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace subfrac;
using montecarlo::CounterRng;

namespace {

double mean(const std::vector<double>& v)
{
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

} // namespace

TEST_CASE("counter RNG is deterministic and stream-separated")
{
    CounterRng a(123), b(123), c(124), d(123, 1);
    for (int i = 0; i < 100; ++i) {
        const double va = a.uniform();
        CHECK(va == b.uniform());
        CHECK(va > 0.0);
        CHECK(va < 1.0);
    }
    // different seed / different stream diverge immediately
    CounterRng a2(123);
    CHECK(a2.uniform() != c.uniform());
    CounterRng a3(123);
    CHECK(a3.uniform() != d.uniform());
}

TEST_CASE("uniform, exponential and Gamma moments")
{
    CounterRng rng(7);
    const int n = 40000;
    double su = 0.0, se = 0.0, sg = 0.0;
    for (int i = 0; i < n; ++i) {
        su += rng.uniform();
        se += rng.exponential();
        sg += rng.gamma_variate(0.4);
    }
    CHECK(su / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(se / n == doctest::Approx(1.0).epsilon(0.02));
    CHECK(sg / n == doctest::Approx(0.4).epsilon(0.03));
    CHECK_THROWS_AS(rng.gamma_variate(0.0), DomainError);
}

TEST_CASE("stable variates reproduce the Laplace functional")
{
    // E exp(-S) = exp(-1) for the normalized nu-stable law.
    for (double nu : {0.3, 0.5, 0.8}) {
        CounterRng rng(11);
        const int n = 100000;
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            s += std::exp(-montecarlo::stable_variate(nu, rng));
        CHECK(s / n == doctest::Approx(std::exp(-1.0)).epsilon(0.01));
    }
}

TEST_CASE("sampler batches are reproducible and scale correctly")
{
    const auto b1 = montecarlo::sample_stable(0.5, 2.0, 1000, 99);
    const auto b2 = montecarlo::sample_stable(0.5, 2.0, 1000, 99);
    CHECK(b1.values == b2.values);
    CHECK(b1.values.size() == 1000);
    // single draw and empty batch edge cases
    CHECK(montecarlo::sample_stable(0.5, 1.0, 1, 5).values.size() == 1);

    // inverse subordinator mean at nu = 1/2, t = 1 is 2/sqrt(pi)
    const auto inv = montecarlo::sample_inverse(0.5, 1.0, 200000, 42);
    CHECK(mean(inv.values) == doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(0.01));

    // self-similarity: L_t ~ t^nu L_1
    const auto inv4 = montecarlo::sample_inverse(0.5, 4.0, 200000, 42);
    CHECK(mean(inv4.values) == doctest::Approx(2.0 * mean(inv.values)).epsilon(0.01));
}

TEST_CASE("KS statistic: uniform batch and error taxonomy")
{
    CounterRng rng(3);
    montecarlo::SampleBatch batch;
    for (int i = 0; i < 20000; ++i)
        batch.values.push_back(rng.uniform());
    const double ks = montecarlo::ks_statistic(batch, [](double x) {
        return x <= 0.0 ? 0.0 : (x >= 1.0 ? 1.0 : x);
    });
    CHECK(ks < 0.015); // DKW: P(KS > 0.015) < 2 exp(-2 n 0.015^2) ~ 2e-4

    CHECK_THROWS_AS(montecarlo::ks_statistic(batch, [](double x) { return -x; }),
                    NonMonotoneCDF);
    montecarlo::SampleBatch empty;
    CHECK_THROWS_AS(montecarlo::ks_statistic(empty, [](double) { return 0.5; }), DomainError);
}

TEST_CASE("stable batch concords with the closed CDF at nu = 1/2")
{
    // P(S <= x) = erfc(1 / (2 sqrt(x))) for the normalized 1/2-stable law.
    const auto batch = montecarlo::sample_stable(0.5, 1.0, 50000, 17);
    const double ks = montecarlo::ks_statistic(
        batch, [](double x) { return x <= 0.0 ? 0.0 : std::erfc(0.5 / std::sqrt(x)); });
    CHECK(ks < 0.01);
}

TEST_CASE("TabulatedCdf integrates a density into a usable CDF")
{
    const gengamma::ShapeParams p{1.5, 0.7};
    const montecarlo::TabulatedCdf cdf(
        [&](double x) { return gengamma::g_density(p, x, 1.0); }, 1e-6, 50.0);
    // against direct integration at a few quantile points
    for (double x : {0.2, 0.8, 2.0}) {
        const double direct = quadrature::integrate_finite(
                                  [&](double s) { return gengamma::g_density(p, s, 1.0); },
                                  0.0, x)
                                  .value;
        CHECK(cdf(x) == doctest::Approx(direct).epsilon(1e-5));
    }
    CHECK(cdf(1e-9) == doctest::Approx(0.0).scale(1.0).epsilon(1e-6));
    CHECK(cdf(100.0) == doctest::Approx(1.0).epsilon(1e-6));

    // a gengamma batch should concord with it
    CounterRng rng(23);
    montecarlo::SampleBatch batch;
    for (int i = 0; i < 50000; ++i)
        batch.values.push_back(gengamma::sample_gengamma(p, 1.0, rng));
    CHECK(montecarlo::ks_statistic(batch, cdf) < 0.01);
}

TEST_CASE("subordinated samples follow the solution field")
{
    // nu = 1 degenerates to a plain generalized Gamma draw at time t.
    const fracpde::SolutionSpec spec1{{1.0, 1.0},
                                      subordinator::StabilityIndex::from_fraction(1, 1)};
    const auto det = montecarlo::sample_subordinated(spec1, 1.0, 20000, 31);
    const double ks1 = montecarlo::ks_statistic(
        det, [](double x) { return 1.0 - std::exp(-x); });
    CHECK(ks1 < 0.015);

    // nu = 1/2: concordance with the tabulated composition density
    const fracpde::SolutionSpec spec{{1.0, 1.0},
                                     subordinator::StabilityIndex::from_fraction(1, 2)};
    const montecarlo::TabulatedCdf cdf(
        [&](double x) { return fracpde::u_composition(spec, x, 1.0); }, 1e-5, 60.0, 800);
    const auto batch = montecarlo::sample_subordinated(spec, 1.0, 30000, 57);
    CHECK(montecarlo::ks_statistic(batch, cdf) < 0.015);
}
