#ifndef SUBFRAC_MONTECARLO_HPP
#define SUBFRAC_MONTECARLO_HPP

#include "subfrac/fracpde.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace subfrac::montecarlo {

/// Counter-based generator: value i of stream s under seed k is
/// splitmix64(mix(k, s) + i). Seedable, splittable (one stream per
/// batch/thread), and stateless apart from the counter, so identical
/// seeds always reproduce identical batches.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

    /// Uniform draw in (0, 1).
    double uniform();
    /// Exponential(1) draw.
    double exponential();
    /// Gamma(shape, 1) draw (Marsaglia-Tsang, with the boost for shape < 1).
    double gamma_variate(double shape);

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t next_raw();
    std::uint64_t seed_;
    std::uint64_t state_;
    std::uint64_t counter_ = 0;
};

struct SampleBatch {
    std::vector<double> values;
    std::uint64_t seed = 0;
};

/// i.i.d. draws of the nu-stable subordinator at time t (Laplace
/// functional e^{-t lambda^nu}); Kanter's exact representation plus the
/// self-similar scaling t^{1/nu}.
SampleBatch sample_stable(double nu, double t, std::size_t n, std::uint64_t seed);

/// Draws of the inverse stable subordinator at time t: (t / tau_1)^nu.
SampleBatch sample_inverse(double nu, double t, std::size_t n, std::uint64_t seed);

/// Draws of the time-changed process whose density is the solution
/// field u^{gamma,mu}_nu: a generalized Gamma draw at the random time
/// L_t^{1/gamma} (at nu = 1 the time change is deterministic).
SampleBatch sample_subordinated(const fracpde::SolutionSpec& spec, double t,
                                std::size_t n, std::uint64_t seed);

/// One positive-stable variate with Laplace transform e^{-lambda^nu}.
double stable_variate(double nu, CounterRng& rng);

/// Kolmogorov-Smirnov statistic of a batch against a CDF.
double ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf);

/// CDF table built by integrating a density on a log grid; callable as
/// the reference CDF in KS tests.
class TabulatedCdf {
public:
    TabulatedCdf(const std::function<double(double)>& pdf,
                 double x_lo, double x_hi, int cells = 4000);
    double operator()(double x) const;

private:
    std::vector<double> x_, F_;
};

} // namespace subfrac::montecarlo

#endif
