#include "subfrac/montecarlo.hpp"
#include "subfrac/errors.hpp"
#include "subfrac/gengamma.hpp"
#include "subfrac/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace subfrac::montecarlo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), state_(splitmix64(seed + kGolden * (stream + 1)))
{
}

std::uint64_t CounterRng::next_raw()
{
    return splitmix64(state_ + kGolden * ++counter_);
}

double CounterRng::uniform()
{
    return (static_cast<double>(next_raw() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::exponential()
{
    return -std::log(uniform());
}

double CounterRng::gamma_variate(double shape)
{
    if (!(shape > 0.0))
        throw DomainError("gamma_variate: requires shape > 0");
    if (shape < 1.0)
        return gamma_variate(shape + 1.0) * std::pow(uniform(), 1.0 / shape);
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / (3.0 * std::sqrt(d));
    for (;;) {
        const double z = std::sqrt(-2.0 * std::log(uniform()))
            * std::cos(2.0 * kPi * uniform());
        const double w = 1.0 + c * z;
        if (w <= 0.0)
            continue;
        const double v = w * w * w;
        const double u = uniform();
        if (std::log(u) < 0.5 * z * z + d - d * v + d * std::log(v))
            return d * v;
    }
}

double stable_variate(double nu, CounterRng& rng)
{
    if (!(nu > 0.0) || !(nu < 1.0))
        throw DomainError("stable_variate: requires nu in (0, 1)");
    const double u = rng.uniform();
    const double e = rng.exponential();
    // Kanter's representation of the unit positive-stable law.
    const double log_s = std::log(std::sin(nu * kPi * u))
        - std::log(std::sin(kPi * u)) / nu
        + (1.0 - nu) / nu * (std::log(std::sin((1.0 - nu) * kPi * u)) - std::log(e));
    return std::exp(log_s);
}

SampleBatch sample_stable(double nu, double t, std::size_t n, std::uint64_t seed)
{
    if (!(t > 0.0))
        throw DomainError("sample_stable: requires t > 0");
    CounterRng rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.values.reserve(n);
    const double scale = std::pow(t, 1.0 / nu);
    for (std::size_t i = 0; i < n; ++i)
        batch.values.push_back(scale * stable_variate(nu, rng));
    return batch;
}

SampleBatch sample_inverse(double nu, double t, std::size_t n, std::uint64_t seed)
{
    if (!(t > 0.0))
        throw DomainError("sample_inverse: requires t > 0");
    CounterRng rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        batch.values.push_back(std::pow(t / stable_variate(nu, rng), nu));
    return batch;
}

SampleBatch sample_subordinated(const fracpde::SolutionSpec& spec, double t,
                                std::size_t n, std::uint64_t seed)
{
    if (!(t > 0.0))
        throw DomainError("sample_subordinated: requires t > 0");
    const double nu = spec.idx.nu;
    if (!(nu > 0.0) || nu > 1.0)
        throw DomainError("sample_subordinated: requires nu in (0, 1]");
    CounterRng rng(seed);
    SampleBatch batch;
    batch.seed = seed;
    batch.values.reserve(n);
    const double invg = 1.0 / spec.shape.gamma;
    for (std::size_t i = 0; i < n; ++i) {
        const double s = nu == 1.0 ? t : std::pow(t / stable_variate(nu, rng), nu);
        batch.values.push_back(gengamma::sample_gengamma(spec.shape, std::pow(s, invg), rng));
    }
    return batch;
}

double ks_statistic(const SampleBatch& batch, const std::function<double(double)>& cdf)
{
    if (batch.values.empty())
        throw DomainError("ks_statistic: empty batch");
    std::vector<double> sorted = batch.values;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    double prev_f = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        if (f < prev_f - 1e-12 || f < -1e-12 || f > 1.0 + 1e-9)
            throw NonMonotoneCDF("ks_statistic: reference CDF is not a valid CDF");
        prev_f = f;
        d = std::max(d, std::max(f - static_cast<double>(i) / n,
                                 static_cast<double>(i + 1) / n - f));
    }
    return d;
}

TabulatedCdf::TabulatedCdf(const std::function<double(double)>& pdf,
                           double x_lo, double x_hi, int cells)
{
    if (!(x_lo > 0.0) || !(x_hi > x_lo) || cells < 2)
        throw DomainError("TabulatedCdf: requires 0 < x_lo < x_hi, cells >= 2");
    quadrature::QuadratureSpec spec;
    spec.abs_tol = 1e-12;
    spec.rel_tol = 1e-8;
    x_.resize(cells + 1);
    F_.resize(cells + 1);
    const double ratio = std::log(x_hi / x_lo) / cells;
    for (int i = 0; i <= cells; ++i)
        x_[i] = x_lo * std::exp(ratio * i);
    // Mass below the table keeps the tail truncation honest.
    F_[0] = quadrature::integrate_finite(pdf, 0.0, x_lo, spec).value;
    for (int i = 1; i <= cells; ++i)
        F_[i] = F_[i - 1] + quadrature::integrate_finite(pdf, x_[i - 1], x_[i], spec).value;
}

double TabulatedCdf::operator()(double x) const
{
    if (x <= x_.front())
        return x <= 0.0 ? 0.0 : F_.front() * x / x_.front();
    if (x >= x_.back())
        return std::min(1.0, F_.back());
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - x_.begin());
    const double w = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
    return std::min(1.0, F_[i - 1] + w * (F_[i] - F_[i - 1]));
}

} // namespace subfrac::montecarlo
