#include "subfrac/errors.hpp"
#include "subfrac/fracpde.hpp"
#include "subfrac/gengamma.hpp"
#include "subfrac/montecarlo.hpp"
#include "subfrac/quadrature.hpp"
#include "subfrac/subordinator.hpp"
#include "subfrac/validation.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using subfrac::IOError;
using subfrac::subordinator::StabilityIndex;

struct Row {
    double x, t, value;
};

// "start:stop:count", optionally log-spaced.
std::vector<double> parse_grid(const std::string& text, bool log_spaced)
{
    double start = 0.0, stop = 0.0;
    long count = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(text);
    if (!(is >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':'
        || count < 1 || !(start > 0.0) || !(stop >= start))
        throw subfrac::DomainError("grid: expected start:stop:count with 0 < start <= stop");
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = start;
        return grid;
    }
    for (long i = 0; i < count; ++i) {
        const double f = static_cast<double>(i) / (count - 1);
        grid[i] = log_spaced ? start * std::pow(stop / start, f)
                             : start + f * (stop - start);
    }
    return grid;
}

// "p/q" keeps the exact reciprocal structure; a decimal routes to the
// general (Mellin-Barnes / Fox H) evaluation paths.
StabilityIndex parse_nu(const std::string& text)
{
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const long num = std::stol(text.substr(0, slash));
        const long den = std::stol(text.substr(slash + 1));
        return StabilityIndex::from_fraction(num, den);
    }
    const double nu = std::stod(text);
    if (!(nu > 0.0) || nu > 1.0)
        throw subfrac::DomainError("nu must lie in (0, 1]");
    return StabilityIndex{nu, std::nullopt};
}

std::string format_value(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_csv(const std::string& params_line, const std::vector<Row>& rows,
              const std::string& path)
{
    for (const auto& r : rows)
        if (!std::isfinite(r.value))
            throw IOError("refusing to write non-finite value at x=" + format_value(r.x)
                          + " t=" + format_value(r.t));
    std::ostringstream os;
    os << "# params: " << params_line << "\n";
    os << "x,t,value\n";
    for (const auto& r : rows)
        os << format_value(r.x) << ',' << format_value(r.t) << ','
           << format_value(r.value) << "\n";
    if (path.empty()) {
        std::cout << os.str();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << os.str()))
        throw IOError("cannot write " + path);
}

subfrac::quadrature::QuadratureSpec quad_from_env()
{
    subfrac::quadrature::QuadratureSpec spec;
    if (const char* tol = std::getenv("SUBFRAC_TOL")) {
        const double v = std::atof(tol);
        if (v > 0.0)
            spec.rel_tol = v;
    }
    return spec;
}

int run_density(const std::string& law, const std::string& nu_text, double gamma,
                double mu, double t, const std::string& grid_text, bool log_x,
                const std::string& out)
{
    const auto quad = quad_from_env();
    const auto grid = parse_grid(grid_text, log_x);
    std::function<double(double)> f;
    std::string params = "command=density;law=" + law + ";t=" + format_value(t);
    if (law == "g" || law == "e") {
        const subfrac::gengamma::ShapeParams p{law == "g" ? gamma : -gamma, mu};
        f = [p, t](double x) { return subfrac::gengamma::g_density(p, x, t); };
        params += ";gamma=" + format_value(gamma) + ";mu=" + format_value(mu);
    } else {
        const auto idx = parse_nu(nu_text);
        params += ";nu=" + nu_text;
        if (law == "h") {
            f = idx.reciprocal
                ? std::function<double(double)>([idx, t, quad](double x) {
                      return subfrac::subordinator::h_density(idx, x, t, quad);
                  })
                : std::function<double(double)>([idx, t](double x) {
                      return subfrac::subordinator::h_density_general(idx.nu, x, t);
                  });
        } else if (law == "l") {
            f = [idx, t, quad](double x) {
                return subfrac::subordinator::l_density(idx, x, t, quad);
            };
        } else if (law == "r") {
            f = [idx](double w) { return subfrac::subordinator::ratio_density_r(idx.nu, w); };
        } else if (law == "k") {
            f = [idx](double x) { return subfrac::subordinator::ratio_density_k(idx.nu, x); };
        } else {
            throw subfrac::DomainError("unknown law '" + law + "' (want g,e,h,l,r,k)");
        }
    }
    std::vector<Row> rows;
    rows.reserve(grid.size());
    for (double x : grid)
        rows.push_back({x, t, f(x)});
    emit_csv(params, rows, out);
    return 0;
}

int run_solve(const std::string& nu_text, double gamma, double mu, double t,
              const std::string& grid_text, bool log_x, const std::string& method,
              const std::string& out)
{
    const auto quad = quad_from_env();
    const auto grid = parse_grid(grid_text, log_x);
    const subfrac::fracpde::SolutionSpec spec{{gamma, mu}, parse_nu(nu_text)};
    std::function<double(double)> f;
    if (method == "composition")
        f = [&](double x) { return subfrac::fracpde::u_composition(spec, x, t, quad); };
    else if (method == "closed")
        f = [&](double x) { return subfrac::fracpde::u_closed(spec, x, t, quad); };
    else if (method == "foxh")
        f = [&](double x) { return subfrac::fracpde::u_foxh(spec, x, t); };
    else
        throw subfrac::DomainError("unknown method '" + method
                                   + "' (want composition, closed, foxh)");
    std::vector<Row> rows;
    rows.reserve(grid.size());
    for (double x : grid)
        rows.push_back({x, t, f(x)});
    emit_csv("command=solve;gamma=" + format_value(gamma) + ";mu=" + format_value(mu)
                 + ";nu=" + nu_text + ";t=" + format_value(t) + ";method=" + method,
             rows, out);
    return 0;
}

int run_transform(const std::string& law, const std::string& var,
                  const std::string& nu_text, double gamma, double mu, double fixed,
                  const std::string& grid_text, double eta_im, const std::string& part,
                  const std::string& out)
{
    const auto grid = parse_grid(grid_text, false);
    std::function<std::complex<double>(std::complex<double>)> m;
    std::string params = "command=transform;law=" + law + ";var=" + var
        + ";fixed=" + format_value(fixed) + ";part=" + part;
    if (law == "g" || law == "e") {
        const subfrac::gengamma::ShapeParams p{law == "g" ? gamma : -gamma, mu};
        params += ";gamma=" + format_value(gamma) + ";mu=" + format_value(mu);
        if (var == "x")
            m = [p, fixed](std::complex<double> eta) {
                return subfrac::gengamma::mellin_g_in_x(p, eta, fixed);
            };
        else
            m = [p, fixed](std::complex<double> eta) {
                return subfrac::gengamma::mellin_g_in_t(p, eta, fixed);
            };
    } else if (law == "h" || law == "l" || law == "u") {
        const auto idx = parse_nu(nu_text);
        params += ";nu=" + nu_text;
        if (law == "h" && var == "x")
            m = [idx, fixed](std::complex<double> eta) {
                return subfrac::subordinator::h_mellin_in_x(idx.nu, eta, fixed);
            };
        else if (law == "h")
            m = [idx, fixed](std::complex<double> eta) {
                return subfrac::subordinator::h_mellin_in_t(idx.nu, eta, fixed);
            };
        else if (law == "l" && var == "x")
            m = [idx, fixed](std::complex<double> eta) {
                return subfrac::subordinator::l_mellin_in_x(idx.nu, eta, fixed);
            };
        else if (law == "u" && var == "x") {
            const subfrac::fracpde::SolutionSpec spec{{gamma, mu}, idx};
            params += ";gamma=" + format_value(gamma) + ";mu=" + format_value(mu);
            m = [spec, fixed](std::complex<double> eta) {
                return subfrac::fracpde::u_mellin(spec, eta, fixed);
            };
        } else {
            throw subfrac::DomainError("transform in t is not available for law '" + law + "'");
        }
    } else {
        throw subfrac::DomainError("unknown law '" + law + "' (want g,e,h,l,u)");
    }
    std::vector<Row> rows;
    rows.reserve(grid.size());
    for (double re : grid) {
        const auto v = m({re, eta_im});
        rows.push_back({re, eta_im, part == "im" ? v.imag() : v.real()});
    }
    emit_csv(params, rows, out);
    return 0;
}

int run_sample(const std::string& law, const std::string& nu_text, double gamma,
               double mu, double t, std::size_t n, std::uint64_t seed,
               const std::string& out)
{
    const auto idx = parse_nu(nu_text);
    subfrac::montecarlo::SampleBatch batch;
    std::string params = "command=sample;law=" + law + ";nu=" + nu_text
        + ";t=" + format_value(t) + ";n=" + std::to_string(n)
        + ";seed=" + std::to_string(seed);
    if (law == "stable")
        batch = subfrac::montecarlo::sample_stable(idx.nu, t, n, seed);
    else if (law == "inverse")
        batch = subfrac::montecarlo::sample_inverse(idx.nu, t, n, seed);
    else if (law == "subordinated") {
        batch = subfrac::montecarlo::sample_subordinated({{gamma, mu}, idx}, t, n, seed);
        params += ";gamma=" + format_value(gamma) + ";mu=" + format_value(mu);
    } else
        throw subfrac::DomainError("unknown law '" + law
                                   + "' (want stable, inverse, subordinated)");
    std::ostringstream os;
    os << "# params: " << params << "\n"
       << "value\n";
    for (double v : batch.values) {
        if (!std::isfinite(v))
            throw IOError("non-finite sample");
        os << format_value(v) << "\n";
    }
    if (out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f || !(f << os.str()))
            throw IOError("cannot write " + out);
    }
    return 0;
}

int run_validate(const std::string& suite, std::uint64_t seed)
{
    std::vector<int> ids;
    if (suite == "all") {
        for (int i = 1; i <= subfrac::validation::kCriterionCount; ++i)
            ids.push_back(i);
    } else {
        const int id = std::atoi(suite.c_str());
        if (id < 1 || id > subfrac::validation::kCriterionCount)
            throw subfrac::DomainError("--suite wants 'all' or a criterion number 1..10");
        ids.push_back(id);
    }
    bool all_ok = true;
    for (int id : ids) {
        const auto r = subfrac::validation::run_criterion(id, seed);
        all_ok = all_ok && r.passed;
        std::printf("[%s] %2d %-48s worst=%-12.4g tol=%-8.2g (%.1fs)\n",
                    r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.worst,
                    r.tolerance, r.seconds);
        if (!r.passed)
            std::printf("       at: %s\n", r.detail.c_str());
    }
    return all_ok ? 0 : 4;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"subfrac: densities of stable subordinators, inverse subordinators,\n"
                 "generalized Gamma convolutions, and time-fractional diffusion fields"};
    app.require_subcommand(1);

    std::string law = "l", nu_text = "1/2", grid_text = "0.1:5:50", method = "composition";
    std::string var = "x", part = "re", suite = "all", out;
    double gamma = 1.0, mu = 1.0, t = 1.0, fixed = 1.0, eta_im = 0.0;
    std::size_t n = 1000;
    std::uint64_t seed = 42;

    auto* density = app.add_subcommand("density", "Tabulate a density to CSV");
    density->add_option("--law", law, "g, e, h, l, r, or k");
    density->add_option("--nu", nu_text, "stability index, e.g. 1/2 or 0.6");
    density->add_option("--gamma", gamma);
    density->add_option("--mu", mu);
    density->add_option("--t", t);
    density->add_option("--x", grid_text, "grid start:stop:count");
    bool log_x = false;
    density->add_flag("--log-x", log_x, "log-spaced x grid");
    density->add_option("-o,--output", out, "output path (default stdout)");

    auto* solve = app.add_subcommand("solve", "Tabulate the fractional-diffusion solution");
    solve->add_option("--nu", nu_text);
    solve->add_option("--gamma", gamma);
    solve->add_option("--mu", mu);
    solve->add_option("--t", t);
    solve->add_option("--x", grid_text);
    bool solve_log_x = false;
    solve->add_flag("--log-x", solve_log_x);
    solve->add_option("--method", method, "composition, closed, or foxh");
    solve->add_option("-o,--output", out);

    auto* transform = app.add_subcommand("transform", "Tabulate a Mellin transform");
    transform->add_option("--law", law, "g, e, h, l, or u");
    transform->add_option("--var", var, "transform variable: x or t");
    transform->add_option("--nu", nu_text);
    transform->add_option("--gamma", gamma);
    transform->add_option("--mu", mu);
    transform->add_option("--fixed", fixed, "value of the non-transformed variable");
    transform->add_option("--eta-re", grid_text, "Re(eta) grid start:stop:count");
    transform->add_option("--eta-im", eta_im);
    transform->add_option("--part", part, "re or im");
    transform->add_option("-o,--output", out);

    auto* validate = app.add_subcommand("validate", "Run the verification suite");
    validate->add_option("--suite", suite, "'all' or a criterion number 1..10");
    validate->add_option("--seed", seed);

    auto* sample = app.add_subcommand("sample", "Draw Monte Carlo batches to CSV");
    sample->add_option("--law", law, "stable, inverse, or subordinated");
    sample->add_option("--nu", nu_text);
    sample->add_option("--gamma", gamma);
    sample->add_option("--mu", mu);
    sample->add_option("--t", t);
    sample->add_option("--n", n);
    sample->add_option("--seed", seed);
    sample->add_option("-o,--output", out);

    try {
        app.parse(argc, argv);
        if (density->parsed())
            return run_density(law, nu_text, gamma, mu, t, grid_text, log_x, out);
        if (solve->parsed())
            return run_solve(nu_text, gamma, mu, t, grid_text, solve_log_x, method, out);
        if (transform->parsed())
            return run_transform(law, var, nu_text, gamma, mu, fixed, grid_text,
                                 eta_im, part, out);
        if (validate->parsed())
            return run_validate(suite, seed);
        if (sample->parsed())
            return run_sample(law, nu_text, gamma, mu, t, n, seed, out);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    } catch (const subfrac::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const subfrac::IOError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const subfrac::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
