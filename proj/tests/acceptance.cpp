// Runs the full verification suite and prints one PASS/FAIL line per
// criterion; exits nonzero if any criterion fails.

#include "subfrac/validation.hpp"

#include <cstdio>

int main()
{
    bool ok = true;
    for (int id = 1; id <= subfrac::validation::kCriterionCount; ++id) {
        const auto r = subfrac::validation::run_criterion(id);
        ok = ok && r.passed;
        std::printf("[%s] criterion %2d: %-48s worst=%-12.4g tol=%-8.2g (%.1fs)\n",
                    r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.worst,
                    r.tolerance, r.seconds);
        if (!r.passed)
            std::printf("       at: %s\n", r.detail.c_str());
        std::fflush(stdout);
    }
    return ok ? 0 : 1;
}
