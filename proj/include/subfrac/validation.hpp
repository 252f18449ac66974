#ifndef SUBFRAC_VALIDATION_HPP
#define SUBFRAC_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace subfrac::validation {

/// Result of one acceptance criterion: the headline statistic is the
/// worst-case discrepancy observed, compared against the tolerance.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double worst = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    std::string detail; // where the worst case occurred, or the failure message
};

/// Run one criterion (1..10). Exceptions from the library are caught
/// and reported as failures.
CriterionResult run_criterion(int id, std::uint64_t seed = 42);

/// Run all criteria in order.
std::vector<CriterionResult> run_all(std::uint64_t seed = 42);

constexpr int kCriterionCount = 10;

} // namespace subfrac::validation

#endif
