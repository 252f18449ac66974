#ifndef SUBFRAC_ERRORS_HPP
#define SUBFRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subfrac {

// Base class for all numerical failures raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define SUBFRAC_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

SUBFRAC_DEFINE_ERROR(DomainError);
SUBFRAC_DEFINE_ERROR(PoleError);
SUBFRAC_DEFINE_ERROR(OverflowError);
SUBFRAC_DEFINE_ERROR(StripViolation);
SUBFRAC_DEFINE_ERROR(EmptyStrip);
SUBFRAC_DEFINE_ERROR(NonConvergence);
SUBFRAC_DEFINE_ERROR(TruncationError);
SUBFRAC_DEFINE_ERROR(DepthExceeded);
SUBFRAC_DEFINE_ERROR(NaNDetected);
SUBFRAC_DEFINE_ERROR(DegenerateCase);
SUBFRAC_DEFINE_ERROR(GridTooCoarse);
SUBFRAC_DEFINE_ERROR(NonMonotoneCDF);
SUBFRAC_DEFINE_ERROR(IOError);

#undef SUBFRAC_DEFINE_ERROR

} // namespace subfrac

#endif
