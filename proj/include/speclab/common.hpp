#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace speclab {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Precondition / domain violations (bad indices, poles, out-of-range arguments).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A certified numerical bound could not be met (e.g. truncation tail too large).
class CertificationError : public Error {
public:
    CertificationError(const std::string& what, double achievable)
        : Error(what), achievable_bound(achievable) {}
    double achievable_bound;
};

// Value together with a rigorous absolute error bound.
struct Certified {
    double value = 0.0;
    double bound = 0.0;
};

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

inline bool nearly_equal(double a, double b, double rel, double abs_floor = 0.0) {
    const double diff = std::fabs(a - b);
    return diff <= abs_floor + rel * std::max(std::fabs(a), std::fabs(b));
}

} // namespace speclab
