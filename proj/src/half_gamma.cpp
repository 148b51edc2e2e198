#include "speclab/half_gamma.hpp"

#include <cmath>

namespace speclab {

double HalfGamma::to_double() const {
    return rat_.to_double() * std::pow(kPi, 0.5 * pi_);
}

std::string HalfGamma::str() const {
    if (pi_ == 0) return rat_.str();
    std::string p = (pi_ % 2 == 0) ? "pi^" + std::to_string(pi_ / 2)
                                   : "pi^(" + std::to_string(pi_) + "/2)";
    return rat_.str() + "*" + p;
}

HalfGamma gamma_half(int twice_z) {
    if (twice_z % 2 == 0) {
        const int n = twice_z / 2;
        if (n <= 0)
            throw GammaPoleError("gamma pole at z = " + std::to_string(n));
        return factorial_exact(n - 1);
    }
    // Half-integer: walk from Gamma(1/2) = sqrt(pi) by the recursion
    // Gamma(z+1) = z Gamma(z), in either direction.
    Rational r(1);
    int tz = 1; // current argument, times two
    while (tz < twice_z) { r = r * Rational(tz, 2); tz += 2; }
    while (tz > twice_z) { tz -= 2; r = r / Rational(tz, 2); }
    return HalfGamma(r, 1);
}

HalfGamma pow2_exact(int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r = r * Rational(2);
    for (int i = 0; i > n; --i) r = r / Rational(2);
    return HalfGamma(r);
}

HalfGamma factorial_exact(int n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Rational r(1);
    for (int i = 2; i <= n; ++i) r = r * Rational(i);
    return HalfGamma(r);
}

Rational harmonic_number(int n) {
    if (n < 0) throw DomainError("harmonic number of negative index");
    Rational h(0);
    for (int i = 1; i <= n; ++i) h = h + Rational(1, i);
    return h;
}

std::string ExactWithEuler::str() const {
    if (euler_coeff.is_zero()) return base.str();
    return base.str() + " + (" + euler_coeff.str() + ")*euler_gamma";
}

} // namespace speclab
