#pragma once

#include <string>

#include "speclab/rational.hpp"

namespace speclab {

// Exact value of the form  rational * (sqrt(pi))^k.  Closed under
// multiplication and division; addition requires matching pi-powers
// (or a zero operand).  This is the coefficient arithmetic used by the
// heat/cylinder conversion ledger, where every constant is of this shape.
class HalfGamma {
public:
    HalfGamma() = default;
    HalfGamma(Rational r, int sqrt_pi_pow = 0) : rat_(r), pi_(r.is_zero() ? 0 : sqrt_pi_pow) {}
    HalfGamma(std::int64_t n) : rat_(n), pi_(0) {} // NOLINT implicit by design

    const Rational& rational_part() const { return rat_; }
    int sqrt_pi_power() const { return pi_; }
    bool is_zero() const { return rat_.is_zero(); }

    double to_double() const;
    std::string str() const;

    friend HalfGamma operator*(const HalfGamma& a, const HalfGamma& b) {
        return HalfGamma(a.rat_ * b.rat_, a.pi_ + b.pi_);
    }
    friend HalfGamma operator/(const HalfGamma& a, const HalfGamma& b) {
        if (b.is_zero()) throw DomainError("division by exact zero");
        return HalfGamma(a.rat_ / b.rat_, a.pi_ - b.pi_);
    }
    friend HalfGamma operator-(const HalfGamma& a) { return HalfGamma(-a.rat_, a.pi_); }
    friend HalfGamma operator+(const HalfGamma& a, const HalfGamma& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi_ != b.pi_)
            throw DomainError("cannot add exact values with different sqrt(pi) powers");
        return HalfGamma(a.rat_ + b.rat_, a.pi_);
    }
    friend HalfGamma operator-(const HalfGamma& a, const HalfGamma& b) { return a + (-b); }
    friend bool operator==(const HalfGamma& a, const HalfGamma& b) {
        return a.rat_ == b.rat_ && (a.is_zero() || a.pi_ == b.pi_);
    }
    friend bool operator!=(const HalfGamma& a, const HalfGamma& b) { return !(a == b); }

private:
    Rational rat_ = 0;
    int pi_ = 0; // value = rat_ * pi^(pi_/2)
};

// Thrown by gamma_half at nonpositive integer arguments.  Callers use it to
// detect the branch transitions of the conversion ledger.
class GammaPoleError : public DomainError {
public:
    explicit GammaPoleError(const std::string& what) : DomainError(what) {}
};

// Gamma(z) for half-integer z, passed as twice_z = 2z.  Exact.
HalfGamma gamma_half(int twice_z);

// 2^n as an exact value (n may be negative).
HalfGamma pow2_exact(int n);

// (-1)^n as an exact value.
inline HalfGamma sign_pow(int n) { return HalfGamma(Rational((n % 2 == 0) ? 1 : -1)); }

// Factorial as an exact value; n >= 0.
HalfGamma factorial_exact(int n);

// Harmonic number H_n = 1 + 1/2 + ... + 1/n (H_0 = 0), exact.
Rational harmonic_number(int n);

// Exact value of the form  base + euler_coeff * gamma_E  with gamma_E Euler's
// constant kept symbolic until to_double().  Appears in the cylinder ledger
// through psi(d+1) = H_d - gamma_E.
struct ExactWithEuler {
    HalfGamma base;
    HalfGamma euler_coeff;

    double to_double() const { return base.to_double() + euler_coeff.to_double() * kEulerGamma; }
    bool operator==(const ExactWithEuler& o) const {
        return base == o.base && euler_coeff == o.euler_coeff;
    }
    std::string str() const;
};

} // namespace speclab
