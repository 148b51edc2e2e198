#include "speclab/conversions.hpp"

#include <string>

namespace speclab {

namespace {

std::string idx(int d, int s) {
    return "(d=" + std::to_string(d) + ", s=" + std::to_string(s) + ")";
}

void require_nonneg(int d, int s) {
    if (d < 0 || s < 0) throw DomainError("negative expansion index " + idx(d, s));
}

} // namespace

HalfGamma e_from_b(int d, int s, const HalfGamma& b_s) {
    require_nonneg(d, s);
    if (has_cylinder_log(d, s))
        throw DomainError("e_s undetermined by heat coefficients for s-d odd positive " + idx(d, s));
    // e_s = pi^{-1/2} 2^{d-s} Gamma((d-s+1)/2) b_s
    const HalfGamma pref = HalfGamma(Rational(1), -1) * pow2_exact(d - s);
    return pref * gamma_half(d - s + 1) * b_s;
}

HalfGamma f_from_b(int d, int s, const HalfGamma& b_s) {
    require_nonneg(d, s);
    if (!has_cylinder_log(d, s))
        throw DomainError("f_s defined only for s-d odd positive " + idx(d, s));
    // f_s = (-1)^((s-d+1)/2) pi^{-1/2} 2^{d-s+1} / Gamma((s-d+1)/2) b_s
    const HalfGamma pref = sign_pow((s - d + 1) / 2) * HalfGamma(Rational(1), -1) * pow2_exact(d - s + 1);
    return pref / gamma_half(s - d + 1) * b_s;
}

HalfGamma b_from_a(int d, int s, const HalfGamma& a_ss) {
    require_nonneg(d, s);
    return gamma_half(d + s + 2) / factorial_exact(s) * a_ss;
}

HalfGamma c_from_a(int d, int s, const HalfGamma& a_ss) {
    require_nonneg(d, s);
    if (has_cylinder_log(d, s))
        throw DomainError("c_ss undetermined by a_ss for d-s odd negative " + idx(d, s));
    // c_ss = Gamma((d-s+1)/2) Gamma((d+s)/2 + 1) / (2^s Gamma((d+1)/2) Gamma(d/2+1)) a_ss
    return gamma_half(d - s + 1) * gamma_half(d + s + 2) /
           (pow2_exact(s) * gamma_half(d + 1) * gamma_half(d + 2)) * a_ss;
}

HalfGamma d_from_a(int d, int s, const HalfGamma& a_ss) {
    require_nonneg(d, s);
    if (!has_cylinder_log(d, s))
        throw DomainError("d_ss defined only for d-s odd negative " + idx(d, s));
    // d_ss = (-1)^{d+1} / ((s-d-1)! d!) * Gamma((s-d)/2) / Gamma(-(d+s)/2) a_ss
    const HalfGamma pref = sign_pow(d + 1) / (factorial_exact(s - d - 1) * factorial_exact(d));
    return pref * gamma_half(s - d) / gamma_half(-(d + s)) * a_ss;
}

CylinderPair ef_from_cd(int d, int s, const HalfGamma& c_ss, const HalfGamma& d_ss) {
    require_nonneg(d, s);
    const HalfGamma g = factorial_exact(d) / factorial_exact(s);
    CylinderPair out;
    if (!has_cylinder_log(d, s)) {
        if (!d_ss.is_zero())
            throw DomainError("d_ss must vanish for d-s even or positive " + idx(d, s));
        out.e = ExactWithEuler{g * c_ss, HalfGamma(Rational(0))};
        out.f = HalfGamma(Rational(0));
        return out;
    }
    // psi(d+1) = H_d - gamma_E, kept symbolic in the Euler part.
    const HalfGamma hd = HalfGamma(harmonic_number(d));
    out.f = -(g * d_ss);
    out.e = ExactWithEuler{g * c_ss + g * d_ss * hd, -(g * d_ss)};
    return out;
}

double e_from_b(int d, int s, double b_s) {
    return e_from_b(d, s, HalfGamma(Rational(1))).to_double() * b_s;
}

double f_from_b(int d, int s, double b_s) {
    return f_from_b(d, s, HalfGamma(Rational(1))).to_double() * b_s;
}

double b_from_a(int d, int s, double a_ss) {
    return b_from_a(d, s, HalfGamma(Rational(1))).to_double() * a_ss;
}

} // namespace speclab
