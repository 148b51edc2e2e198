#pragma once

#include "speclab/half_gamma.hpp"

namespace speclab {

// Exact conversions among the asymptotic-expansion coefficient families:
//
//   b_s   : heat trace,        K(t) ~ sum b_s t^((s-d)/2)
//   e_s   : cylinder trace,    T(t) ~ sum e_s t^(s-d) + sum f_s t^(s-d) ln t
//   f_s   : cylinder log terms (present only for s-d odd and positive)
//   a_ss  : lambda-Riesz means, leading diagonal coefficients
//   c_ss  : omega-Riesz means
//   d_ss  : omega-Riesz log coefficients
//
// All maps are evaluated in exact (rational, sqrt(pi)-power) arithmetic.
// Index-parity preconditions are enforced; calling a map outside its branch
// throws DomainError with an "undetermined" message where the coefficient is
// genuinely not fixed by the input family.

// Heat -> cylinder, power branch: requires s-d even or negative.
HalfGamma e_from_b(int d, int s, const HalfGamma& b_s);

// Heat -> cylinder, log branch: requires s-d odd and positive.
HalfGamma f_from_b(int d, int s, const HalfGamma& b_s);

// lambda-Riesz -> heat: b_s = Gamma((d+s)/2 + 1)/Gamma(s+1) * a_ss.
HalfGamma b_from_a(int d, int s, const HalfGamma& a_ss);

// lambda-Riesz -> omega-Riesz, power branch: requires d-s even or positive.
HalfGamma c_from_a(int d, int s, const HalfGamma& a_ss);

// lambda-Riesz -> omega-Riesz, log branch: requires d-s odd and negative.
HalfGamma d_from_a(int d, int s, const HalfGamma& a_ss);

// omega-Riesz -> cylinder.  On the d-s even-or-positive branch only e_s is
// produced (f_s = 0, d_ss must be absent).  On the d-s odd-and-negative
// branch both appear, with e_s carrying psi(d+1) = H_d - gamma_E symbolically.
struct CylinderPair {
    ExactWithEuler e;
    HalfGamma f;
};
CylinderPair ef_from_cd(int d, int s, const HalfGamma& c_ss, const HalfGamma& d_ss);

// Convenience double-precision wrappers used by the fitting pipelines.
double e_from_b(int d, int s, double b_s);
double f_from_b(int d, int s, double b_s);
double b_from_a(int d, int s, double a_ss);

// Branch predicates, shared by fit models and conversion checks.
inline bool has_cylinder_log(int d, int s) { return s - d > 0 && (s - d) % 2 != 0; }

} // namespace speclab
