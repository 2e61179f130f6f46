#pragma once

namespace mlbalance {

// E_a(z) = sum_{k>=0} z^k / Gamma(a*k + 1) for a in (0, 1], real z.
//
// Relative accuracy is 1e-10 or better for |z| <= 50, a >= 0.2 (and degrades
// gracefully outside). Values beyond double range return +infinity; use
// ml_scalar_log in that regime. Throws std::domain_error for a outside (0,1]
// or non-finite z.
double ml_scalar(double alpha, double z);

// log E_a(z). Finite even where E_a(z) overflows a double: for large positive
// z it evaluates X - log(a) + log1p(correction), X = z^(1/a).
double ml_scalar_log(double alpha, double z);

// B_{nu,a}(z) = sum_k (2k+nu)! / (Gamma(a(2k+nu)+1) k! (k+nu)!) (z/2)^(2k+nu).
// At a = 1 this is the modified Bessel function I_nu(z). nu >= 0.
double frac_bessel(int nu, double alpha, double z);

}  // namespace mlbalance
