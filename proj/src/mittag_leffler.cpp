#include "mlbalance/mittag_leffler.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

// E_alpha(z) = sum_k z^k / Gamma(alpha k + 1), evaluated by regime.
//
// The difficulty is z < 0: the Taylor series alternates and cancels down from a
// peak term of size exp(X), X = |z|^(1/alpha), to a result of size ~1/|z|.  The
// working precision must absorb exp(X) of cancellation, so the negative axis is
// split on X: quad-precision Taylor while X <= 40 (its 33 digits absorb e^40),
// and the algebraic tail expansion beyond, where it is accurate to ~exp(-X).
// The positive axis never cancels and long double carries it to the overflow
// edge; past that the value is +inf and only ml_scalar_log stays informative.

namespace mlbalance {
namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// sin(pi s) via reduction to the nearest integer, so near-pole values of s
// (alpha k within rounding of an integer) come out proportionally small
// instead of drowning in the error of sin at a huge argument.
long double sin_pi(long double s) {
    long double m = nearbyintl(s);
    long double r = s - m;
    long double v = sinl(kPi * r);
    return fmodl(m, 2.0L) == 0.0L ? v : -v;
}

// Positive axis: all Taylor terms share one sign, long double suffices.
double taylor_positive(double alpha, double z) {
    const long double lz = logl(static_cast<long double>(z));
    long double sum = 1.0L, comp = 0.0L, peak = 1.0L;
    for (int k = 1; k < 200000; ++k) {
        long double t = expl(k * lz - lgammal(static_cast<long double>(alpha) * k + 1.0L));
        long double y = t - comp;
        long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (t > peak)
            peak = t;
        else if (t < 1e-36L * peak)
            break;
    }
    return static_cast<double>(sum);
}

// Negative axis, X <= 40: quad-precision alternating Taylor sum.
double taylor_negative_quad(double alpha, double z) {
    const __float128 lz = logq(-static_cast<__float128>(z));
    __float128 sum = 1.0Q, comp = 0.0Q, peak = 1.0Q;
    const __float128 floor = static_cast<__float128>(1e-40);
    int sign = -1;
    for (int k = 1; k < 100000; ++k) {
        __float128 t = expq(k * lz - lgammaq(static_cast<__float128>(alpha) * k + 1.0Q));
        __float128 y = (sign > 0 ? t : -t) - comp;
        __float128 s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        sign = -sign;
        if (t > peak)
            peak = t;
        else if (t < floor * peak)
            break;
    }
    return static_cast<double>(sum);
}

// Negative axis, X > 40: E_alpha(z) ~ -sum_{k>=1} z^{-k} / Gamma(1 - alpha k).
// Reflection turns 1/Gamma(1 - alpha k) into Gamma(alpha k) sin(pi alpha k)/pi,
// which stays evaluable when alpha k crosses the poles of Gamma(1 - s).
// Truncation follows the sign-free envelope -k ln|z| + lgamma(alpha k): single
// terms dip toward zero whenever alpha k sits near an integer, so the stop rule
// must watch the envelope, not the terms.
double asymptotic_negative(double alpha, double z) {
    const long double lz = logl(-static_cast<long double>(z));
    const long double la = static_cast<long double>(alpha);
    long double sum = 0.0L, comp = 0.0L;
    long double prev_env = std::numeric_limits<long double>::infinity();
    for (int k = 1; k <= 2000; ++k) {
        long double env = -k * lz + lgammal(la * k);
        if (k > 2 && env > prev_env) break;  // optimal truncation point
        prev_env = env;
        long double mag = expl(env);
        long double t = (k % 2 == 1 ? mag : -mag) * sin_pi(la * k) / kPi;
        long double y = t - comp;
        long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (k > 1 && mag < 1e-22L * fabsl(sum)) break;
    }
    return static_cast<double>(sum);
}

void check_domain(double alpha, double z) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("ml_scalar: alpha must lie in (0, 1], got " + std::to_string(alpha));
    if (!std::isfinite(z)) throw std::domain_error("ml_scalar: z must be finite");
}

}  // namespace

double ml_scalar(double alpha, double z) {
    check_domain(alpha, z);
    if (alpha == 1.0) return std::exp(z);
    if (z == 0.0) return 1.0;
    const double x = std::pow(std::fabs(z), 1.0 / alpha);
    if (z > 0.0) {
        if (x > 705.0) return std::numeric_limits<double>::infinity();
        return taylor_positive(alpha, z);
    }
    if (x <= 40.0) return taylor_negative_quad(alpha, z);
    return asymptotic_negative(alpha, z);
}

double ml_scalar_log(double alpha, double z) {
    check_domain(alpha, z);
    if (alpha == 1.0) return z;
    if (z == 0.0) return 0.0;
    if (z < 0.0) return std::log(ml_scalar(alpha, z));
    const double x = std::pow(z, 1.0 / alpha);
    if (x <= 705.0) return std::log(ml_scalar(alpha, z));
    // Dominant exponential branch; the algebraic remainder is O(exp(-x))
    // relative and invisible at double precision for x this large.
    return x - std::log(alpha);
}

double frac_bessel(int nu, double alpha, double z) {
    if (nu < 0) throw std::domain_error("frac_bessel: order must be >= 0");
    if (!(alpha > 0.0) || alpha > 1.0)
        throw std::domain_error("frac_bessel: alpha must lie in (0, 1]");
    if (!(z >= 0.0)) throw std::domain_error("frac_bessel: argument must be >= 0");
    if (z == 0.0) return nu == 0 ? 1.0 : 0.0;
    const long double lhalf = logl(static_cast<long double>(z) / 2.0L);
    const long double la = static_cast<long double>(alpha);
    long double sum = 0.0L, comp = 0.0L;
    for (int k = 0; k < 100000; ++k) {
        const long double s2 = 2.0L * k + nu;
        long double lt = lgammal(s2 + 1.0L) - lgammal(la * s2 + 1.0L) - lgammal(k + 1.0L) -
                         lgammal(static_cast<long double>(k) + nu + 1.0L) + s2 * lhalf;
        long double t = expl(lt);
        long double y = t - comp;
        long double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if (k > 3 && t < 1e-20L * sum) break;
    }
    return static_cast<double>(sum);
}

}  // namespace mlbalance
