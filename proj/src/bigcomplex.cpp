#include "rc/bigcomplex.hpp"

namespace rc {

BigComplex sqrt(const BigComplex& z) {
    mpfr_prec_t p = z.precision();
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return {sqrt(z.re), BigFloat::zero(p)};
        BigFloat r = sqrt(-z.re);
        // Principal branch: sqrt of negative reals has positive imaginary
        // part for +0 imaginary, negative for -0 (signed-zero side select).
        if (mpfr_signbit(z.im.raw())) return {BigFloat::zero(p), -r};
        return {BigFloat::zero(p), r};
    }
    // w = sqrt((|z|+|re|)/2); pick the stable formula per sign of re.
    BigFloat a = abs(z);
    if (z.re.sign() >= 0) {
        BigFloat w = sqrt(ldexp(a + z.re, -1));
        return {w, ldexp(z.im / w, -1)};
    }
    BigFloat w = sqrt(ldexp(a - z.re, -1));
    if (z.im.sign() < 0) w = -w;
    return {ldexp(z.im / w, -1), w};
}

BigComplex exp(const BigComplex& z) {
    mpfr_prec_t p = z.precision();
    BigFloat ex = exp(z.re);
    BigFloat s = BigFloat::zero(p), c = BigFloat::zero(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.im.raw(), MPFR_RNDN);
    return {ex * c, ex * s};
}

BigComplex log(const BigComplex& z) {
    return {log(abs(z)), arg(z)};
}

BigComplex sin(const BigComplex& z) {
    mpfr_prec_t p = z.precision();
    BigFloat s = BigFloat::zero(p), c = BigFloat::zero(p), sh = BigFloat::zero(p), ch = BigFloat::zero(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), MPFR_RNDN);
    return {s * ch, c * sh};
}

BigComplex cos(const BigComplex& z) {
    mpfr_prec_t p = z.precision();
    BigFloat s = BigFloat::zero(p), c = BigFloat::zero(p), sh = BigFloat::zero(p), ch = BigFloat::zero(p);
    mpfr_sin_cos(s.raw(), c.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), MPFR_RNDN);
    return {c * ch, -s * sh};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
    if (w.im.is_zero()) return pow(z, w.re);
    return exp(w * log(z));
}

BigComplex pow(const BigComplex& z, const BigFloat& x) {
    if (z.im.is_zero() && z.re.sign() > 0) return {pow(z.re, x), BigFloat(z.precision())};
    // exact integer exponents keep exactness of the power
    if (mpfr_integer_p(x.raw()) && abs(x) < BigFloat(1e9)) return pow(z, x.to_long());
    return exp(log(z) * x);
}

BigComplex pow(const BigComplex& z, long n) {
    mpfr_prec_t p = z.precision();
    if (n == 0) return BigComplex::one(p);
    unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
    BigComplex base = z, acc(BigFloat::one(p));
    while (k) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    if (n < 0) return BigComplex::one(p) / acc;
    return acc;
}

BigComplex root_near(const BigComplex& z, long n, const BigComplex& near) {
    mpfr_prec_t p = z.precision() > near.precision() ? z.precision() : near.precision();
    // principal root, then rotate through the n candidates
    BigComplex principal = exp(log(z) / BigFloat(double(n)));
    BigFloat two_pi = ldexp(const_pi(p), 1);
    BigComplex best = principal;
    BigFloat best_d = abs(principal - near);
    for (long k = 1; k < n; ++k) {
        BigFloat ang = two_pi * BigFloat(double(k)) / BigFloat(double(n));
        BigFloat s = BigFloat::zero(p), c = BigFloat::zero(p);
        mpfr_sin_cos(s.raw(), c.raw(), ang.raw(), MPFR_RNDN);
        BigComplex cand = principal * BigComplex(c, s);
        BigFloat d = abs(cand - near);
        if (d < best_d) {
            best_d = d;
            best = cand;
        }
    }
    return best;
}

}  // namespace rc
