#pragma once

#include <string>

#include "rc/bigfloat.hpp"

namespace rc {

// Arbitrary-precision complex number on top of BigFloat. All elementary
// functions take principal branches; branch tracking across cuts is done by
// the callers (maps module) that need it.
class BigComplex {
  public:
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(const BigFloat& r) : re(r), im(BigFloat::zero(r.precision())) {}
    BigComplex(const BigFloat& r, const BigFloat& i) : re(r), im(i) {}
    BigComplex(double r, double i = 0.0) : re(r), im(i) {}
    BigComplex(long r) : re(r), im(0L) {}
    BigComplex(int r) : re(long(r)), im(0L) {}

    static BigComplex zero(mpfr_prec_t prec) {
        return BigComplex(BigFloat::zero(prec), BigFloat::zero(prec));
    }
    static BigComplex one(mpfr_prec_t prec) {
        return BigComplex(BigFloat::one(prec), BigFloat::zero(prec));
    }

    mpfr_prec_t precision() const { return detail::join_prec(re, im); }
    BigComplex at_precision(mpfr_prec_t bits) const {
        return BigComplex(re.at_precision(bits), im.at_precision(bits));
    }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_finite() const {
        return !re.is_nan() && !im.is_nan() && !re.is_inf() && !im.is_inf();
    }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
inline BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
inline BigComplex operator*(const BigComplex& a, long s) { return {a.re * s, a.im * s}; }
inline BigComplex operator/(const BigComplex& a, const BigFloat& s) { return {a.re / s, a.im / s}; }
inline BigComplex operator/(const BigComplex& a, long s) { return {a.re / s, a.im / s}; }

inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    // Smith's algorithm keeps intermediate magnitudes balanced.
    if (abs(b.re) >= abs(b.im)) {
        if (b.re.is_zero()) return {a.re / b.re, a.im / b.re};  // 0/0 -> nan
        BigFloat r = b.im / b.re;
        BigFloat d = b.re + b.im * r;
        return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
    }
    BigFloat r = b.re / b.im;
    BigFloat d = b.re * r + b.im;
    return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}
inline BigComplex& operator+=(BigComplex& a, const BigComplex& b) { a = a + b; return a; }
inline BigComplex& operator-=(BigComplex& a, const BigComplex& b) { a = a - b; return a; }
inline BigComplex& operator*=(BigComplex& a, const BigComplex& b) { a = a * b; return a; }
inline BigComplex& operator/=(BigComplex& a, const BigComplex& b) { a = a / b; return a; }
inline bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
}

inline BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
inline BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
inline BigFloat arg(const BigComplex& a) { return atan2(a.im, a.re); }
inline BigFloat norm2(const BigComplex& a) { return a.re * a.re + a.im * a.im; }
inline BigComplex mul_i(const BigComplex& a) { return {-a.im, a.re}; }    // i*a
inline BigComplex div_i(const BigComplex& a) { return {a.im, -a.re}; }    // a/i

BigComplex sqrt(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);
BigComplex pow(const BigComplex& z, const BigFloat& x);
BigComplex pow(const BigComplex& z, long n);

// n-th root of z whose value is closest to `near` among the n candidates.
BigComplex root_near(const BigComplex& z, long n, const BigComplex& near);

}  // namespace rc
