#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "rc/precision.hpp"

namespace rc {

// Arbitrary-precision real number. Value semantics; each value carries its
// own mpfr precision. Binary operations round to the wider of the two
// operand precisions, so raising the working precision of the inputs raises
// it for a whole computation. Values constructed from literals pick up the
// thread's current working precision.
class BigFloat {
  public:
    BigFloat() { mpfr_init2(v_, current_precision()); mpfr_set_zero(v_, 1); }
    BigFloat(double d) { mpfr_init2(v_, current_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }
    BigFloat(long n) { mpfr_init2(v_, current_precision()); mpfr_set_si(v_, n, MPFR_RNDN); }
    BigFloat(int n) { mpfr_init2(v_, current_precision()); mpfr_set_si(v_, n, MPFR_RNDN); }

    static BigFloat zero(mpfr_prec_t prec) {
        BigFloat r(nullptr_tag{});
        mpfr_init2(r.v_, prec);
        mpfr_set_zero(r.v_, 1);
        return r;
    }
    static BigFloat one(mpfr_prec_t prec) {
        BigFloat r(nullptr_tag{});
        mpfr_init2(r.v_, prec);
        mpfr_set_si(r.v_, 1, MPFR_RNDN);
        return r;
    }

    BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    // Rounds the value to `bits` of precision.
    BigFloat& round_to(mpfr_prec_t bits) {
        mpfr_prec_round(v_, bits, MPFR_RNDN);
        return *this;
    }
    BigFloat at_precision(mpfr_prec_t bits) const {
        BigFloat r = zero(bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);
    // Decimal scientific wire format, round-to-nearest-even, `digits`
    // significant digits.
    std::string to_string(int digits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_inf() const { return mpfr_inf_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend void swap(BigFloat& a, BigFloat& b) noexcept { mpfr_swap(a.v_, b.v_); }

  private:
    struct nullptr_tag {};
    explicit BigFloat(nullptr_tag) {}

    mpfr_t v_;
};

namespace detail {
inline mpfr_prec_t join_prec(const BigFloat& a, const BigFloat& b) {
    return a.precision() > b.precision() ? a.precision() : b.precision();
}
}  // namespace detail

#define RC_BF_BINOP(op, fn)                                              \
    inline BigFloat operator op(const BigFloat& a, const BigFloat& b) {  \
        BigFloat r = BigFloat::zero(detail::join_prec(a, b));            \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                        \
        return r;                                                        \
    }                                                                    \
    inline BigFloat operator op(const BigFloat& a, long b) {             \
        BigFloat r = BigFloat::zero(a.precision());                      \
        fn##_si(r.raw(), a.raw(), b, MPFR_RNDN);                         \
        return r;                                                        \
    }                                                                    \
    inline BigFloat& operator op##=(BigFloat & a, const BigFloat& b) {   \
        fn(a.raw(), a.raw(), b.raw(), MPFR_RNDN);                        \
        return a;                                                        \
    }

RC_BF_BINOP(+, mpfr_add)
RC_BF_BINOP(-, mpfr_sub)
RC_BF_BINOP(*, mpfr_mul)
RC_BF_BINOP(/, mpfr_div)
#undef RC_BF_BINOP

inline BigFloat operator-(const BigFloat& a) {
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat operator+(const BigFloat& a) { return a; }
inline BigFloat operator*(long a, const BigFloat& b) { return b * a; }
inline BigFloat operator*(const BigFloat& a, double b) { return a * BigFloat(b); }
inline BigFloat operator+(const BigFloat& a, double b) { return a + BigFloat(b); }
inline BigFloat operator-(const BigFloat& a, double b) { return a - BigFloat(b); }
inline BigFloat operator/(const BigFloat& a, double b) { return a / BigFloat(b); }
inline BigFloat operator/(long a, const BigFloat& b) {
    BigFloat r = BigFloat::zero(b.precision());
    mpfr_si_div(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat operator-(long a, const BigFloat& b) {
    BigFloat r = BigFloat::zero(b.precision());
    mpfr_si_sub(r.raw(), a, b.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat operator+(long a, const BigFloat& b) { return b + a; }

inline bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
inline bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
inline bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) <= 0; }
inline bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) >= 0; }
inline bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) == 0; }
inline bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.raw(), b.raw()) != 0; }
inline bool operator<(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }
inline bool operator<=(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) <= 0; }
inline bool operator>=(const BigFloat& a, double b) { return mpfr_cmp_d(a.raw(), b) >= 0; }

#define RC_BF_FUN1(name, fn)                              \
    inline BigFloat name(const BigFloat& a) {             \
        BigFloat r = BigFloat::zero(a.precision());       \
        fn(r.raw(), a.raw(), MPFR_RNDN);                  \
        return r;                                         \
    }
RC_BF_FUN1(abs, mpfr_abs)
RC_BF_FUN1(sqrt, mpfr_sqrt)
RC_BF_FUN1(exp, mpfr_exp)
RC_BF_FUN1(log, mpfr_log)
RC_BF_FUN1(log10, mpfr_log10)
RC_BF_FUN1(sin, mpfr_sin)
RC_BF_FUN1(cos, mpfr_cos)
RC_BF_FUN1(tan, mpfr_tan)
RC_BF_FUN1(atan, mpfr_atan)
#undef RC_BF_FUN1

inline BigFloat floor(const BigFloat& a) {
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_floor(r.raw(), a.raw());
    return r;
}
inline BigFloat ceil(const BigFloat& a) {
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_ceil(r.raw(), a.raw());
    return r;
}
inline BigFloat round(const BigFloat& a) {
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_round(r.raw(), a.raw());
    return r;
}

inline BigFloat atan2(const BigFloat& y, const BigFloat& x) {
    BigFloat r = BigFloat::zero(detail::join_prec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r = BigFloat::zero(detail::join_prec(y, x));
    mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat pow(const BigFloat& a, const BigFloat& b) {
    BigFloat r = BigFloat::zero(detail::join_prec(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat pow(const BigFloat& a, long n) {
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
    return r;
}
inline BigFloat ldexp(const BigFloat& a, long e) {
    BigFloat r = BigFloat::zero(a.precision());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
inline BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }
inline BigFloat max(const BigFloat& a, const BigFloat& b) { return a > b ? a : b; }

inline BigFloat const_pi(mpfr_prec_t prec) {
    BigFloat r = BigFloat::zero(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
inline BigFloat pow10(long e, mpfr_prec_t prec) {
    BigFloat r = BigFloat::zero(prec);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
    if (e < 0) mpfr_si_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

}  // namespace rc
