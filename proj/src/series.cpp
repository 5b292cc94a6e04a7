#include "rc/series.hpp"

#include <algorithm>

namespace rc {

bool TruncatedSeries::is_real() const {
    for (const auto& c : c_)
        if (!c.im.is_zero()) return false;
    return true;
}

mpfr_prec_t TruncatedSeries::precision() const {
    mpfr_prec_t p = MPFR_PREC_MIN;
    for (const auto& c : c_) p = std::max(p, c.precision());
    return p;
}

TruncatedSeries TruncatedSeries::at_precision(mpfr_prec_t bits) const {
    std::vector<BigComplex> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.at_precision(bits));
    return TruncatedSeries(std::move(out), label_);
}

namespace {
void require_nonempty(const TruncatedSeries& s, const char* who) {
    if (s.empty()) throw EmptySeries(std::string(who) + ": empty series");
}
}  // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_nonempty(a, "add");
    require_nonempty(b, "add");
    int n = std::min(a.order(), b.order());
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) c.push_back(a[k] + b[k]);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_nonempty(a, "sub");
    require_nonempty(b, "sub");
    int n = std::min(a.order(), b.order());
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) c.push_back(a[k] - b[k]);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, int n_out) {
    require_nonempty(a, "mul");
    require_nonempty(b, "mul");
    if (n_out < 0) n_out = std::min(a.order(), b.order());
    mpfr_prec_t prec = std::max(a.precision(), b.precision());
    bool real = a.is_real() && b.is_real();
    int na = a.order(), nb = b.order();

    std::vector<BigComplex> out;
    out.reserve(static_cast<size_t>(n_out));
    BigFloat t = BigFloat::zero(prec);
    for (int k = 0; k < n_out; ++k) {
        BigFloat acc_re = BigFloat::zero(prec), acc_im = BigFloat::zero(prec);
        int ilo = std::max(0, k - nb + 1), ihi = std::min(k, na - 1);
        for (int i = ilo; i <= ihi; ++i) {
            const BigComplex& x = a[i];
            const BigComplex& y = b[k - i];
            mpfr_fma(acc_re.raw(), x.re.raw(), y.re.raw(), acc_re.raw(), MPFR_RNDN);
            if (!real) {
                mpfr_mul(t.raw(), x.im.raw(), y.im.raw(), MPFR_RNDN);
                mpfr_sub(acc_re.raw(), acc_re.raw(), t.raw(), MPFR_RNDN);
                mpfr_fma(acc_im.raw(), x.re.raw(), y.im.raw(), acc_im.raw(), MPFR_RNDN);
                mpfr_fma(acc_im.raw(), x.im.raw(), y.re.raw(), acc_im.raw(), MPFR_RNDN);
            }
        }
        out.emplace_back(std::move(acc_re), std::move(acc_im));
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries scale(const TruncatedSeries& a, const BigComplex& s) {
    require_nonempty(a, "scale");
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(a.order()));
    for (int k = 0; k < a.order(); ++k) c.push_back(a[k] * s);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
    require_nonempty(a, "differentiate");
    if (a.order() == 1) return constant_series(BigComplex::zero(a.precision()), 1);
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(a.order() - 1));
    for (int k = 1; k < a.order(); ++k) c.push_back(a[k] * long(k));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& a) {
    require_nonempty(a, "integrate");
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(a.order() + 1));
    c.push_back(BigComplex::zero(a.precision()));
    for (int k = 0; k < a.order(); ++k) c.push_back(a[k] / long(k + 1));
    return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate(const TruncatedSeries& a, int m) {
    require_nonempty(a, "truncate");
    if (m < 1) throw RangeError("truncate: order must be >= 1");
    if (m >= a.order()) return a;
    std::vector<BigComplex> c(a.coeffs().begin(), a.coeffs().begin() + m);
    return TruncatedSeries(std::move(c), a.label());
}

TruncatedSeries pad_to(const TruncatedSeries& a, int order) {
    if (a.order() >= order) return a;
    std::vector<BigComplex> c = a.coeffs();
    c.resize(static_cast<size_t>(order), BigComplex::zero(a.precision()));
    return TruncatedSeries(std::move(c), a.label());
}

TruncatedSeries identity_series(int order, mpfr_prec_t prec) {
    std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(prec));
    if (order > 1) c[1] = BigComplex::one(prec);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries constant_series(const BigComplex& v, int order) {
    std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(v.precision()));
    c[0] = v;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_nonempty(outer, "compose");
    require_nonempty(inner, "compose");
    if (!inner[0].is_zero())
        throw NonzeroConstantTerm("compose: inner series must vanish at the origin");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries in_t = truncate(inner, n);
    // Horner on the outer coefficients
    TruncatedSeries r = pad_to(constant_series(outer[outer.order() - 1], 1), n);
    for (int k = outer.order() - 2; k >= 0; --k) {
        r = mul(r, in_t, n);
        r[0] += outer[k];
    }
    return r;
}

TruncatedSeries div_series(const TruncatedSeries& a, const TruncatedSeries& b, int n_out) {
    require_nonempty(a, "div_series");
    require_nonempty(b, "div_series");
    if (b[0].is_zero()) throw DomainError("div_series: division by series with zero constant term");
    if (n_out < 0) n_out = std::min(a.order(), b.order());
    std::vector<BigComplex> q;
    q.reserve(static_cast<size_t>(n_out));
    for (int k = 0; k < n_out; ++k) {
        BigComplex s = k < a.order() ? a[k] : BigComplex::zero(a.precision());
        int jhi = std::min(k, b.order() - 1);
        for (int j = 1; j <= jhi; ++j) s -= b[j] * q[static_cast<size_t>(k - j)];
        q.push_back(s / b[0]);
    }
    return TruncatedSeries(std::move(q));
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    require_nonempty(a, "log_series");
    if (a[0].is_zero()) throw DomainError("log_series: constant term must be nonzero");
    // (log a)' = a'/a, integrate back; constant term = principal log(a0).
    int n = a.order();
    if (n == 1) return constant_series(log(a[0]), 1);
    TruncatedSeries d = div_series(differentiate(a), truncate(a, n - 1));
    TruncatedSeries r = integrate(d);  // order n, zero constant
    r = truncate(r, n);
    r[0] = log(a[0]);
    return r;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    require_nonempty(a, "exp_series");
    if (!a[0].is_zero()) throw DomainError("exp_series: constant term must be zero");
    // e' = a' e, coefficient recurrence
    int n = a.order();
    mpfr_prec_t prec = a.precision();
    std::vector<BigComplex> e;
    e.reserve(static_cast<size_t>(n));
    e.push_back(BigComplex::one(prec));
    for (int k = 1; k < n; ++k) {
        // k e_k = sum_{j=1}^{k} j a_j e_{k-j}
        BigComplex s = BigComplex::zero(prec);
        for (int j = 1; j <= k; ++j) s += a[j] * long(j) * e[static_cast<size_t>(k - j)];
        e.push_back(s / long(k));
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries pow_series(const TruncatedSeries& a, const BigComplex& alpha) {
    require_nonempty(a, "pow_series");
    TruncatedSeries l = log_series(a);
    if (!l[0].is_zero()) {
        BigComplex c0 = exp(l[0] * alpha);
        l[0] = BigComplex::zero(l.precision());
        return scale(exp_series(scale(l, alpha)), c0);
    }
    return exp_series(scale(l, alpha));
}

TruncatedSeries revert(const TruncatedSeries& s) {
    require_nonempty(s, "revert");
    if (s.order() < 2 || !s[0].is_zero())
        throw NotInvertibleAtOrigin("revert: series must vanish at the origin");
    if (s[1].is_zero())
        throw NotInvertibleAtOrigin("revert: series must have nonzero linear term");
    int n = s.order();
    mpfr_prec_t prec = s.precision();

    std::vector<BigComplex> t0(2, BigComplex::zero(prec));
    t0[1] = BigComplex::one(prec) / s[1];
    TruncatedSeries t(std::move(t0));
    if (n == 2) return t;

    TruncatedSeries sp = differentiate(s);  // order n-1
    int m = 2;
    while (m < n) {
        m = std::min(2 * m, n);
        TruncatedSeries tm = pad_to(t, m);
        TruncatedSeries num = sub(compose(truncate(s, m), tm), identity_series(m, prec));
        TruncatedSeries den = compose(pad_to(truncate(sp, std::max(1, m - 1)), m), tm);
        t = sub(tm, div_series(num, den, m));
    }
    return t;
}

BigComplex evaluate(const TruncatedSeries& s, const BigComplex& z) {
    if (s.empty()) throw EmptySeries("evaluate: empty series");
    mpfr_prec_t prec = std::max(s.precision(), z.precision());
    BigComplex acc = s[s.order() - 1].at_precision(prec);
    for (int k = s.order() - 2; k >= 0; --k) acc = acc * z + s[k];
    return acc;
}

}  // namespace rc
