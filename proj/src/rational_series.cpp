#include "rc/rational_series.hpp"

#include <algorithm>

#include "rc/errors.hpp"

namespace rc {

RatSeries rat_mul(const RatSeries& a, const RatSeries& b, int n_out) {
    RatSeries out(static_cast<size_t>(n_out), mpq_class(0));
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    for (int i = 0; i < std::min(na, n_out); ++i) {
        if (a[static_cast<size_t>(i)] == 0) continue;
        int jhi = std::min(nb - 1, n_out - 1 - i);
        for (int j = 0; j <= jhi; ++j)
            out[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return out;
}

RatSeries rat_div(const RatSeries& a, const RatSeries& b, int n_out) {
    if (b.empty() || b[0] == 0) throw DomainError("rat_div: zero constant term");
    RatSeries q(static_cast<size_t>(n_out), mpq_class(0));
    for (int k = 0; k < n_out; ++k) {
        mpq_class s = k < static_cast<int>(a.size()) ? a[static_cast<size_t>(k)] : mpq_class(0);
        int jhi = std::min(k, static_cast<int>(b.size()) - 1);
        for (int j = 1; j <= jhi; ++j) s -= b[static_cast<size_t>(j)] * q[static_cast<size_t>(k - j)];
        q[static_cast<size_t>(k)] = s / b[0];
    }
    return q;
}

RatSeries rat_compose(const RatSeries& outer, const RatSeries& inner, int n_out) {
    if (inner.empty() || inner[0] != 0)
        throw NonzeroConstantTerm("rat_compose: inner constant term must vanish");
    RatSeries r(1, mpq_class(0));
    r[0] = outer.empty() ? mpq_class(0) : outer.back();
    r.resize(static_cast<size_t>(n_out), mpq_class(0));
    for (int k = static_cast<int>(outer.size()) - 2; k >= 0; --k) {
        r = rat_mul(r, inner, n_out);
        r[0] += outer[static_cast<size_t>(k)];
    }
    return r;
}

BigFloat to_bigfloat(const mpq_class& q, mpfr_prec_t prec) {
    BigFloat r = BigFloat::zero(prec);
    mpfr_set_q(r.raw(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

TruncatedSeries to_series(const RatSeries& a, mpfr_prec_t prec) {
    std::vector<BigComplex> c;
    c.reserve(a.size());
    for (const auto& q : a) c.emplace_back(to_bigfloat(q, prec));
    return TruncatedSeries(std::move(c));
}

}  // namespace rc
