#include "rc/gamma.hpp"

#include <map>
#include <utility>
#include <vector>

#include "rc/errors.hpp"

namespace rc {

namespace {

bool is_nonpositive_integer(const BigFloat& x) {
    return mpfr_integer_p(x.raw()) && x.sign() <= 0;
}

// Spouge coefficients for parameter a at precision `prec`:
//   Gamma(w+1) = (w+a)^(w+1/2) e^(-(w+a)) (c0 + sum_k c_k/(w+k)),
//   c0 = sqrt(2 pi), c_k = (-1)^(k-1)/(k-1)! (a-k)^(k-1/2) e^(a-k).
// Relative truncation error ~ a^(-1/2) (2 pi)^(-(a+1/2)).
const std::vector<BigFloat>& spouge_coeffs(long a, mpfr_prec_t prec) {
    thread_local std::map<std::pair<long, mpfr_prec_t>, std::vector<BigFloat>> cache;
    auto key = std::make_pair(a, prec);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    WorkingPrecision wp(prec);
    std::vector<BigFloat> c;
    c.reserve(static_cast<size_t>(a));
    BigFloat two_pi = ldexp(const_pi(prec), 1);
    c.push_back(sqrt(two_pi));
    BigFloat fact = BigFloat::zero(prec);
    mpfr_set_si(fact.raw(), 1, MPFR_RNDN);
    for (long k = 1; k < a; ++k) {
        if (k > 1) fact = fact * (k - 1);
        BigFloat amk = BigFloat::zero(prec);
        mpfr_set_si(amk.raw(), a - k, MPFR_RNDN);
        BigFloat term = pow(amk, BigFloat(double(k)) - BigFloat(0.5)) * exp(amk) / fact;
        if (k % 2 == 0) term = -term;
        c.push_back(term);
    }
    auto [pos, inserted] = cache.emplace(key, std::move(c));
    (void)inserted;
    return pos->second;
}

// Spouge sum for Gamma(z) with Re z >= 1/2, at the caller's precision.
BigComplex gamma_spouge(const BigComplex& z, long a, mpfr_prec_t prec) {
    const auto& c = spouge_coeffs(a, prec);
    BigComplex w = z - BigComplex(1L);
    BigComplex s(c[0].at_precision(prec));
    for (long k = 1; k < a; ++k) {
        s += BigComplex(c[static_cast<size_t>(k)]) / (w + BigComplex(long(k)));
    }
    BigComplex wa = w + BigComplex(double(a));
    return pow(wa, w + BigComplex(0.5)) * exp(-wa) * s;
}

}  // namespace

BigFloat gamma(const BigFloat& x, const PrecisionContext& ctx) {
    if (is_nonpositive_integer(x)) throw PoleError("gamma: pole at non-positive integer");
    mpfr_prec_t work = ctx.bits() + 32;
    BigFloat r = BigFloat::zero(work);
    mpfr_gamma(r.raw(), x.at_precision(work).raw(), MPFR_RNDN);
    return r.round_to(ctx.bits());
}

BigComplex gamma(const BigComplex& z, const PrecisionContext& ctx) {
    if (z.im.is_zero()) {
        if (is_nonpositive_integer(z.re)) throw PoleError("gamma: pole at non-positive integer");
        return BigComplex(gamma(z.re, ctx));
    }
    // Spouge parameter for the target precision; the sum itself cancels a few
    // digits, covered by the extra working precision below.
    int digits = ctx.digits + ctx.guard_digits;
    long a = static_cast<long>(digits * 1.2530) + 4;
    mpfr_prec_t work =
        ctx.bits() + static_cast<mpfr_prec_t>(a / 6) + 64;
    WorkingPrecision wp(work);
    BigComplex zz = z.at_precision(work);
    BigComplex result = BigComplex::zero(work);
    if (zz.re >= BigFloat(0.5)) {
        result = gamma_spouge(zz, a, work);
    } else {
        // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1-z))
        BigFloat pi = const_pi(work);
        BigComplex s = sin(BigComplex(pi) * zz);
        if (s.is_zero()) throw PoleError("gamma: pole at non-positive integer");
        result = BigComplex(pi) / (s * gamma_spouge(BigComplex(1L) - zz, a, work));
    }
    return result.at_precision(ctx.bits());
}

}  // namespace rc
