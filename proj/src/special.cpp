#include "rc/special.hpp"

#include <algorithm>
#include <cmath>

#include "rc/errors.hpp"

namespace rc::special {

namespace {

// Optimal AGM: at every step pick the square root with Re(b/a) >= 0
// (ties broken toward Im(b/a) > 0). Yields the principal K branch.
BigComplex agm(BigComplex a, BigComplex b, mpfr_prec_t prec) {
    BigFloat eps = ldexp(BigFloat::one(prec), -(prec - 6));
    for (int it = 0; it < 4 * 64 + static_cast<int>(prec); ++it) {
        BigComplex a1 = (a + b) / 2L;
        BigComplex b1 = sqrt(a * b);
        BigComplex q = b1 / a1;
        if (q.re.sign() < 0 || (q.re.is_zero() && q.im.sign() < 0)) b1 = -b1;
        a = a1;
        b = b1;
        if (abs(a - b) <= eps * abs(a)) return (a + b) / 2L;
    }
    throw Error("agm: no convergence");
}

void check_k_cut(const BigComplex& m) {
    if (m.im.is_zero() && m.re >= BigFloat(1.0)) {
        if (!mpfr_signbit(m.im.raw()))
            throw BranchCutError(
                "elliptic_k: m on the cut [1,inf); perturb or pass a signed-zero "
                "imaginary part to select a side");
    }
}

}  // namespace

BigComplex elliptic_k(const BigComplex& m, const PrecisionContext& ctx) {
    check_k_cut(m);
    mpfr_prec_t work = ctx.bits() + 32;
    WorkingPrecision wp(work);
    BigComplex mm = m.at_precision(work);
    BigComplex one(BigFloat::one(work));
    BigComplex b = sqrt(one - mm);
    if (b.is_zero()) throw BranchCutError("elliptic_k: divergent at m = 1");
    BigComplex g = agm(one, b, work);
    BigFloat pi = const_pi(work);
    return (BigComplex(pi) / (g * 2L)).at_precision(ctx.bits());
}

BigComplex nome(const BigComplex& m, const PrecisionContext& ctx) {
    if (m.is_zero()) return BigComplex::zero(ctx.bits());
    if (m.im.is_zero() && m.re.sign() <= 0)
        throw DomainError("nome: m on (-inf,0] is outside the principal domain");
    mpfr_prec_t work = ctx.bits() + 32;
    WorkingPrecision wp(work);
    PrecisionContext wctx{ctx.digits + 10, ctx.guard_digits};
    BigComplex mm = m.at_precision(work);
    BigComplex k = elliptic_k(mm, wctx);
    BigComplex kp = elliptic_k(BigComplex(1L) - mm, wctx);
    BigFloat pi = const_pi(work);
    return exp(BigComplex(-pi) * kp / k).at_precision(ctx.bits());
}

BigComplex theta3(const BigComplex& q, const PrecisionContext& ctx) {
    if (abs(q) >= BigFloat(1.0)) throw DomainError("theta3: |q| must be < 1");
    mpfr_prec_t work = ctx.bits() + 32;
    WorkingPrecision wp(work);
    BigComplex qq = q.at_precision(work);
    BigFloat tol = pow10(-(ctx.digits + ctx.guard_digits + 5), work);
    BigComplex sum(BigFloat::one(work));
    BigComplex p(BigFloat::zero(work));      // q^{k^2}
    BigComplex q2 = qq * qq;
    BigComplex r = qq;                 // q^{2k-1}
    p = qq;                            // k = 1
    for (long k = 1; k < 100000; ++k) {
        sum += p * 2L;
        if (abs(p) < tol) break;
        r *= q2;                       // q^{2k+1}
        p *= r;                        // q^{(k+1)^2}
    }
    return sum.at_precision(ctx.bits());
}

BigComplex theta2(const BigComplex& q, const PrecisionContext& ctx) {
    if (abs(q) >= BigFloat(1.0)) throw DomainError("theta2: |q| must be < 1");
    if (q.is_zero()) return BigComplex::zero(ctx.bits());
    mpfr_prec_t work = ctx.bits() + 32;
    WorkingPrecision wp(work);
    BigComplex qq = q.at_precision(work);
    BigFloat tol = pow10(-(ctx.digits + ctx.guard_digits + 5), work);
    // 2 q^{1/4} sum_k q^{k(k+1)}
    BigComplex sum(BigFloat::one(work));
    BigComplex p(BigFloat::one(work));  // q^{k(k+1)}
    BigComplex q2 = qq * qq;
    BigComplex r = BigComplex::one(work);  // q^{2k}
    for (long k = 1; k < 100000; ++k) {
        r *= q2;
        p *= r;  // q^{k(k+1)} = q^{(k-1)k} * q^{2k}
        sum += p;
        if (abs(p) < tol) break;
    }
    BigComplex root = exp(log(qq) * BigFloat(0.25));
    return (root * sum * 2L).at_precision(ctx.bits());
}

BigComplex inverse_nome(const BigComplex& q, const PrecisionContext& ctx) {
    if (abs(q) >= BigFloat(1.0)) throw DomainError("inverse_nome: |q| must be < 1");
    if (q.is_zero()) return BigComplex::zero(ctx.bits());
    mpfr_prec_t work = ctx.bits() + 32;
    WorkingPrecision wp(work);
    PrecisionContext wctx{ctx.digits + 10, ctx.guard_digits};
    BigComplex qq = q.at_precision(work);
    // theta2^4/theta3^4 with the q^{1/4} prefactor entering as exactly q.
    BigComplex s2(BigFloat::one(work)), s3(BigFloat::one(work));
    {
        BigFloat tol = pow10(-(wctx.digits + wctx.guard_digits + 5), work);
        BigComplex q2 = qq * qq;
        BigComplex p = qq, r = qq;  // q^{k^2}, q^{2k-1}
        for (long k = 1; k < 100000; ++k) {
            s3 += p * 2L;
            if (abs(p) < tol) break;
            r *= q2;
            p *= r;
        }
        BigComplex pk(BigFloat::one(work)), rk(BigFloat::one(work));
        for (long k = 1; k < 100000; ++k) {
            rk *= q2;
            pk *= rk;
            s2 += pk;
            if (abs(pk) < tol) break;
        }
    }
    BigComplex num = s2 * s2;
    num *= num;
    BigComplex den = s3 * s3;
    den *= den;
    return (qq * 16L * num / den).at_precision(ctx.bits());
}

TruncatedSeries elliptic_k_series(int order, mpfr_prec_t prec) {
    WorkingPrecision wp(prec);
    std::vector<BigComplex> c;
    c.reserve(static_cast<size_t>(order));
    BigFloat pi = const_pi(prec);
    BigFloat term = pi / 2L;
    for (int k = 0; k < order; ++k) {
        c.emplace_back(term);
        BigFloat ratio = (BigFloat::zero(prec) + long(2 * k + 1)) / BigFloat(double(2 * k + 2));
        term = term * ratio * ratio;
    }
    TruncatedSeries s(std::move(c), "K");
    return s;
}

namespace {

// S3(q) = 1 + 2 sum q^{k^2}, S2(q) = sum_{k>=0} q^{k(k+1)} as exact series.
RatSeries theta3_rat(int order) {
    RatSeries s(static_cast<size_t>(order), mpq_class(0));
    s[0] = 1;
    for (long k = 1; k * k < order; ++k) s[static_cast<size_t>(k * k)] = 2;
    return s;
}
RatSeries theta2_sum_rat(int order) {
    RatSeries s(static_cast<size_t>(order), mpq_class(0));
    for (long k = 0; k * (k + 1) < order; ++k) s[static_cast<size_t>(k * (k + 1))] = 1;
    return s;
}

}  // namespace

RatSeries inverse_nome_series_rat(int order) {
    // 16 q S2^4 / S3^4
    RatSeries s2 = theta2_sum_rat(order);
    RatSeries s3 = theta3_rat(order);
    RatSeries n = rat_mul(s2, s2, order);
    n = rat_mul(n, n, order);
    RatSeries d = rat_mul(s3, s3, order);
    d = rat_mul(d, d, order);
    RatSeries q = rat_div(n, d, order);
    RatSeries out(static_cast<size_t>(order), mpq_class(0));
    for (int k = 1; k < order; ++k) out[static_cast<size_t>(k)] = 16 * q[static_cast<size_t>(k - 1)];
    return out;
}

TruncatedSeries inverse_nome_series(int order, mpfr_prec_t prec) {
    WorkingPrecision wp(prec);
    // float version of the exact computation (cheap at any order)
    auto lift = [&](const RatSeries& r) { return to_series(r, prec); };
    RatSeries s2r = theta2_sum_rat(order), s3r = theta3_rat(order);
    TruncatedSeries s2 = lift(s2r), s3 = lift(s3r);
    TruncatedSeries n = mul(s2, s2, order);
    n = mul(n, n, order);
    TruncatedSeries d = mul(s3, s3, order);
    d = mul(d, d, order);
    TruncatedSeries q = div_series(n, d, order);
    std::vector<BigComplex> out(static_cast<size_t>(order), BigComplex::zero(prec));
    for (int k = 1; k < order; ++k) out[static_cast<size_t>(k)] = q[k - 1] * 16L;
    TruncatedSeries r(std::move(out), "inverse-nome");
    return r;
}

namespace {

// F = sum c_j m^j with c_j = ((1/2)_j/j!)^2 and G = sum c_j e_j m^j,
// e_j = e_{j-1} + 1/(j(2j-1)); then q(m) = (m/16) exp(2 G/F).
void k_log_series_rat(int order, RatSeries& f, RatSeries& g) {
    f.assign(static_cast<size_t>(order), mpq_class(0));
    g.assign(static_cast<size_t>(order), mpq_class(0));
    mpq_class c(1), e(0);
    for (int j = 0; j < order; ++j) {
        f[static_cast<size_t>(j)] = c;
        g[static_cast<size_t>(j)] = c * e;
        mpq_class r(2 * j + 1, 2 * j + 2);
        c *= r * r;
        e += mpq_class(1, (long(j) + 1) * (2 * long(j) + 1));
    }
}

}  // namespace

RatSeries nome_series_rat(int order) {
    if (order < 2) return RatSeries(static_cast<size_t>(std::max(order, 1)), mpq_class(0));
    RatSeries f, g;
    k_log_series_rat(order - 1, f, g);
    RatSeries h = rat_div(g, f, order - 1);
    // exp(2h), h[0] = 0: exponential recurrence stays rational
    RatSeries ex(static_cast<size_t>(order - 1), mpq_class(0));
    ex[0] = 1;
    for (int k = 1; k < order - 1; ++k) {
        mpq_class s(0);
        for (int j = 1; j <= k; ++j) s += 2 * j * h[static_cast<size_t>(j)] * ex[static_cast<size_t>(k - j)];
        ex[static_cast<size_t>(k)] = s / k;
    }
    RatSeries out(static_cast<size_t>(order), mpq_class(0));
    for (int k = 1; k < order; ++k)
        out[static_cast<size_t>(k)] = ex[static_cast<size_t>(k - 1)] / 16;
    return out;
}

TruncatedSeries nome_series(int order, mpfr_prec_t prec) {
    WorkingPrecision wp(prec);
    if (order < 2) {
        return TruncatedSeries(std::vector<BigComplex>(static_cast<size_t>(std::max(order, 1)),
                                                       BigComplex::zero(prec)),
                               "nome");
    }
    int n = order - 1;
    std::vector<BigComplex> fv, gv;
    fv.reserve(static_cast<size_t>(n));
    gv.reserve(static_cast<size_t>(n));
    BigFloat c = BigFloat::one(prec);
    BigFloat e = BigFloat::zero(prec);
    for (int j = 0; j < n; ++j) {
        fv.emplace_back(c);
        gv.emplace_back(c * e);
        BigFloat r = BigFloat(double(2 * j + 1)) / BigFloat(double(2 * j + 2));
        c = c * r * r;
        e += 1L / BigFloat(double((j + 1) * (2 * j + 1)));
    }
    TruncatedSeries f(std::move(fv)), g(std::move(gv));
    TruncatedSeries h = scale(div_series(g, f, n), BigComplex(2L));
    TruncatedSeries ex = exp_series(h);
    std::vector<BigComplex> out(static_cast<size_t>(order), BigComplex::zero(prec));
    for (int k = 1; k < order; ++k) out[static_cast<size_t>(k)] = ex[k - 1] / 16L;
    return TruncatedSeries(std::move(out), "nome");
}

TruncatedSeries lambda_of_exp_series(const BigComplex& q0, const TruncatedSeries& s, int order) {
    mpfr_prec_t prec = std::max(s.precision(), q0.precision());
    WorkingPrecision wp(prec);
    if (!s[0].is_zero()) throw DomainError("lambda_of_exp_series: s(0) must vanish");
    int digits = static_cast<int>(double(prec) / 3.32) + 1;
    BigFloat aq0 = abs(q0);
    if (aq0 >= BigFloat(1.0)) throw DomainError("lambda_of_exp_series: |q0| must be < 1");
    double lq = -std::log(aq0.to_double());
    long kmax = static_cast<long>(std::sqrt((digits * 2.303) / lq)) + 2;

    TruncatedSeries s_pad = pad_to(truncate(s, std::max(1, order)), order);
    // theta sums with q(z)^e = q0^e * exp(e*s(z))
    auto q_pow = [&](long e) {
        return scale(exp_series(scale(s_pad, BigComplex(e))), pow(q0, e));
    };
    TruncatedSeries s3 = constant_series(BigComplex::one(prec), order);
    for (long k = 1; k <= kmax; ++k) s3 = add(s3, scale(q_pow(k * k), BigComplex(2L)));
    TruncatedSeries s2 = constant_series(BigComplex::one(prec), order);
    for (long k = 1; k <= kmax; ++k) s2 = add(s2, q_pow(k * (k + 1)));

    TruncatedSeries num = mul(s2, s2, order);
    num = mul(num, num, order);
    TruncatedSeries den = mul(s3, s3, order);
    den = mul(den, den, order);
    TruncatedSeries lam = div_series(num, den, order);
    lam = mul(lam, q_pow(1), order);
    return scale(lam, BigComplex(16L));
}

LambdaTau lambda_tau(const BigComplex& tau_in, mpfr_prec_t prec) {
    WorkingPrecision wp(prec);
    BigComplex tau = tau_in.at_precision(prec);
    if (tau.im.sign() <= 0) throw DomainError("lambda_tau: Im tau must be > 0");

    // Gamma(2) reduction: translations by 2 and inversions across |2 tau +- 1| = 1.
    // Track the full unimodular matrix (a b; c d) with tau_red = (a tau + b)/(c tau + d)
    // so the derivative chain rule has access to (c tau + d).
    BigFloat ma = BigFloat::one(prec), mb = BigFloat::zero(prec);
    BigFloat mc = BigFloat::zero(prec), md = BigFloat::one(prec);
    BigComplex one(BigFloat::one(prec));
    for (int it = 0; it < 20000; ++it) {
        BigFloat shift = round(tau.re / 2L) * 2L;
        if (!shift.is_zero()) {
            tau.re -= shift;
            // left-compose with (1 -s; 0 1)
            ma -= shift * mc;
            mb -= shift * md;
        }
        BigComplex tp = tau * 2L + one;
        BigComplex tm = tau * 2L - one;
        if (norm2(tp) < BigFloat(1.0)) {
            // tau -> tau/(2 tau + 1): left-compose with (1 0; 2 1)
            tau = tau / tp;
            mc += ldexp(ma, 1);
            md += ldexp(mb, 1);
        } else if (norm2(tm) < BigFloat(1.0)) {
            // tau -> tau/(1 - 2 tau): left-compose with (1 0; -2 1)
            tau = tau / (one - tau * 2L);
            mc -= ldexp(ma, 1);
            md -= ldexp(mb, 1);
        } else {
            break;
        }
    }

    // q = e^{i pi tau}; lambda = 16 q prod((1+q^{2k})/(1+q^{2k-1}))^8,
    // dlambda/dtau = i pi lambda [1 + 8 sum(2k q^{2k}/(1+q^{2k})
    //                                  - (2k-1) q^{2k-1}/(1+q^{2k-1}))].
    BigFloat pi = const_pi(prec);
    BigComplex q = exp(mul_i(tau) * pi);
    int digits = static_cast<int>(double(prec) / 3.32) + 1;
    BigFloat tol = pow10(-(digits + 5), prec);

    BigComplex lam = q * 16L;
    BigComplex logd(BigFloat::one(prec));  // 1 + 8 sum(...)
    BigComplex qk = one;                   // q^k
    for (long k = 1; k < 100000; ++k) {
        qk *= q;
        BigComplex frac = qk / (one + qk);
        BigComplex term = frac * long(k) * 8L;
        BigComplex fac = one + qk;
        if (k % 2 == 0) {
            // (1+q^{2j})^8 in the numerator
            BigComplex f2 = fac * fac;
            BigComplex f4 = f2 * f2;
            lam *= f4 * f4;
            logd += term;
        } else {
            BigComplex f2 = fac * fac;
            BigComplex f4 = f2 * f2;
            lam /= f4 * f4;
            logd -= term;
        }
        if (abs(qk) < tol && k >= 4) break;
    }
    BigComplex dlam = mul_i(lam) * pi * logd;
    // chain rule through the reduction: d tau_red/d tau = 1/(c tau_in + d)^2
    BigComplex den = BigComplex(mc) * tau_in.at_precision(prec) + BigComplex(md);
    dlam = dlam / (den * den);
    return {lam, dlam};
}

}  // namespace rc::special
