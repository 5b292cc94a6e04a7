#include "rc/maps.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "rc/errors.hpp"
#include "rc/special.hpp"

namespace rc::maps {

namespace detail {

struct MapImpl {
    virtual ~MapImpl() = default;
    virtual MapKind kind() const = 0;
    virtual std::string name() const = 0;
    virtual std::string params() const { return ""; }
    virtual BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const = 0;
    virtual BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const = 0;
    virtual TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const = 0;
    virtual TruncatedSeries psi_series(int order, const PrecisionContext& ctx) const {
        return revert(phi_series(order, ctx));
    }
};

namespace {

// principal log shifted by 2 pi i k to the branch nearest `prev`
BigComplex continued_log(const BigComplex& w, const BigComplex& prev) {
    BigComplex l = log(w);
    BigFloat two_pi = ldexp(const_pi(l.precision()), 1);
    BigFloat k = round((prev.im - l.im) / two_pi);
    if (!k.is_zero()) l.im += two_pi * k;
    return l;
}

// Adaptive walk of t from 0 to 1. `trial(t)` computes a tentative state from
// the committed one and returns a continuity measure (largest branch jump);
// `commit()` adopts the tentative state. Jumps above `jump_cap` bisect.
template <typename Trial, typename Commit>
void adaptive_walk(Trial&& trial, Commit&& commit, double jump_cap, const char* who) {
    BigFloat t(0.0), step(1.0 / 16.0);
    int guard = 0;
    while (t < 1.0) {
        if (++guard > 200000) throw BranchError(std::string(who) + ": branch walk stalled");
        BigFloat tn = min(BigFloat(1.0), t + step);
        BigFloat jump = trial(tn);
        if (jump < BigFloat(jump_cap)) {
            commit();
            t = tn;
            step = min(step * 2L, BigFloat(1.0 / 16.0));
        } else {
            step = step / 2L;
            if (step < BigFloat(1e-28))
                throw BranchError(std::string(who) + ": branch walk step underflow");
        }
    }
}

void require_in_disk(const BigComplex& z, const char* who) {
    if (!(abs(z) < BigFloat(1.0))) throw DomainError(std::string(who) + ": phi requires |z| < 1");
}

bool on_ray_right(const BigComplex& w, double a) {  // w in [a, inf)?
    return w.im.is_zero() && w.re >= BigFloat(a);
}
bool on_ray_left(const BigComplex& w, double a) {  // w in (-inf, a]?
    return w.im.is_zero() && w.re <= BigFloat(a);
}

BigComplex cone(mpfr_prec_t p) { return BigComplex::one(p); }

// ---------------------------------------------------------------- one cut
struct OneCutImpl final : MapImpl {
    MapKind kind() const override { return MapKind::OneCut; }
    std::string name() const override { return "one-cut"; }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "one-cut");
        mpfr_prec_t p = ctx.bits();
        BigComplex zz = z.at_precision(p);
        BigComplex d = cone(p) + zz;
        return zz * 4L / (d * d);
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        if (on_ray_right(w, 1.0)) throw BranchCutError("one-cut: w on the cut [1,inf)");
        mpfr_prec_t p = ctx.bits();
        BigComplex ww = w.at_precision(p);
        BigComplex s = sqrt(cone(p) - ww);
        return (cone(p) - s) / (cone(p) + s);
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(p));
        for (int k = 1; k < order; ++k)
            c[static_cast<size_t>(k)] = BigComplex(BigFloat::zero(p) + long(k % 2 ? 4 * k : -4 * k));
        return TruncatedSeries(std::move(c), "one-cut phi");
    }
    TruncatedSeries psi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        WorkingPrecision wp(p);
        // (1 - sqrt(1-w))/(1 + sqrt(1-w))
        std::vector<BigComplex> om(static_cast<size_t>(order), BigComplex::zero(p));
        om[0] = cone(p);
        if (order > 1) om[1] = -cone(p);
        auto root = pow_series(TruncatedSeries(std::move(om)), BigComplex(0.5));
        auto one = constant_series(cone(p), order);
        return div_series(sub(one, root), add(one, root), order);
    }
};

// ---------------------------------------------------------------- two cut
struct TwoCutImpl final : MapImpl {
    MapKind kind() const override { return MapKind::TwoCut; }
    std::string name() const override { return "two-cut"; }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "two-cut");
        mpfr_prec_t p = ctx.bits();
        BigComplex zz = z.at_precision(p);
        return zz * 2L / (cone(p) + zz * zz);
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        if (on_ray_right(w, 1.0) || on_ray_left(w, -1.0))
            throw BranchCutError("two-cut: w on a cut");
        mpfr_prec_t p = ctx.bits() + 16;
        BigComplex ww = w.at_precision(p);
        BigComplex s = sqrt(cone(p) - ww * ww);
        BigComplex r = (cone(p) - s) / (cone(p) + s);
        BigComplex u = sqrt(r);
        // pick the sqrt branch whose phi-image returns w
        BigComplex f1 = u * 2L / (cone(p) + u * u);
        if (abs(f1 - ww) > abs(f1 + ww)) u = -u;
        return u.at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(p));
        for (int k = 1; k < order; k += 2)
            c[static_cast<size_t>(k)] = BigComplex(BigFloat::zero(p) + long((k / 2) % 2 ? -2 : 2));
        return TruncatedSeries(std::move(c), "two-cut phi");
    }
};

// ---------------------------------------------------------------- cut [a,b]
struct CutABImpl final : MapImpl {
    BigFloat a_, b_;
    CutABImpl(const BigFloat& a, const BigFloat& b) : a_(a), b_(b) {
        if (!(a_ > 0.0) || !(b_ > 0.0)) throw DomainError("cut-ab: a and b must be positive");
    }
    MapKind kind() const override { return MapKind::CutAB; }
    std::string name() const override { return "cut-ab"; }
    std::string params() const override {
        return "a=" + a_.to_string(6) + ",b=" + b_.to_string(6);
    }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "cut-ab");
        mpfr_prec_t p = ctx.bits();
        BigComplex zz = z.at_precision(p);
        BigComplex u = cone(p) + zz, v = cone(p) - zz;
        return zz * (a_ * b_ * 4L) / (u * u * a_ + v * v * b_);
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        if (w.im.is_zero() && (w.re >= b_ || w.re <= -a_))
            throw BranchCutError("cut-ab: w on a cut");
        mpfr_prec_t p = ctx.bits();
        BigComplex ww = w.at_precision(p);
        BigComplex u = sqrt((BigComplex(b_) - ww) * a_ / ((BigComplex(a_) + ww) * b_));
        return (cone(p) - u) / (cone(p) + u);
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        WorkingPrecision wp(p);
        std::vector<BigComplex> num(static_cast<size_t>(order), BigComplex::zero(p));
        if (order > 1) num[1] = BigComplex(a_ * b_ * 4L);
        std::vector<BigComplex> den(static_cast<size_t>(order), BigComplex::zero(p));
        den[0] = BigComplex(a_ + b_);
        if (order > 1) den[1] = BigComplex((a_ - b_) * 2L);
        if (order > 2) den[2] = BigComplex(a_ + b_);
        return div_series(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(den)), order);
    }
};

// --------------------------------------------------------------- n-cut
// phi_n(z) = 2^(2/n) z (1+z^n)^(-2/n); psi by the symmetrization rule
// psi_n(w) = w * (psi_1(w^n)/w^n)^(1/n) tracked along the ray from 0.
struct NCutImpl final : MapImpl {
    int n_;
    explicit NCutImpl(int n) : n_(n) {
        if (n < 1) throw DomainError("n-cut: n must be >= 1");
    }
    MapKind kind() const override { return MapKind::NCut; }
    std::string name() const override { return "n-cut"; }
    std::string params() const override { return "n=" + std::to_string(n_); }

    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "n-cut");
        mpfr_prec_t p = ctx.bits();
        BigComplex zz = z.at_precision(p);
        BigComplex zn = pow(zz, long(n_));
        BigFloat e = BigFloat(2.0) / BigFloat(double(n_));
        BigComplex fac = exp(log(cone(p) + zn) * (-e));
        BigFloat c = pow(BigFloat::zero(p) + 2L, e);
        return zz * fac * c;
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits() + 16;
        BigComplex ww = w.at_precision(p);
        if (ww.is_zero()) return ww;
        BigComplex wn = pow(ww, long(n_));
        if (on_ray_right(wn, 1.0)) throw BranchCutError("n-cut: w on a cut");
        // track u(t) = log(psi1(t^n w^n)/(t^n w^n)) from u(0) = -log 4
        BigComplex u = -log(BigComplex(BigFloat::zero(p) + 4L));
        BigComplex u_next = u;
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex x = wn * pow(BigComplex(t), long(n_));
                BigComplex s = sqrt(cone(p) - x);
                BigComplex ratio = cone(p) / ((cone(p) + s) * (cone(p) + s));  // psi1(x)/x
                u_next = continued_log(ratio, u);
                return abs(u_next - u);
            },
            [&] { u = u_next; }, 1.2, "n-cut");
        return (ww * exp(u / long(n_))).at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        WorkingPrecision wp(p);
        BigFloat e = BigFloat(2.0) / BigFloat(double(n_));
        std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(p));
        // (1+u)^(-2/n) = sum binom(-2/n, j) u^j with u = z^n
        BigFloat coef = BigFloat::one(p);
        for (int j = 0;; ++j) {
            int idx = 1 + n_ * j;
            if (idx >= order) break;
            c[static_cast<size_t>(idx)] = BigComplex(coef);
            coef = coef * (-e - long(j)) / (BigFloat::zero(p) + long(j + 1));
        }
        TruncatedSeries s(std::move(c), "n-cut phi");
        return scale(s, BigComplex(pow(BigFloat::zero(p) + 2L, e)));
    }
};

// ------------------------------------------- paired conjugate radial cuts
// phi(z) = c_n(theta) z (1+z^n)^(2 theta/pi - 2/n) (1-z^n)^(-2 theta/pi)
struct PairedCutsImpl final : MapImpl {
    BigFloat theta_;
    int n_;
    PairedCutsImpl(const BigFloat& theta, int n) : theta_(theta), n_(n) {
        if (n < 1) throw DomainError("paired-conjugate-cuts: n must be >= 1");
        if (!(theta_ > 0.0)) throw DomainError("paired-conjugate-cuts: theta must be in (0, pi/n)");
    }
    MapKind kind() const override { return MapKind::PairedConjugateCuts; }
    std::string name() const override { return "paired-conjugate-cuts"; }
    std::string params() const override {
        return "theta=" + theta_.to_string(6) + ",n=" + std::to_string(n_);
    }

    BigFloat q_exponent(mpfr_prec_t p) const {  // 2 theta / pi
        return theta_.at_precision(p) * 2L / const_pi(p);
    }
    BigFloat cn(mpfr_prec_t p) const {
        BigFloat t = theta_.at_precision(p) * long(n_) / const_pi(p);  // n theta/pi in (0,1)
        if (!(t < 1.0)) throw DomainError("paired-conjugate-cuts: need n*theta < pi");
        BigFloat tp = theta_.at_precision(p) / const_pi(p);
        BigFloat en = BigFloat(1.0) / BigFloat(double(n_));
        return pow(BigFloat::zero(p) + 2L, en * 2L) * pow(t, tp) * pow(1L - t, en - tp);
    }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "paired-conjugate-cuts");
        mpfr_prec_t p = ctx.bits();
        BigComplex zz = z.at_precision(p);
        if (zz.is_zero()) return zz;
        BigComplex zn = pow(zz, long(n_));
        BigFloat q = q_exponent(p);
        BigFloat e = BigFloat(2.0) / BigFloat(double(n_));
        BigComplex lp = log(cone(p) + zn), lm = log(cone(p) - zn);
        return zz * cn(p) * exp(lp * (q - e) - lm * q);
    }
    BigComplex phi_logderiv(const BigComplex& z, mpfr_prec_t p) const {
        // phi'/phi = 1/z + (q-2/n) n z^(n-1)/(1+z^n) + q n z^(n-1)/(1-z^n)
        BigFloat q = q_exponent(p);
        BigFloat e = BigFloat(2.0) / BigFloat(double(n_));
        BigComplex zn1 = pow(z, long(n_ - 1)) * long(n_);
        BigComplex zn = pow(z, long(n_));
        return cone(p) / z + zn1 * BigComplex(q - e) / (cone(p) + zn) +
               zn1 * BigComplex(q) / (cone(p) - zn);
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        // numeric inversion of phi by Newton continuation along the ray 0 -> w
        mpfr_prec_t p = ctx.bits() + 16;
        PrecisionContext wctx{ctx.digits + 5, ctx.guard_digits};
        BigComplex ww = w.at_precision(p);
        if (ww.is_zero()) return ww;
        BigFloat tol = pow10(-(ctx.digits - 5), p);
        BigComplex z = ww / (cn(p) * 16L);  // small seed near the origin
        BigComplex z_next = z;
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex target = ww * t;
                z_next = z;
                for (int it = 0; it < 60; ++it) {
                    BigComplex fz = phi(z_next, wctx).at_precision(p);
                    BigComplex step = (fz - target) / (phi_logderiv(z_next, p) * fz);
                    z_next -= step;
                    if (abs(z_next) >= BigFloat(1.0))
                        z_next = z_next / abs(z_next) * BigFloat(1.0 - 1e-15);
                    if (abs(step) < tol * max(abs(z_next), BigFloat(1e-30)))
                        return abs(z_next - z);  // converged; jump = walk continuity
                }
                return BigFloat(1e9);  // force refinement
            },
            [&] { z = z_next; }, 0.2, "paired-conjugate-cuts psi");
        return z.at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        WorkingPrecision wp(p);
        BigFloat q = q_exponent(p);
        BigFloat e = BigFloat(2.0) / BigFloat(double(n_));
        // log(1 +- z^n) series
        std::vector<BigComplex> lp(static_cast<size_t>(order), BigComplex::zero(p));
        std::vector<BigComplex> lm(static_cast<size_t>(order), BigComplex::zero(p));
        for (int j = 1; n_ * j < order; ++j) {
            BigFloat v = BigFloat(1.0) / BigFloat(double(j));
            lp[static_cast<size_t>(n_ * j)] = BigComplex((j % 2) ? v : -v);
            lm[static_cast<size_t>(n_ * j)] = BigComplex(-v);
        }
        TruncatedSeries arg = sub(scale(TruncatedSeries(std::move(lp)), BigComplex(q - e)),
                                  scale(TruncatedSeries(std::move(lm)), BigComplex(q)));
        TruncatedSeries ex = exp_series(arg);
        // multiply by c_n z
        std::vector<BigComplex> out(static_cast<size_t>(order), BigComplex::zero(p));
        BigFloat c = cn(p);
        for (int k = 1; k < order; ++k) out[static_cast<size_t>(k)] = ex[k - 1] * BigComplex(c);
        return TruncatedSeries(std::move(out), "paired-cuts phi");
    }
};

// ------------------------------------------------------- nome uniformization
struct NomeImpl final : MapImpl {
    MapKind kind() const override { return MapKind::NomeUniformization; }
    std::string name() const override { return "nome"; }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "nome");
        return special::inverse_nome(z, ctx);
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        return special::nome(w, ctx);
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        return special::inverse_nome_series(order, ctx.bits());
    }
    TruncatedSeries psi_series(int order, const PrecisionContext& ctx) const override {
        return special::nome_series(order, ctx.bits());
    }
};

// --------------------------------------------------- two-puncture uniformizer
// psi(w) = (K((1+w)/2) - K((1-w)/2)) / (K((1-w)/2) + K((1+w)/2)),
// phi(z) = -1 + 2 lambda(i (1-z)/(1+z)).
struct TwoPunctureImpl final : MapImpl {
    MapKind kind() const override { return MapKind::TwoPunctureUniformization; }
    std::string name() const override { return "two-puncture"; }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "two-puncture");
        mpfr_prec_t p = ctx.bits() + 16;
        BigComplex zz = z.at_precision(p);
        BigComplex tau = mul_i((cone(p) - zz) / (cone(p) + zz));
        auto lt = special::lambda_tau(tau, p);
        return (lt.value * 2L - cone(p)).at_precision(ctx.bits());
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        if (on_ray_right(w, 1.0) || on_ray_left(w, -1.0))
            throw BranchCutError("two-puncture: w on a cut through the punctures");
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex ww = w.at_precision(p);
        BigComplex kp = special::elliptic_k((cone(p) + ww) / 2L, wctx);
        BigComplex km = special::elliptic_k((cone(p) - ww) / 2L, wctx);
        return ((kp - km) / (kp + km)).at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits() + 16;
        WorkingPrecision wp(p);
        BigFloat pi = const_pi(p);
        // q(z) = e^{-pi} exp(2 pi z/(1+z))
        std::vector<BigComplex> sv(static_cast<size_t>(order), BigComplex::zero(p));
        for (int k = 1; k < order; ++k)
            sv[static_cast<size_t>(k)] = BigComplex((k % 2) ? pi * 2L : -(pi * 2L));
        TruncatedSeries s(std::move(sv));
        BigComplex q0 = exp(BigComplex(-pi));
        auto lam = special::lambda_of_exp_series(q0, s, order);
        auto out = sub(scale(lam, BigComplex(2L)), constant_series(cone(p), order));
        out[0] = BigComplex::zero(p);  // exact: phi(0) = 0
        return out.at_precision(ctx.bits());
    }
};

// ------------------------------------- conjugate punctures e^{+-i theta}
struct ConjugatePunctureImpl final : MapImpl {
    BigFloat theta_;
    mutable std::mutex mu_;
    mutable std::map<mpfr_prec_t, BigComplex> rot_;  // psi-side rotation sigma

    explicit ConjugatePunctureImpl(const BigFloat& theta) : theta_(theta) {
        if (!(theta_ > 0.0)) throw DomainError("conjugate-puncture: theta must be in (0, pi/2]");
    }
    MapKind kind() const override { return MapKind::ConjugatePunctureUniformization; }
    std::string name() const override { return "conjugate-puncture"; }
    std::string params() const override { return "theta=" + theta_.to_string(6); }

    BigComplex z_of(const BigComplex& w, mpfr_prec_t p, const PrecisionContext& wctx) const {
        // Z(w;theta) from the K-quotient
        BigFloat st = sin(theta_.at_precision(p)), ct = cos(theta_.at_precision(p));
        BigComplex arg = mul_i(BigComplex(w.re / st - ct / st, w.im / st)) / 2L;
        BigComplex ka = special::elliptic_k(BigComplex(0.5) + arg, wctx).at_precision(p);
        BigComplex kb = special::elliptic_k(BigComplex(0.5) - arg, wctx).at_precision(p);
        return (ka - kb) / (ka + kb);
    }
    BigComplex rotation(mpfr_prec_t p, const PrecisionContext& wctx) const {
        {
            std::lock_guard<std::mutex> lk(mu_);
            auto it = rot_.find(p);
            if (it != rot_.end()) return it->second;
        }
        // psi_raw'(0) is purely imaginary; rotate it onto the positive axis
        BigFloat h = pow10(-(wctx.digits / 2), p);
        BigComplex z0 = z_of(BigComplex::zero(p), p, wctx);
        BigComplex zh = z_of(BigComplex(h), p, wctx);
        BigComplex d = (zh - z0) / ((cone(p) - conj(z0) * zh) * BigComplex(h));
        BigComplex sigma = conj(d) / abs(d);
        std::lock_guard<std::mutex> lk(mu_);
        rot_.emplace(p, sigma);
        return sigma;
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex ww = w.at_precision(p);
        BigComplex z = z_of(ww, p, wctx);
        BigComplex z0 = z_of(BigComplex::zero(p), p, wctx);
        BigComplex raw = (z - z0) / (cone(p) - conj(z0) * z);
        return (rotation(p, wctx) * raw).at_precision(ctx.bits());
    }
    BigComplex phi(const BigComplex& zin, const PrecisionContext& ctx) const override {
        require_in_disk(zin, "conjugate-puncture");
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex z = zin.at_precision(p) / rotation(p, wctx);
        BigFloat st = sin(theta_.at_precision(p)), ct = cos(theta_.at_precision(p));
        BigComplex kp = special::elliptic_k(BigComplex(BigFloat(0.5), ct / st / 2L), wctx).at_precision(p);
        BigComplex km = conj(kp);
        BigComplex tau = mul_i((kp - km * z) / (km + kp * z));
        auto lt = special::lambda_tau(tau, p);
        BigComplex ei(cos(theta_.at_precision(p)), st);
        return (ei - mul_i(lt.value) * st * 2L).at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        WorkingPrecision wp(p);
        BigFloat pi = const_pi(p);
        BigFloat st = sin(theta_.at_precision(p)), ct = cos(theta_.at_precision(p));
        BigComplex kp = special::elliptic_k(BigComplex(BigFloat(0.5), ct / st / 2L), wctx).at_precision(p);
        BigComplex km = conj(kp);
        // i pi tau(z') = -pi (kp - km z')/(km + kp z'); subtract its z'=0 value
        std::vector<BigComplex> av(static_cast<size_t>(order), BigComplex::zero(p));
        av[0] = kp * (-pi);
        if (order > 1) av[1] = km * pi;
        std::vector<BigComplex> bv(static_cast<size_t>(order), BigComplex::zero(p));
        bv[0] = km;
        if (order > 1) bv[1] = kp;
        TruncatedSeries s = div_series(TruncatedSeries(std::move(av)), TruncatedSeries(std::move(bv)), order);
        BigComplex logq0 = s[0];
        s[0] = BigComplex::zero(p);
        BigComplex q0 = exp(logq0);
        auto lam = special::lambda_of_exp_series(q0, s, order);
        BigComplex ei(ct, st);
        auto out = sub(constant_series(ei, order), scale(lam, mul_i(BigComplex(st)) * 2L));
        out[0] = BigComplex::zero(p);
        // substitute z' = z/sigma
        BigComplex sigma = rotation(p, wctx);
        BigComplex sk = cone(p);
        for (int k = 1; k < order; ++k) {
            sk = sk / sigma;
            out[k] = out[k] * sk;
        }
        return out.at_precision(ctx.bits());
    }
};

// ------------------------------------------------------ Omega_Z uniformizer
// phi(z) = (1/(2 pi i)) log(1 - lambda-series(-i z)) continued from 0;
// psi(w) = i e^{i pi tau(w)} with lambda(tau(w)) = 1 - e^{2 pi i w} tracked
// along the ray from 0.
struct OmegaZImpl final : MapImpl {
    MapKind kind() const override { return MapKind::OmegaZUniformization; }
    std::string name() const override { return "omega-z"; }

    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "omega-z");
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex zz = z.at_precision(p);
        if (zz.is_zero()) return zz;
        // walk t from 0 to 1 tracking log(1 - lambda(-i t z))
        BigComplex lg = BigComplex::zero(p), lg_next = lg;
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex lam = special::inverse_nome(div_i(zz * t), wctx).at_precision(p);
                lg_next = continued_log(cone(p) - lam, lg);
                return abs(lg_next - lg);
            },
            [&] { lg = lg_next; }, 1.2, "omega-z phi");
        BigFloat pi = const_pi(p);
        return (div_i(lg) / (pi * 2L)).at_precision(ctx.bits());
    }

    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex ww = w.at_precision(p);
        if (ww.is_zero()) return ww;
        if (ww.im.is_zero() && abs(ww.re) >= BigFloat(1.0) &&
            round(ww.re) == ww.re)
            throw DomainError("omega-z: w is a puncture");
        BigFloat pi = const_pi(p);
        BigComplex two_pi_i = mul_i(BigComplex(pi * 2L));

        auto m_of = [&](const BigFloat& t) { return cone(p) - exp(two_pi_i * ww * BigFloat(t)); };

        // seed at small t with the principal tau formula
        BigFloat t0(1.0 / 64.0);
        BigComplex m0 = m_of(t0);
        while (abs(m0) > BigFloat(0.05)) {
            t0 = t0 / 2L;
            m0 = m_of(t0);
        }
        if (m0.im.is_zero() && m0.re.sign() <= 0) {
            // seed would sit on the (-inf,0] cut; nudge within the sheet
            m0.im = abs(m0.re) * BigFloat(1e-6);
        }
        BigComplex k1 = special::elliptic_k(cone(p) - m0, wctx).at_precision(p);
        BigComplex k0 = special::elliptic_k(m0, wctx).at_precision(p);
        BigComplex tau = mul_i(k1 / k0);

        // continue tau along t in [t0, 1]: Newton on lambda(tau) = m(t)
        BigFloat t = t0;
        BigFloat step = t0;
        int guard = 0;
        while (t < 1.0) {
            if (++guard > 40000) throw BranchError("omega-z: tau tracking failed to advance");
            BigFloat tn = min(BigFloat(1.0), t + step);
            BigComplex target = m_of(tn);
            BigComplex tt = tau;
            bool ok = false;
            for (int it = 0; it < 32; ++it) {
                auto lt = special::lambda_tau(tt, p);
                BigComplex f = lt.value - target;
                BigComplex d = f / lt.deriv;
                tt -= d;
                if (tt.im.sign() <= 0) break;
                if (abs(d) < ldexp(max(abs(tt), BigFloat(1.0)), -(ctx.bits() - 8))) {
                    ok = true;
                    break;
                }
            }
            if (ok && abs(tt - tau) < BigFloat(0.45)) {
                tau = tt;
                t = tn;
                step = min(step * 2L, BigFloat(1.0 / 16.0));
            } else {
                step = step / 2L;
                if (step < BigFloat(1e-30)) throw BranchError("omega-z: tau tracking stalled");
            }
        }
        return (mul_i(exp(mul_i(tau) * pi))).at_precision(ctx.bits());
    }

    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits() + 16;
        WorkingPrecision wp(p);
        auto lam = special::inverse_nome_series(order, p);
        // 1 - lambda(-i z)
        std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(p));
        c[0] = cone(p);
        BigComplex mi = -mul_i(cone(p));  // -i
        BigComplex f = cone(p);
        for (int k = 1; k < order; ++k) {
            f = f * mi;
            c[static_cast<size_t>(k)] = -(lam[k] * f);
        }
        auto lg = log_series(TruncatedSeries(std::move(c)));
        BigFloat pi = const_pi(p);
        TruncatedSeries out = scale(lg, div_i(cone(p)) / (pi * 2L));
        out.set_label("omega-z phi");
        return out.at_precision(ctx.bits());
    }
};

// -------------------------------------------- finite Landen compositions
// landen_composite(k) composes the elementary maps with indices
// 1, 2, 4, ..., 2^(k+1); its phi'(0) = 4^(2 - 2^-(k+1)).
struct LandenImpl final : MapImpl {
    int k_;
    std::vector<long> idx_;  // stage indices, outermost first
    explicit LandenImpl(int k) : k_(k) {
        if (k < 1) throw DomainError("landen: k must be >= 1");
        for (long n = 1; n <= (1L << (k + 1)); n *= 2) idx_.push_back(n);
    }
    MapKind kind() const override { return MapKind::LandenComposite; }
    std::string name() const override { return "landen"; }
    std::string params() const override { return "k=" + std::to_string(k_); }

    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "landen");
        mpfr_prec_t p = ctx.bits() + 16;
        BigComplex zz = z.at_precision(p);
        if (zz.is_zero()) return zz;
        // walk the ray, tracking log(1 + w^n) per stage (innermost first)
        size_t ns = idx_.size();
        std::vector<BigComplex> logs(ns, BigComplex::zero(p));
        std::vector<BigComplex> logs_next(ns, BigComplex::zero(p));
        BigComplex val = BigComplex::zero(p);
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex w = zz * t;
                BigFloat jump(0.0);
                for (size_t j = ns; j-- > 0;) {
                    long n = idx_[j];
                    BigComplex wn = pow(w, n);
                    logs_next[j] = continued_log(cone(p) + wn, logs[j]);
                    jump = max(jump, abs(logs_next[j] - logs[j]));
                    BigFloat e = BigFloat(2.0) / BigFloat(double(n));
                    w = w * exp(logs_next[j] * (-e)) * pow(BigFloat::zero(p) + 2L, e);
                }
                val = w;
                return jump;
            },
            [&] { logs.swap(logs_next); }, 1.2, "landen phi");
        return val.at_precision(ctx.bits());
    }

    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        if (on_ray_right(w, 1.0)) throw BranchCutError("landen: w on the cut [1,inf)");
        mpfr_prec_t p = ctx.bits() + 16;
        BigComplex x = w.at_precision(p);
        // stage 1: psi1; stages n=2,...: x * (psi1(x^n)/x^n)^(1/n), all
        // principal-safe because every stage input lies in the disk.
        BigComplex s = sqrt(cone(p) - x);
        x = (cone(p) - s) / (cone(p) + s);
        for (size_t j = 1; j < idx_.size(); ++j) {
            long n = idx_[j];
            if (x.is_zero()) break;
            BigComplex xn = pow(x, n);
            BigComplex sr = sqrt(cone(p) - xn);
            BigComplex opr = cone(p) + sr;
            BigComplex ratio = cone(p) / (opr * opr);
            x = x * exp(log(ratio) / long(n));
        }
        return x.at_precision(ctx.bits());
    }

    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        TruncatedSeries acc = NCutImpl(static_cast<int>(idx_.back())).phi_series(order, wctx);
        for (size_t j = idx_.size() - 1; j-- > 0;) {
            TruncatedSeries outer = NCutImpl(static_cast<int>(idx_[j])).phi_series(order, wctx);
            acc = compose(outer, acc);
        }
        acc.set_label("landen phi");
        return acc.at_precision(ctx.bits());
    }
};

// ---------------------------------------------- partial Omega_Z (log of Landen)
struct OmegaZPartialImpl final : MapImpl {
    int k_;
    LandenImpl landen_;
    explicit OmegaZPartialImpl(int k) : k_(k), landen_(k) {}
    MapKind kind() const override { return MapKind::OmegaZPartial; }
    std::string name() const override { return "omega-z-partial"; }
    std::string params() const override { return "k=" + std::to_string(k_); }

    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "omega-z-partial");
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex zz = z.at_precision(p);
        if (zz.is_zero()) return zz;
        BigComplex lg = BigComplex::zero(p), lg_next = lg;
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex lam = landen_.phi(div_i(zz * t), wctx).at_precision(p);
                lg_next = continued_log(cone(p) - lam, lg);
                return abs(lg_next - lg);
            },
            [&] { lg = lg_next; }, 1.2, "omega-z-partial phi");
        BigFloat pi = const_pi(p);
        return (div_i(lg) / (pi * 2L)).at_precision(ctx.bits());
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex ww = w.at_precision(p);
        BigFloat half(0.5);
        if (!(abs(ww.re) < half))
            throw DomainError("omega-z-partial: psi restricted to the strip |Re w| < 1/2");
        BigFloat pi = const_pi(p);
        BigComplex m = cone(p) - exp(mul_i(ww) * (pi * 2L));
        return (mul_i(landen_.psi(m, wctx).at_precision(p))).at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits() + 16;
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        WorkingPrecision wp(p);
        auto lam = landen_.phi_series(order, wctx).at_precision(p);
        std::vector<BigComplex> c(static_cast<size_t>(order), BigComplex::zero(p));
        c[0] = cone(p);
        BigComplex mi = -mul_i(cone(p));
        BigComplex f = cone(p);
        for (int k = 1; k < order; ++k) {
            f = f * mi;
            c[static_cast<size_t>(k)] = -(lam[k] * f);
        }
        auto lg = log_series(TruncatedSeries(std::move(c)));
        BigFloat pi = const_pi(p);
        return scale(lg, div_i(cone(p)) / (pi * 2L)).at_precision(ctx.bits());
    }
};

// ----------------------------------------------------------- symmetrized map
struct SymmetrizedImpl final : MapImpl {
    MapInstance base_;
    int n_;
    SymmetrizedImpl(MapInstance base, int n) : base_(std::move(base)), n_(n) {
        if (n < 1) throw DomainError("symmetrize: n must be >= 1");
    }
    MapKind kind() const override { return MapKind::Symmetrized; }
    std::string name() const override { return "symmetrized"; }
    std::string params() const override {
        std::string bp = base_.params();
        return "base=" + base_.name() + (bp.empty() ? "" : "(" + bp + ")") +
               ",n=" + std::to_string(n_);
    }

    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        require_in_disk(z, "symmetrized");
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex zz = z.at_precision(p);
        if (zz.is_zero()) return zz;
        auto head = base_.phi_series(2, wctx);
        BigComplex c1 = head[1].at_precision(p);
        if (!c1.im.is_zero() || c1.re.sign() <= 0)
            throw BranchError("symmetrize: base phi'(0) must be real positive");
        BigComplex u = log(c1), u_next = u;
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex x = pow(zz * t, long(n_));
                BigComplex ratio = base_.phi(x, wctx).at_precision(p) / x;
                u_next = continued_log(ratio, u);
                return abs(u_next - u);
            },
            [&] { u = u_next; }, 1.2, "symmetrize phi");
        return (zz * exp(u / long(n_))).at_precision(ctx.bits());
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        BigComplex ww = w.at_precision(p);
        if (ww.is_zero()) return ww;
        auto head = base_.phi_series(2, wctx);
        BigComplex c1 = head[1].at_precision(p);
        BigComplex u = -log(c1), u_next = u;
        adaptive_walk(
            [&](const BigFloat& t) {
                BigComplex x = pow(ww * t, long(n_));
                BigComplex ratio = base_.psi(x, wctx).at_precision(p) / x;
                u_next = continued_log(ratio, u);
                return abs(u_next - u);
            },
            [&] { u = u_next; }, 1.2, "symmetrize psi");
        return (ww * exp(u / long(n_))).at_precision(ctx.bits());
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        PrecisionContext wctx{ctx.digits + 8, ctx.guard_digits};
        mpfr_prec_t p = wctx.bits();
        WorkingPrecision wp(p);
        int base_order = (order + n_ - 1) / n_ + 1;
        auto bs = base_.phi_series(base_order, wctx).at_precision(p);
        BigComplex c1 = bs[1];
        // g(w) = phi(w)/(c1 w); G(z) = g(z^n); phi_n = c1^(1/n) z G(z)^(1/n)
        std::vector<BigComplex> g(static_cast<size_t>(order), BigComplex::zero(p));
        for (int j = 0; j < base_order - 1; ++j) {
            int idx = n_ * j;
            if (idx >= order) break;
            g[static_cast<size_t>(idx)] = bs[j + 1] / c1;
        }
        auto root = pow_series(TruncatedSeries(std::move(g)), BigComplex(BigFloat::one(p) / long(n_)));
        BigComplex c1n = exp(log(c1) / long(n_));
        std::vector<BigComplex> out(static_cast<size_t>(order), BigComplex::zero(p));
        for (int k = 1; k < order; ++k) out[static_cast<size_t>(k)] = root[k - 1] * c1n;
        return TruncatedSeries(std::move(out)).at_precision(ctx.bits());
    }
};

// --------------------------------------------------------- disk automorphism
struct DiskAutoImpl final : MapImpl {
    BigComplex a_;
    explicit DiskAutoImpl(const BigComplex& a) : a_(a) {
        if (!(abs(a_) < BigFloat(1.0))) throw DomainError("disk-automorphism: |a| < 1 required");
    }
    MapKind kind() const override { return MapKind::DiskAutomorphism; }
    std::string name() const override { return "disk-automorphism"; }
    std::string params() const override {
        return "a=" + a_.re.to_string(6) + (a_.im.sign() < 0 ? "" : "+") + a_.im.to_string(6) + "i";
    }
    BigComplex phi(const BigComplex& z, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        BigComplex zz = z.at_precision(p), aa = a_.at_precision(p);
        return (zz - aa) / (cone(p) - conj(aa) * zz);
    }
    BigComplex psi(const BigComplex& w, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        BigComplex ww = w.at_precision(p), aa = a_.at_precision(p);
        return (ww + aa) / (cone(p) + conj(aa) * ww);
    }
    TruncatedSeries phi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        WorkingPrecision wp(p);
        BigComplex aa = a_.at_precision(p);
        std::vector<BigComplex> num(static_cast<size_t>(order), BigComplex::zero(p));
        num[0] = -aa;
        if (order > 1) num[1] = cone(p);
        std::vector<BigComplex> den(static_cast<size_t>(order), BigComplex::zero(p));
        den[0] = cone(p);
        if (order > 1) den[1] = -conj(aa);
        return div_series(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(den)), order);
    }
    TruncatedSeries psi_series(int order, const PrecisionContext& ctx) const override {
        mpfr_prec_t p = ctx.bits();
        WorkingPrecision wp(p);
        BigComplex aa = a_.at_precision(p);
        std::vector<BigComplex> num(static_cast<size_t>(order), BigComplex::zero(p));
        num[0] = aa;
        if (order > 1) num[1] = cone(p);
        std::vector<BigComplex> den(static_cast<size_t>(order), BigComplex::zero(p));
        den[0] = cone(p);
        if (order > 1) den[1] = conj(aa);
        return div_series(TruncatedSeries(std::move(num)), TruncatedSeries(std::move(den)), order);
    }
};

}  // namespace
}  // namespace detail

MapKind MapInstance::kind() const { return impl_->kind(); }
std::string MapInstance::name() const { return impl_->name(); }
std::string MapInstance::params() const { return impl_->params(); }
BigComplex MapInstance::phi(const BigComplex& z, const PrecisionContext& ctx) const {
    return impl_->phi(z, ctx);
}
BigComplex MapInstance::psi(const BigComplex& w, const PrecisionContext& ctx) const {
    return impl_->psi(w, ctx);
}
TruncatedSeries MapInstance::phi_series(int order, const PrecisionContext& ctx) const {
    if (order < 2) throw RangeError("phi_series: order must be >= 2");
    return impl_->phi_series(order, ctx);
}
TruncatedSeries MapInstance::psi_series(int order, const PrecisionContext& ctx) const {
    if (order < 2) throw RangeError("psi_series: order must be >= 2");
    return impl_->psi_series(order, ctx);
}
BigFloat MapInstance::acceleration_modulus(const PrecisionContext& ctx) const {
    auto head = impl_->phi_series(2, ctx);
    return 1L / abs(head[1]);
}

MapInstance one_cut() { return MapInstance(std::make_shared<detail::OneCutImpl>()); }
MapInstance two_cut() { return MapInstance(std::make_shared<detail::TwoCutImpl>()); }
MapInstance cut_ab(const BigFloat& a, const BigFloat& b) {
    return MapInstance(std::make_shared<detail::CutABImpl>(a, b));
}
MapInstance n_cut(int n) { return MapInstance(std::make_shared<detail::NCutImpl>(n)); }
MapInstance paired_conjugate_cuts(const BigFloat& theta, int n) {
    return MapInstance(std::make_shared<detail::PairedCutsImpl>(theta, n));
}
MapInstance nome_uniformization() { return MapInstance(std::make_shared<detail::NomeImpl>()); }
MapInstance two_puncture() { return MapInstance(std::make_shared<detail::TwoPunctureImpl>()); }
MapInstance conjugate_puncture(const BigFloat& theta) {
    return MapInstance(std::make_shared<detail::ConjugatePunctureImpl>(theta));
}
MapInstance omega_z() { return MapInstance(std::make_shared<detail::OmegaZImpl>()); }
MapInstance landen_composite(int k) { return MapInstance(std::make_shared<detail::LandenImpl>(k)); }
MapInstance omega_z_partial(int k) {
    return MapInstance(std::make_shared<detail::OmegaZPartialImpl>(k));
}
MapInstance symmetrize(const MapInstance& base, int n) {
    if (n == 1) return base;
    return MapInstance(std::make_shared<detail::SymmetrizedImpl>(base, n));
}
MapInstance disk_automorphism(const BigComplex& a) {
    return MapInstance(std::make_shared<detail::DiskAutoImpl>(a));
}

std::vector<MapInstance> catalog() {
    BigFloat th = const_pi(current_precision()) / 3L;
    return {one_cut(),
            two_cut(),
            n_cut(4),
            paired_conjugate_cuts(th, 1),
            nome_uniformization(),
            two_puncture(),
            conjugate_puncture(th),
            omega_z(),
            landen_composite(6),
            omega_z_partial(2)};
}

namespace {
std::map<std::string, std::string> parse_params(const std::string& csv) {
    std::map<std::string, std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("map params must be key=value: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}
BigFloat param_float(const std::map<std::string, std::string>& m, const std::string& key,
                     const PrecisionContext& ctx) {
    auto it = m.find(key);
    if (it == m.end()) throw DomainError("missing map parameter: " + key);
    if (it->second == "pi/3") return const_pi(ctx.bits()) / 3L;
    if (it->second == "pi/4") return const_pi(ctx.bits()) / 4L;
    if (it->second == "pi/6") return const_pi(ctx.bits()) / 6L;
    return BigFloat::from_string(it->second, ctx.bits());
}
int param_int(const std::map<std::string, std::string>& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw DomainError("missing map parameter: " + key);
    return std::stoi(it->second);
}
}  // namespace

MapInstance by_name(const std::string& name, const std::string& params_csv,
                    const PrecisionContext& ctx) {
    auto ps = parse_params(params_csv);
    if (name == "one-cut") return one_cut();
    if (name == "two-cut") return two_cut();
    if (name == "cut-ab") return cut_ab(param_float(ps, "a", ctx), param_float(ps, "b", ctx));
    if (name == "n-cut") return n_cut(param_int(ps, "n"));
    if (name == "paired-conjugate-cuts")
        return paired_conjugate_cuts(param_float(ps, "theta", ctx), param_int(ps, "n"));
    if (name == "nome") return nome_uniformization();
    if (name == "two-puncture") return two_puncture();
    if (name == "conjugate-puncture") return conjugate_puncture(param_float(ps, "theta", ctx));
    if (name == "omega-z") return omega_z();
    if (name == "landen") return landen_composite(param_int(ps, "k"));
    if (name == "omega-z-partial") return omega_z_partial(param_int(ps, "k"));
    if (name == "symmetrized")
        return symmetrize(by_name(ps.at("base"), "", ctx), param_int(ps, "n"));
    throw DomainError("unknown map: " + name);
}

}  // namespace rc::maps
