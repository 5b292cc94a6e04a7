#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rc/gamma.hpp"
#include "rc/maps.hpp"
#include "rc/special.hpp"
#include "test_util.hpp"

using namespace rc;
using namespace rc::maps;
using rctest::close_abs;
using rctest::close_rel;
using rctest::Rng;

namespace {
const PrecisionContext kCtx = with_precision(40);
}

TEST_CASE("one-cut pointwise values and series") {
    auto m = one_cut();
    // phi(1/2) = (4*1/2)/(3/2)^2 = 8/9
    auto v = m.phi(BigComplex(0.5), kCtx);
    CHECK(close_rel(v, BigComplex(8L) / BigComplex(9L), 1e-30));
    auto s = m.phi_series(4, kCtx);
    CHECK(close_abs(s[1], BigComplex(4L), 1e-30));
    CHECK(close_abs(s[2], BigComplex(-8L), 1e-30));
    CHECK(close_abs(s[3], BigComplex(12L), 1e-30));
    CHECK(close_rel(m.acceleration_modulus(kCtx), BigFloat(0.25), 1e-30));
    CHECK_THROWS_AS(m.psi(BigComplex(1.5), kCtx), BranchCutError);
    CHECK_THROWS_AS(m.phi(BigComplex(1.5), kCtx), DomainError);
}

TEST_CASE("two-cut series and modulus") {
    auto m = two_cut();
    auto s = m.phi_series(5, kCtx);
    CHECK(close_abs(s[0], BigComplex(0L), 1e-30));
    CHECK(close_abs(s[1], BigComplex(2L), 1e-30));
    CHECK(close_abs(s[2], BigComplex(0L), 1e-30));
    CHECK(close_abs(s[3], BigComplex(-2L), 1e-30));
    CHECK(close_abs(s[4], BigComplex(0L), 1e-30));
    CHECK(close_rel(m.acceleration_modulus(kCtx), BigFloat(0.5), 1e-30));
}

TEST_CASE("nome map series heads") {
    auto m = nome_uniformization();
    auto phi = m.phi_series(4, kCtx);
    CHECK(close_abs(phi[1], BigComplex(16L), 1e-28));
    CHECK(close_abs(phi[2], BigComplex(-128L), 1e-28));
    CHECK(close_abs(phi[3], BigComplex(704L), 1e-28));
    auto psi = m.psi_series(3, kCtx);
    CHECK(close_rel(psi[1], BigComplex(1.0 / 16.0), 1e-28));
    CHECK(close_rel(psi[2], BigComplex(1.0 / 32.0), 1e-28));
    CHECK(close_rel(m.acceleration_modulus(kCtx), BigFloat(1.0 / 16.0), 1e-28));
}

TEST_CASE("acceleration moduli against the paper constants") {
    auto ctx = with_precision(40);
    // two-puncture: Gamma(3/4)^4/pi^2 = 0.2285...
    auto tp = two_puncture();
    BigFloat mod = tp.acceleration_modulus(ctx);
    BigFloat g34 = gamma(BigFloat(0.75), ctx);
    BigFloat pi = const_pi(ctx.bits());
    BigFloat want = pow(g34, 4L) / (pi * pi);
    CHECK(abs(mod - want) / want < pow10(-30, 256));
    CHECK(abs(mod - BigFloat(0.2285)) < BigFloat(1e-4));

    // omega-z: phi'(0) = 8/pi
    auto oz = omega_z();
    BigFloat moz = oz.acceleration_modulus(ctx);
    CHECK(close_rel(BigComplex(moz), BigComplex(pi / 8L), 1e-30));

    // conjugate-puncture(pi/3) matches the K-quotient formula for a_u
    auto cp = conjugate_puncture(pi / 3L);
    BigFloat mcp = cp.acceleration_modulus(ctx);
    PrecisionContext wctx = with_precision(50);
    BigFloat st = sin(pi / 3L), ct = cos(pi / 3L);
    BigComplex kp = special::elliptic_k(BigComplex(BigFloat(0.5), ct / st / 2L), wctx);
    BigComplex k2 = kp * kp;
    BigFloat denom = ldexp(k2.re, 1);  // K+^2 + K-^2 = 2 Re K+^2
    BigFloat au = abs(const_pi(wctx.bits()) / 2L * st / denom);
    CHECK(abs(mcp - au) / au < pow10(-25, 256));
}

TEST_CASE("monotonicity of phi'(0) in the size of Omega") {
    auto ctx = kCtx;
    BigFloat oc = 1L / one_cut().acceleration_modulus(ctx);       // 4
    BigFloat nm = 1L / nome_uniformization().acceleration_modulus(ctx);  // 16
    BigFloat tc = 1L / two_cut().acceleration_modulus(ctx);       // 2
    BigFloat tp = 1L / two_puncture().acceleration_modulus(ctx);  // ~4.376
    CHECK(oc < nm);
    CHECK(tc < tp);
}

TEST_CASE("pointwise roundtrip psi(phi(z)) = z and Schwarz inequality") {
    auto ctx = kCtx;
    BigFloat tol = pow10(-(ctx.digits - 5), 256);
    Rng rng(404);
    for (auto& m : {one_cut(), two_cut(), cut_ab(BigFloat(1.0), BigFloat(2.0)), n_cut(3),
                    paired_conjugate_cuts(const_pi(ctx.bits()) / 3L, 1), nome_uniformization(),
                    two_puncture(), omega_z()}) {
        INFO("map: ", m.name());
        for (int i = 0; i < 6; ++i) {
            BigComplex z = rng.complex_in_disk(0.9);
            if (abs(z) < BigFloat(0.05)) continue;
            BigComplex w = m.phi(z, ctx);
            BigComplex back = m.psi(w, ctx);
            CHECK(abs(back - z) < tol);
        }
        // Schwarz: |psi(w)| < |w| for w inside the disk
        for (int i = 0; i < 4; ++i) {
            BigComplex w = rng.complex_in_disk(0.8);
            if (abs(w) < BigFloat(0.1)) continue;
            BigComplex pw = m.psi(w, ctx);
            CHECK(abs(pw) < abs(w));
        }
        // normalization: c1 = phi'(0) real positive
        auto head = m.phi_series(2, ctx);
        CHECK(head[1].im.is_zero());
        CHECK(head[1].re > 0.0);
    }
}

TEST_CASE("two-cut psi handles the imaginary axis (interior points)") {
    auto m = two_cut();
    BigComplex w(0.0, 0.7);
    auto z = m.psi(w, kCtx);
    auto back = m.phi(z, kCtx);
    CHECK(close_abs(back, w, 1e-33));
    // psi(it) should be ~ i t/2 for small t
    BigComplex w2(0.0, 0.01);
    auto z2 = m.psi(w2, kCtx);
    CHECK(abs(z2 - BigComplex(0.0, 0.005)) < BigFloat(1e-6));
}

TEST_CASE("symmetrize identities") {
    auto ctx = kCtx;
    Rng rng(7);
    auto s2 = symmetrize(one_cut(), 2);
    auto tc = two_cut();
    auto s4 = symmetrize(one_cut(), 4);
    auto n4 = n_cut(4);
    for (int i = 0; i < 6; ++i) {
        BigComplex z = rng.complex_in_disk(0.85);
        CHECK(close_abs(s2.phi(z, ctx), tc.phi(z, ctx), 1e-33));
        CHECK(close_abs(s4.phi(z, ctx), n4.phi(z, ctx), 1e-33));
    }
    // n = 1 returns the base map unchanged
    auto s1 = symmetrize(one_cut(), 1);
    CHECK(s1.kind() == MapKind::OneCut);
    // series route agrees with the pointwise route
    auto ss = s4.phi_series(9, ctx);
    auto ns = n4.phi_series(9, ctx);
    for (int k = 0; k < 9; ++k) CHECK(close_abs(ss[k], ns[k], 1e-32));
}

TEST_CASE("disk automorphism basics") {
    auto ctx = kCtx;
    BigComplex a(0.3, -0.2);
    auto m = disk_automorphism(a);
    CHECK(close_abs(m.phi(a, ctx), BigComplex(0L), 1e-35));
    auto id = disk_automorphism(BigComplex(0L));
    BigComplex z(0.5, 0.1);
    CHECK(close_abs(id.phi(z, ctx), z, 1e-35));
    CHECK(close_abs(m.psi(m.phi(z, ctx), ctx), z, 1e-33));
    CHECK_THROWS_AS(disk_automorphism(BigComplex(1.2)), DomainError);
}

TEST_CASE("landen composite: modulus, distortion, and convergence to the nome map") {
    auto ctx = with_precision(60);
    auto l6 = landen_composite(6);
    // phi'(0) = 4^(2 - 2^-7) = 15.82...
    BigFloat c1 = 1L / l6.acceleration_modulus(ctx);
    CHECK(c1 > 15.7);
    CHECK(c1 < 15.9);
    // psi side maps 1 - 10^-33 to ~0.9
    BigComplex w = BigComplex(1L) - BigComplex(pow10(-33, ctx.bits()));
    BigComplex z = l6.psi(w, ctx);
    CHECK(z.im.is_zero());
    CHECK(z.re > 0.85);
    CHECK(z.re < 0.95);

    // sup distance to inverse_nome on |z| = 0.9 decreases in k
    auto nm = nome_uniformization();
    BigFloat prev(1e9);
    for (int k = 1; k <= 4; ++k) {
        auto lk = landen_composite(k);
        BigFloat sup(0.0);
        for (int j = 0; j < 8; ++j) {
            double th = 2.0 * 3.141592653589793 * j / 8.0 + 0.1;
            BigComplex zz(0.9 * std::cos(th), 0.9 * std::sin(th));
            BigFloat d = abs(lk.phi(zz, ctx) - nm.phi(zz, ctx));
            sup = max(sup, d);
        }
        CHECK(sup < prev);
        prev = sup;
    }
}

TEST_CASE("omega-z map: phi/psi roundtrip away from the origin ray issues") {
    auto ctx = kCtx;
    auto oz = omega_z();
    for (auto zd : {BigComplex(0.4, 0.2), BigComplex(-0.3, 0.5), BigComplex(0.1, -0.6)}) {
        BigComplex w = oz.phi(zd, ctx);
        BigComplex back = oz.psi(w, ctx);
        CHECK(close_abs(back, zd, 1e-33));
    }
    CHECK_THROWS_AS(oz.psi(BigComplex(2L), ctx), DomainError);
}

TEST_CASE("omega-z partial: series agrees with pointwise phi; strip psi") {
    auto ctx = kCtx;
    auto op = omega_z_partial(3);
    auto s = op.phi_series(24, ctx);
    for (auto zd : {BigComplex(0.05, 0.08), BigComplex(-0.1, 0.02)}) {
        auto want = op.phi(zd, ctx);
        auto got = evaluate(s, zd);
        CHECK(close_rel(got, want, 1e-20));
    }
    // strip restriction for psi
    CHECK_THROWS_AS(op.psi(BigComplex(0.8, -0.5), ctx), DomainError);
    // roundtrip inside the strip
    BigComplex z(0.05, 0.1);
    auto w = op.phi(z, ctx);
    CHECK(close_abs(op.psi(w, ctx), z, 1e-33));
}

TEST_CASE("map factory by name") {
    auto ctx = kCtx;
    CHECK(by_name("nome", "", ctx).kind() == MapKind::NomeUniformization);
    CHECK(by_name("cut-ab", "a=1,b=2", ctx).kind() == MapKind::CutAB);
    CHECK(by_name("landen", "k=2", ctx).kind() == MapKind::LandenComposite);
    CHECK(by_name("symmetrized", "base=one-cut,n=2", ctx).kind() == MapKind::Symmetrized);
    CHECK_THROWS_AS(by_name("bogus", "", ctx), DomainError);
    CHECK(catalog().size() == 10);
}
