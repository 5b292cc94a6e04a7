#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "rc/gamma.hpp"
#include "rc/precision.hpp"
#include "test_util.hpp"

using namespace rc;
using rctest::close_rel;
using rctest::Rng;

TEST_CASE("with_precision constructor and guard policy") {
    auto c50 = with_precision(50);
    CHECK(c50.digits == 50);
    CHECK(c50.guard_digits == 10);
    auto c300 = with_precision(300);
    CHECK(c300.digits == 300);
    CHECK(c300.guard_digits == 30);
    CHECK_THROWS_AS(with_precision(5), RangeError);
}

TEST_CASE("decimal wire format round-trips bit-exactly at fixed context") {
    auto ctx = with_precision(40);
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        // start from a decimal string at context digits, as file inputs do
        BigFloat x0(rng.uniform(-10, 10));
        BigFloat x = BigFloat::from_string(x0.to_string(ctx.digits), ctx.bits());
        std::string s = x.to_string(ctx.digits);
        BigFloat y = BigFloat::from_string(s, ctx.bits());
        CHECK(mpfr_cmp(x.raw(), y.raw()) == 0);
        CHECK(y.to_string(ctx.digits) == s);
    }
}

TEST_CASE("string round-trip of the paper-style long literal") {
    auto ctx = with_precision(38);
    std::string s = "-2.3841687695688166392991458524487671904e0";
    BigFloat x = BigFloat::from_string(s, ctx.bits());
    CHECK(x.to_string(38) == s);
}

TEST_CASE("complex elementary functions agree with double precision") {
    WorkingPrecision wp(200);
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        double xr = rng.uniform(-2, 2), xi = rng.uniform(-2, 2);
        BigComplex z(xr, xi);
        std::complex<double> zd(xr, xi);
        CHECK(std::abs(exp(z).re.to_double() - std::exp(zd).real()) < 1e-12);
        CHECK(std::abs(exp(z).im.to_double() - std::exp(zd).imag()) < 1e-12);
        if (std::abs(zd) > 0.1) {
            CHECK(std::abs(log(z).re.to_double() - std::log(zd).real()) < 1e-12);
            CHECK(std::abs(log(z).im.to_double() - std::log(zd).imag()) < 1e-12);
            CHECK(std::abs(sqrt(z).re.to_double() - std::sqrt(zd).real()) < 1e-12);
            CHECK(std::abs(sqrt(z).im.to_double() - std::sqrt(zd).imag()) < 1e-12);
        }
        CHECK(std::abs(sin(z).re.to_double() - std::sin(zd).real()) < 1e-12);
        CHECK(std::abs(cos(z).im.to_double() - std::cos(zd).imag()) < 1e-12);
    }
}

TEST_CASE("gamma at 1 and 1/2") {
    auto ctx = with_precision(60);
    BigComplex g1 = gamma(BigComplex(1L), ctx);
    CHECK(close_rel(g1, BigComplex(1L), 1e-58));
    BigComplex gh = gamma(BigComplex(0.5), ctx);
    BigFloat sp = sqrt(const_pi(ctx.bits()));
    CHECK(close_rel(gh, BigComplex(sp), 1e-58));
}

TEST_CASE("gamma(9.5) via recurrence from gamma(1/2)") {
    auto ctx = with_precision(60);
    BigComplex expect = gamma(BigComplex(0.5), ctx);
    for (int k = 0; k < 9; ++k) expect *= BigComplex(0.5 + k);
    BigComplex got = gamma(BigComplex(9.5), ctx);
    CHECK(close_rel(got, expect, 1e-57));
}

TEST_CASE("gamma poles") {
    auto ctx = with_precision(30);
    CHECK_THROWS_AS(gamma(BigComplex(0L), ctx), PoleError);
    CHECK_THROWS_AS(gamma(BigComplex(-3L), ctx), PoleError);
    CHECK_THROWS_AS(gamma(BigFloat(-7.0), ctx), PoleError);
}

TEST_CASE("gamma recurrence property: |G(z+1)-z G(z)|/|G(z+1)| < 1e-(digits-2)") {
    for (int digits : {30, 80, 200}) {
        auto ctx = with_precision(digits);
        WorkingPrecision wp(ctx);
        BigFloat tol = pow10(-(digits - 2), ctx.bits());
        Rng rng(777);
        int n = 0;
        while (n < 100) {
            double x = rng.uniform(-10, 10), y = rng.uniform(-10, 10);
            if (y == 0.0 && x <= 0) continue;
            if (std::abs(y) < 1e-3 && std::abs(x - std::round(x)) < 1e-3 && x < 0.5) continue;
            ++n;
            BigComplex z(x, y);
            BigComplex g1 = gamma(z + BigComplex(1L), ctx);
            BigComplex g0 = gamma(z, ctx);
            CHECK(abs(g1 - z * g0) / abs(g1) < tol);
        }
    }
}

TEST_CASE("real gamma equals complex gamma on the real axis") {
    auto ctx = with_precision(50);
    for (double x : {0.25, 1.75, 3.5, -2.5, -0.75, 12.25}) {
        BigComplex zc = gamma(BigComplex(x, 1e-40), ctx);
        BigFloat zr = gamma(BigFloat(x), ctx);
        CHECK(close_rel(BigComplex(zr), zc, 1e-38));
    }
}
