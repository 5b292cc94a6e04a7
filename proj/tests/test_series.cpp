#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rc/rational_series.hpp"
#include "rc/series.hpp"
#include "test_util.hpp"

using namespace rc;
using rctest::close_abs;
using rctest::Rng;

namespace {
TruncatedSeries S(std::vector<double> v) {
    std::vector<BigComplex> c;
    for (double x : v) c.emplace_back(x);
    return TruncatedSeries(std::move(c));
}
}  // namespace

TEST_CASE("basic algebra examples") {
    WorkingPrecision wp(200);
    auto p = mul(S({1, 1}), S({1, 1}));
    REQUIRE(p.order() == 2);
    CHECK(close_abs(p[0], BigComplex(1L), 1e-50));
    CHECK(close_abs(p[1], BigComplex(2L), 1e-50));

    auto d = differentiate(S({3, 2, 5}));
    REQUIRE(d.order() == 2);
    CHECK(close_abs(d[0], BigComplex(2L), 1e-50));
    CHECK(close_abs(d[1], BigComplex(10L), 1e-50));

    auto in = integrate(S({1, 1}));
    REQUIRE(in.order() == 3);
    CHECK(close_abs(in[0], BigComplex(0L), 1e-50));
    CHECK(close_abs(in[1], BigComplex(1L), 1e-50));
    CHECK(close_abs(in[2], BigComplex(0.5), 1e-50));

    CHECK_THROWS_AS(mul(TruncatedSeries(), S({1})), EmptySeries);
}

TEST_CASE("truncate is idempotent and takes the min order") {
    WorkingPrecision wp(200);
    auto s = S({1, 2, 3, 4, 5});
    CHECK(truncate(s, 3).order() == 3);
    CHECK(truncate(truncate(s, 3), 3).order() == 3);
    CHECK(truncate(s, 9).order() == 5);
}

TEST_CASE("compose with identity outer returns the inner series") {
    WorkingPrecision wp(200);
    Rng rng;
    auto inner = rng.random_series(9);
    inner[0] = BigComplex(0L);
    auto id = identity_series(9, 200);
    auto c = compose(id, inner);
    REQUIRE(c.order() == 9);
    for (int k = 0; k < 9; ++k) CHECK(close_abs(c[k], inner[k], 1e-50));
}

TEST_CASE("compose rejects nonzero inner constant term") {
    WorkingPrecision wp(200);
    CHECK_THROWS_AS(compose(S({1, 1}), S({1, 1})), NonzeroConstantTerm);
}

TEST_CASE("compose matches brute-force full polynomial expansion (exact oracle)") {
    // outer deg-8 and inner random with rational coefficients; the oracle
    // expands inner^k as full polynomials (no truncation) then truncates.
    std::mt19937_64 g(12345);
    auto rnd_q = [&]() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
        return mpq_class(num(g), den(g));
    };
    for (int rep = 0; rep < 5; ++rep) {
        int n = 9;
        RatSeries outer, inner;
        for (int k = 0; k < n; ++k) outer.push_back(rnd_q());
        inner.push_back(0);
        for (int k = 1; k < n; ++k) inner.push_back(rnd_q());

        // brute force: sum_k outer[k] * inner^k at full degree, truncate at n
        int full = (n - 1) * (n - 1) + 1;
        RatSeries acc(static_cast<size_t>(full), mpq_class(0));
        RatSeries p(1, mpq_class(1));  // inner^0
        for (int k = 0; k < n; ++k) {
            for (size_t j = 0; j < p.size(); ++j) acc[j] += outer[static_cast<size_t>(k)] * p[j];
            p = rat_mul(p, inner, full);
        }
        acc.resize(static_cast<size_t>(n));

        WorkingPrecision wp(300);
        auto got = compose(to_series(outer, 300), to_series(inner, 300));
        auto want = to_series(acc, 300);
        for (int k = 0; k < n; ++k) CHECK(close_abs(got[k], want[k], 1e-80));
    }
}

TEST_CASE("compose associativity on random triples") {
    int digits = 50;
    WorkingPrecision wp(with_precision(digits).bits());
    Rng rng(99);
    BigFloat tol = pow10(-(digits - 5), 256);
    for (int rep = 0; rep < 5; ++rep) {
        auto a = rng.random_series(12);
        auto b = rng.random_series(12);
        auto c = rng.random_series(12);
        b[0] = BigComplex(0L);
        c[0] = BigComplex(0L);
        auto left = compose(compose(a, b), c);
        auto right = compose(a, compose(b, c));
        for (int k = 0; k < 12; ++k) CHECK(abs(left[k] - right[k]) < tol);
    }
}

TEST_CASE("revert linear map") {
    WorkingPrecision wp(200);
    auto t = revert(S({0, 2}));
    REQUIRE(t.order() == 2);
    CHECK(close_abs(t[1], BigComplex(0.5), 1e-50));
}

TEST_CASE("revert of the one-cut map series equals the closed-form inverse") {
    // phi1 = 4z/(1+z)^2, psi1 = (1-sqrt(1-w))/(1+sqrt(1-w))
    WorkingPrecision wp(300);
    int n = 20;
    // phi1 series: 4 z (1+z)^{-2} = sum 4 (-1)^(k-1) k z^k
    std::vector<BigComplex> phi(static_cast<size_t>(n), BigComplex::zero(300));
    for (int k = 1; k < n; ++k) phi[static_cast<size_t>(k)] = BigComplex((k % 2 ? 4L : -4L) * long(k));
    TruncatedSeries phi1(std::move(phi));

    // closed form psi1 via series ops
    std::vector<BigComplex> om(static_cast<size_t>(n), BigComplex::zero(300));
    om[0] = BigComplex(1L);
    om[1] = BigComplex(-1L);
    auto root = pow_series(TruncatedSeries(std::move(om)), BigComplex(0.5));
    auto one = constant_series(BigComplex(1L), n);
    auto psi_closed = div_series(sub(one, root), add(one, root), n);

    auto psi = revert(phi1);
    for (int k = 0; k < n; ++k) CHECK(close_abs(psi[k], psi_closed[k], 1e-70));
}

TEST_CASE("revert round-trips to the identity in both orders") {
    WorkingPrecision wp(250);
    Rng rng(5);
    for (int rep = 0; rep < 4; ++rep) {
        auto s = rng.random_series(16);
        s[0] = BigComplex(0L);
        s[1] = BigComplex(rng.uniform(0.5, 2.0), rng.uniform(-1.0, 1.0));
        auto t = revert(s);
        auto a = compose(s, t);
        auto b = compose(t, s);
        for (int k = 0; k < 16; ++k) {
            BigComplex want = k == 1 ? BigComplex(1L) : BigComplex(0L);
            CHECK(close_abs(a[k], want, 1e-55));
            CHECK(close_abs(b[k], want, 1e-55));
        }
    }
}

TEST_CASE("revert preconditions") {
    WorkingPrecision wp(200);
    CHECK_THROWS_AS(revert(S({1, 2})), NotInvertibleAtOrigin);
    CHECK_THROWS_AS(revert(S({0, 0, 1})), NotInvertibleAtOrigin);
}

TEST_CASE("evaluate examples") {
    WorkingPrecision wp(200);
    CHECK(close_abs(evaluate(S({1, 1, 1}), BigComplex(0L)), BigComplex(1L), 1e-50));
    CHECK(close_abs(evaluate(S({0, 1}), BigComplex(0, 1)), BigComplex(0, 1), 1e-50));
    // partial sum oracle
    auto s = S({1, 0.5, 0.25, 0.125});
    BigComplex z(0.3, -0.2);
    BigComplex direct(0L);
    BigComplex zp(1L);
    for (int k = 0; k < 4; ++k) {
        direct += s[k] * zp;
        zp *= z;
    }
    CHECK(close_abs(evaluate(s, z), direct, 1e-50));
}

TEST_CASE("exp/log/pow series helpers") {
    WorkingPrecision wp(250);
    Rng rng(17);
    auto s = rng.random_series(14, 0.5);
    s[0] = BigComplex(0L);
    auto back = log_series(exp_series(s));
    for (int k = 0; k < 14; ++k) CHECK(close_abs(back[k], s[k], 1e-60));

    auto a = rng.random_series(14, 0.3);
    a[0] = BigComplex(1L);
    auto sq = pow_series(a, BigComplex(0.5));
    auto prod = mul(sq, sq, 14);
    for (int k = 0; k < 14; ++k) CHECK(close_abs(prod[k], a[k], 1e-60));
}
