#pragma once

#include <random>
#include <string>

#include "rc/bigcomplex.hpp"
#include "rc/series.hpp"

namespace rctest {

using rc::BigComplex;
using rc::BigFloat;

inline BigFloat rel_err(const BigComplex& got, const BigComplex& want) {
    BigFloat d = abs(got - want);
    BigFloat s = abs(want);
    if (s.is_zero()) return d;
    return d / s;
}

inline bool close_abs(const BigComplex& got, const BigComplex& want, double tol) {
    return abs(got - want) < BigFloat(tol);
}

inline bool close_rel(const BigComplex& got, const BigComplex& want, double tol) {
    return rel_err(got, want) < BigFloat(tol);
}

// deterministic generator for reproducible property tests
struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long seed = 20240617u) : g(seed) {}
    double uniform(double lo, double hi) {
        std::uniform_real_distribution<double> d(lo, hi);
        return d(g);
    }
    BigComplex complex_in_disk(double r) {
        while (true) {
            double x = uniform(-r, r), y = uniform(-r, r);
            if (x * x + y * y <= r * r) return BigComplex(x, y);
        }
    }
    rc::TruncatedSeries random_series(int order, double scale = 1.0, bool complex_coeffs = true) {
        std::vector<BigComplex> c;
        c.reserve(static_cast<size_t>(order));
        for (int k = 0; k < order; ++k)
            c.emplace_back(uniform(-scale, scale), complex_coeffs ? uniform(-scale, scale) : 0.0);
        return rc::TruncatedSeries(std::move(c));
    }
};

inline BigFloat tol_digits(int digits) { return rc::pow10(-digits, 256); }

}  // namespace rctest
