#pragma once

#include <string>
#include <vector>

#include "rc/bigcomplex.hpp"
#include "rc/errors.hpp"

namespace rc {

// Truncated Maclaurin series: coeffs[k] is the coefficient of w^k, expansion
// point always 0. Re-centering is expressed through composition with maps.
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(std::vector<BigComplex> coeffs, std::string label = "")
        : c_(std::move(coeffs)), label_(std::move(label)) {}

    int order() const { return static_cast<int>(c_.size()); }
    bool empty() const { return c_.empty(); }
    const BigComplex& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    BigComplex& operator[](int k) { return c_[static_cast<size_t>(k)]; }
    const std::vector<BigComplex>& coeffs() const { return c_; }
    std::vector<BigComplex>& coeffs() { return c_; }

    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    bool is_real() const;
    // max precision across coefficients
    mpfr_prec_t precision() const;
    TruncatedSeries at_precision(mpfr_prec_t bits) const;

  private:
    std::vector<BigComplex> c_;
    std::string label_;
};

// -- basic algebra (results truncated to the minimum meaningful order) --
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
// product truncated to n_out (default min(order a, order b))
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b, int n_out = -1);
TruncatedSeries scale(const TruncatedSeries& a, const BigComplex& s);
TruncatedSeries differentiate(const TruncatedSeries& a);
TruncatedSeries integrate(const TruncatedSeries& a);
TruncatedSeries truncate(const TruncatedSeries& a, int m);

// Maclaurin series of outer(inner(w)) truncated to min(outer.order,
// inner.order); requires inner(0) = 0.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Compositional inverse: compose(s, revert(s)) = identity to order s.order().
// Requires s[0] = 0 and s[1] != 0. Newton iteration with order doubling.
TruncatedSeries revert(const TruncatedSeries& s);

// Horner evaluation at z.
BigComplex evaluate(const TruncatedSeries& s, const BigComplex& z);

// -- internal helpers shared across modules --
TruncatedSeries identity_series(int order, mpfr_prec_t prec);
TruncatedSeries constant_series(const BigComplex& c, int order);
TruncatedSeries pad_to(const TruncatedSeries& a, int order);
// a/b truncated to n_out (default min orders); requires b[0] != 0
TruncatedSeries div_series(const TruncatedSeries& a, const TruncatedSeries& b, int n_out = -1);
// log(a) with a[0] = 1 (general nonzero a[0] takes the principal log)
TruncatedSeries log_series(const TruncatedSeries& a);
// exp(a); a[0] must be 0 (prefactors handled by callers)
TruncatedSeries exp_series(const TruncatedSeries& a);
// a^alpha with a[0] = 1
TruncatedSeries pow_series(const TruncatedSeries& a, const BigComplex& alpha);

}  // namespace rc
