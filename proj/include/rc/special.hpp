#pragma once

#include "rc/bigcomplex.hpp"
#include "rc/precision.hpp"
#include "rc/rational_series.hpp"
#include "rc/series.hpp"

namespace rc::special {

// Complete elliptic integral of the first kind, K(m) = (pi/2) 2F1(1/2,1/2;1;m),
// modulus convention m = k^2. AGM evaluation with right-half-plane branch
// selection; principal branch on C \ [1,inf).
// On the cut [1,inf): imaginary part -0 selects the lower side; +0 throws
// BranchCutError (caller must perturb or pick a side).
BigComplex elliptic_k(const BigComplex& m, const PrecisionContext& ctx);

// Elliptic nome q(m) = exp(-pi K(1-m) / K(m)) on the principal domain
// C \ ((-inf,0] u [1,inf)); q(0) = 0.
BigComplex nome(const BigComplex& m, const PrecisionContext& ctx);

// Jacobi theta constants; theta2 carries the principal q^(1/4) prefactor.
BigComplex theta2(const BigComplex& q, const PrecisionContext& ctx);
BigComplex theta3(const BigComplex& q, const PrecisionContext& ctx);

// Functional inverse of the nome: lambda(log q/(pi i)) = theta2^4/theta3^4,
// defined for |q| < 1.
BigComplex inverse_nome(const BigComplex& q, const PrecisionContext& ctx);

// Maclaurin series of K: (pi/2) sum ((1/2)_j / j!)^2 m^j.
TruncatedSeries elliptic_k_series(int order, mpfr_prec_t prec);

// Series of the inverse nome (16q - 128q^2 + 704q^3 - ...).
TruncatedSeries inverse_nome_series(int order, mpfr_prec_t prec);
RatSeries inverse_nome_series_rat(int order);  // exact rational mode

// Series of the nome q(m) = m/16 + m^2/32 + ... computed from the
// logarithmic connection formula for K(1-m) (no reversion needed).
TruncatedSeries nome_series(int order, mpfr_prec_t prec);
RatSeries nome_series_rat(int order);

// Series in z of lambda(q(z)) where q(z) = q0 * exp(s(z)), s(0) = 0. Used by
// the uniformizing maps whose phi is lambda composed with a Moebius map of
// the half-plane.
TruncatedSeries lambda_of_exp_series(const BigComplex& q0, const TruncatedSeries& s, int order);

// Modular lambda as a function of tau (Im tau > 0), with Gamma(2)
// fundamental-domain reduction so the theta sums always converge fast.
struct LambdaTau {
    BigComplex value;
    BigComplex deriv;  // d lambda / d tau
};
LambdaTau lambda_tau(const BigComplex& tau, mpfr_prec_t prec);

}  // namespace rc::special
