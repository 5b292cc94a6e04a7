#pragma once

#include <gmpxx.h>

#include <vector>

#include "rc/series.hpp"

namespace rc {

// Exact rational series used for "rational mode": low-order exact expansions
// (series file ingestion with p/q entries, exact coefficient checks) and the
// Painleve I recurrence, where exactness is cheap and removes rounding noise.
using RatSeries = std::vector<mpq_class>;

RatSeries rat_mul(const RatSeries& a, const RatSeries& b, int n_out);
RatSeries rat_div(const RatSeries& a, const RatSeries& b, int n_out);  // b[0] != 0
RatSeries rat_compose(const RatSeries& outer, const RatSeries& inner, int n_out);

BigFloat to_bigfloat(const mpq_class& q, mpfr_prec_t prec);
TruncatedSeries to_series(const RatSeries& a, mpfr_prec_t prec);

}  // namespace rc
