#pragma once

#include "rc/bigcomplex.hpp"
#include "rc/precision.hpp"

namespace rc {

// Gamma function at context precision. Throws PoleError at 0, -1, -2, ...
BigFloat gamma(const BigFloat& x, const PrecisionContext& ctx);
BigComplex gamma(const BigComplex& z, const PrecisionContext& ctx);

}  // namespace rc
