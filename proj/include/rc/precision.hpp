#pragma once

#include <mpfr.h>

#include "rc/errors.hpp"

namespace rc {

// Working-precision context. `digits` is the number of decimal digits at
// which results are reported; operations internally carry digits+guard_digits.
struct PrecisionContext {
    int digits = 50;
    int guard_digits = 10;

    mpfr_prec_t bits() const {
        // 2^bits >= 10^(digits+guard); +4 so the last decimal is clean.
        return static_cast<mpfr_prec_t>((digits + guard_digits) * 3.3219280948873623 + 4);
    }
};

inline PrecisionContext with_precision(int digits) {
    if (digits < 15) throw RangeError("with_precision: digits must be >= 15");
    PrecisionContext ctx;
    ctx.digits = digits;
    int tenth = (digits + 9) / 10;
    ctx.guard_digits = tenth > 10 ? tenth : 10;
    return ctx;
}

namespace detail {
mpfr_prec_t& thread_precision();
}

// Default precision (bits) used for values constructed without an explicit
// precision, e.g. from double literals. Thread-local.
inline mpfr_prec_t current_precision() { return detail::thread_precision(); }
inline void set_current_precision(mpfr_prec_t bits) { detail::thread_precision() = bits; }

// RAII guard installing a working precision for the current thread.
class WorkingPrecision {
  public:
    explicit WorkingPrecision(mpfr_prec_t bits) : old_(current_precision()) {
        set_current_precision(bits);
    }
    explicit WorkingPrecision(const PrecisionContext& ctx) : WorkingPrecision(ctx.bits()) {}
    ~WorkingPrecision() { set_current_precision(old_); }
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  private:
    mpfr_prec_t old_;
};

}  // namespace rc
