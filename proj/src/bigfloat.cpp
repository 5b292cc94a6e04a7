#include "rc/bigfloat.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "rc/errors.hpp"

namespace rc {

namespace detail {
mpfr_prec_t& thread_precision() {
    thread_local mpfr_prec_t prec = 200;  // ~ 59 decimal digits
    return prec;
}
}  // namespace detail

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r = BigFloat::zero(prec);
    if (mpfr_set_str(r.raw(), s.c_str(), 10, MPFR_RNDN) != 0)
        throw ParseError("not a decimal number: '" + s + "'");
    return r;
}

std::string BigFloat::to_string(int digits) const {
    if (digits < 1) digits = 1;
    char* buf = nullptr;
    // %Re prints d.ddd...e±x with the requested number of fractional digits,
    // correctly rounded (nearest-even at ties).
    if (mpfr_asprintf(&buf, "%.*Re", digits - 1, v_) < 0)
        throw Error("mpfr_asprintf failed");
    std::string out(buf);
    mpfr_free_str(buf);
    // wire format carries a compact exponent: "e0", "e-3", "e12"
    auto epos = out.find('e');
    if (epos != std::string::npos) {
        std::string mant = out.substr(0, epos);
        long ex = std::strtol(out.c_str() + epos + 1, nullptr, 10);
        out = mant + "e" + std::to_string(ex);
    }
    return out;
}

}  // namespace rc
