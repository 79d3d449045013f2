#pragma once

#include <gmpxx.h>

#include <string>

namespace qpc {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const BigRational& r) { return sgn(r) == 0; }

// "3", "-3", "3/2"
inline std::string rational_str(const BigRational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline BigRational parse_rational(const std::string& s) {
    BigRational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline BigInt int_pow(BigInt base, unsigned exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

}  // namespace qpc
