#pragma once
// Exact scalar types shared across the engine.  All integer arithmetic is
// arbitrary precision; rationals are always kept canonical.

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace lnd {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline Int int_from_string(const std::string& s) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    return v;
}

// Renders "p" for integral values, "p/q" otherwise.
inline std::string to_decimal(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    Rat v;
    if (mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    v.canonicalize();
    return v;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    Int v(n);
    return mpz_probab_prime_p(v.get_mpz_t(), 30) != 0;
}

}  // namespace lnd
