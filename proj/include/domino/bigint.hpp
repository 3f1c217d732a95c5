#pragma once

#include <gmpxx.h>

#include <string>

namespace domino {

// All counting paths go through exact arbitrary-precision arithmetic.
using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& value) { return value.get_str(); }

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace domino
