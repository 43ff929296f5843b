#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "vca/errors.hpp"

namespace vca {

// Exact arbitrary-precision integer. All counting results (Hilbert
// function values, h-vector entries, multiplicities) use this type so
// no computation ever overflows or rounds.
using BigInt = mpz_class;

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// n! for n >= 0.
inline BigInt factorial(long n) {
    if (n < 0) throw DomainError("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

// True when v fits in a signed 64-bit integer (used when serializing:
// small values stay JSON numbers, big values become decimal strings).
inline bool fits_int64(const BigInt& v) {
    return v.fits_slong_p() != 0;
}

inline std::int64_t to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw DomainError("to_int64: value out of range");
    return static_cast<std::int64_t>(v.get_si());
}

} // namespace vca
