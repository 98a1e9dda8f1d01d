#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace koszul {

// Exact integer coefficients everywhere; no rationals ever arise in the
// algebra itself (determinants, permanents, polarizations and commutators
// all have integer structure constants).
using Int = boost::multiprecision::cpp_int;

/// (-1)^k as an Int-friendly factor.
inline int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

/// C(m,2) = m(m-1)/2, the column-reversal exponent.
inline long long choose2(long long m) { return m * (m - 1) / 2; }

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

}  // namespace koszul
