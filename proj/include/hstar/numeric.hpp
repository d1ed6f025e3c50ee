#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hstar {

// All arithmetic in this library is exact. Integers and rationals are
// arbitrary precision; cpp_rational keeps lowest terms with positive
// denominator on its own.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// floor division (cpp_int '/' truncates toward zero)
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// fractional part, always in [0, 1)
inline Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

} // namespace hstar
