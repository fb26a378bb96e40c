#ifndef DIFFCERT_RATIONAL_HPP
#define DIFFCERT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace diffcert {

namespace mp = boost::multiprecision;

// Exact arbitrary-precision integers and rationals (GMP-backed, always
// canonical: reduced fraction, positive denominator).
using Int = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

inline Int rat_num(const Rat& r) { return Int(numerator(r)); }
inline Int rat_den(const Rat& r) { return Int(denominator(r)); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& n) { return n.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int int_gcd(const Int& a, const Int& b) { return gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return lcm(a, b); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = e > 0 ? (unsigned long)e : (unsigned long)(-e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

// Total order used for canonical sorting of symbolic objects.
inline int cmp(const Rat& a, const Rat& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

inline std::string to_string(const Rat& r) { return r.str(); }
inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace diffcert

#endif
