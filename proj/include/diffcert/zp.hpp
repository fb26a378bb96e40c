#ifndef DIFFCERT_ZP_HPP
#define DIFFCERT_ZP_HPP

#include <cstdint>
#include <vector>

namespace diffcert::zp {

// Dense polynomial arithmetic over Z/p for a word-size prime p, used to
// generate dispersion candidates (which are then confirmed by exact gcds).

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p);
u64 powmod(u64 a, u64 e, u64 p);
u64 invmod(u64 a, u64 p);

bool is_prime_u64(u64 n);

// Largest primes below 2^62, in descending order.
std::vector<u64> dispersion_primes(std::size_t count);

// Coefficients lowest degree first, top coefficient nonzero.
using ZpPoly = std::vector<u64>;

ZpPoly zp_trim(ZpPoly v);
ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, u64 p);
ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, u64 p);
ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p);
ZpPoly zp_monic(ZpPoly a, u64 p);

// p(x + c) by Horner.
ZpPoly zp_shift_arg(const ZpPoly& a, u64 c, u64 p);

// Exact resultant of a and b over Z/p (0 if they share a root).
u64 zp_resultant(ZpPoly a, ZpPoly b, u64 p);

// Unique interpolating polynomial of degree < points.size() through
// (points[i], values[i]).
ZpPoly zp_interpolate(const std::vector<u64>& points, const std::vector<u64>& values, u64 p);

// All roots of a in Z/p (distinct), unsorted.
std::vector<u64> zp_roots(const ZpPoly& a, u64 p);

}  // namespace diffcert::zp

#endif
