#include "diffcert/zp.hpp"

#include <stdexcept>

namespace diffcert::zp {

u64 mulmod(u64 a, u64 b, u64 p) {
    return (u64)((unsigned __int128)a * b % p);
}

u64 powmod(u64 a, u64 e, u64 p) {
    u64 acc = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) acc = mulmod(acc, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return acc;
}

u64 invmod(u64 a, u64 p) { return powmod(a % p, p - 2, p); }

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    // Deterministic Miller-Rabin bases for 64-bit integers.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

std::vector<u64> dispersion_primes(std::size_t count) {
    std::vector<u64> out;
    u64 n = (1ull << 62) - 1;
    while (out.size() < count) {
        if (is_prime_u64(n)) out.push_back(n);
        n -= 2;
    }
    return out;
}

ZpPoly zp_trim(ZpPoly v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly v(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            v[i + j] = (v[i + j] + (unsigned __int128)a[i] * b[j]) % p;
        }
    }
    return zp_trim(std::move(v));
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, u64 p) {
    if (b.empty()) throw std::domain_error("zp_rem by zero");
    u64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        u64 q = mulmod(a.back(), inv, p);
        std::size_t off = a.size() - b.size();
        if (q != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                u64 sub = mulmod(q, b[j], p);
                a[off + j] = (a[off + j] + p - sub) % p;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

ZpPoly zp_monic(ZpPoly a, u64 p) {
    if (a.empty()) return a;
    u64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, u64 p) {
    while (!b.empty()) {
        ZpPoly r = zp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(std::move(a), p);
}

ZpPoly zp_shift_arg(const ZpPoly& a, u64 c, u64 p) {
    ZpPoly acc;
    for (std::size_t i = a.size(); i-- > 0;) {
        // acc = acc*(x+c) + a[i]
        ZpPoly next(acc.size() + 1, 0);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = (next[j + 1] + acc[j]) % p;
            next[j] = (next[j] + mulmod(acc[j], c, p)) % p;
        }
        next.empty() ? next.push_back(a[i] % p) : void(next[0] = (next[0] + a[i]) % p);
        acc = zp_trim(std::move(next));
    }
    return acc;
}

u64 zp_resultant(ZpPoly a, ZpPoly b, u64 p) {
    a = zp_trim(std::move(a));
    b = zp_trim(std::move(b));
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    bool negate = false;
    while (true) {
        if (b.size() == 1) {
            res = mulmod(res, powmod(b[0], a.size() - 1, p), p);
            break;
        }
        if (a.size() < b.size()) {
            if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) negate = !negate;
            std::swap(a, b);
        }
        ZpPoly r = zp_rem(a, b, p);
        if (r.empty()) return 0;
        // res(a,b) = lc(b)^(deg a - deg r) * (-1)^(deg a * deg b) * res(b,r)
        res = mulmod(res, powmod(b.back(), a.size() - r.size(), p), p);
        if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? (p - res) % p : res;
}

ZpPoly zp_interpolate(const std::vector<u64>& points, const std::vector<u64>& values, u64 p) {
    const std::size_t n = points.size();
    // Newton form: divided differences, then expansion.
    std::vector<u64> dd = values;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            u64 dx = (points[i] + p - points[i - level]) % p;
            u64 dv = (dd[i] + p - dd[i - 1]) % p;
            dd[i] = mulmod(dv, invmod(dx, p), p);
            if (i == level) break;
        }
    }
    ZpPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc*(x - points[i]) + dd[i]
        ZpPoly next(acc.size() + 1, 0);
        u64 neg = (p - points[i] % p) % p;
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] = (next[j + 1] + acc[j]) % p;
            next[j] = (next[j] + mulmod(acc[j], neg, p)) % p;
        }
        next.empty() ? next.push_back(dd[i]) : void(next[0] = (next[0] + dd[i]) % p);
        acc = zp_trim(std::move(next));
    }
    return acc;
}

namespace {

u64 splitmix(u64& state) {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// x^e mod f.
ZpPoly zp_xpow_mod(u64 e, const ZpPoly& f, u64 p) {
    ZpPoly acc{1};
    ZpPoly base{0, 1};
    base = zp_rem(base, f, p);
    while (e) {
        if (e & 1) acc = zp_rem(zp_mul(acc, base, p), f, p);
        e >>= 1;
        if (e) base = zp_rem(zp_mul(base, base, p), f, p);
    }
    return acc;
}

// Quotient by a monic divisor known to divide exactly.
ZpPoly zp_divexact_monic(ZpPoly num, const ZpPoly& d, u64 p) {
    ZpPoly quot(num.size() - d.size() + 1, 0);
    for (std::size_t i = num.size(); i-- > d.size() - 1;) {
        u64 c = num[i];
        if (c != 0) {
            std::size_t off = i - (d.size() - 1);
            quot[off] = c;
            for (std::size_t j = 0; j < d.size(); ++j) {
                u64 sub = mulmod(c, d[j], p);
                num[off + j] = (num[off + j] + p - sub) % p;
            }
        }
    }
    return zp_trim(std::move(quot));
}

// Cantor-Zassenhaus equal-degree splitting of a monic product of distinct
// linear factors.
void split_linear(const ZpPoly& f, u64 p, u64& rng, std::vector<u64>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        out.push_back((p - f[0] % p) % p);  // monic x + c -> root -c
        return;
    }
    while (true) {
        u64 delta = splitmix(rng) % p;
        ZpPoly shifted = zp_shift_arg(f, delta, p);
        ZpPoly h = zp_xpow_mod((p - 1) / 2, shifted, p);
        if (h.empty()) {
            h = ZpPoly{p - 1};
        } else {
            h[0] = (h[0] + p - 1) % p;
            h = zp_trim(std::move(h));
        }
        ZpPoly g = zp_gcd(h, shifted, p);
        if (g.size() > 1 && g.size() < shifted.size()) {
            ZpPoly rest = zp_divexact_monic(shifted, g, p);
            split_linear(zp_monic(zp_shift_arg(g, p - delta, p), p), p, rng, out);
            split_linear(zp_monic(zp_shift_arg(rest, p - delta, p), p), p, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<u64> zp_roots(const ZpPoly& a, u64 p) {
    std::vector<u64> out;
    ZpPoly f = zp_monic(zp_trim(a), p);
    if (f.size() <= 1) return out;
    // Distinct-root part: gcd(f, x^p - x).
    ZpPoly xp = zp_xpow_mod(p, f, p);
    if (xp.size() < 2) xp.resize(2, 0);
    xp[1] = (xp[1] + p - 1) % p;
    ZpPoly lin = zp_gcd(zp_trim(std::move(xp)), f, p);
    u64 rng = 0x5eed5eed5eed5eedull;
    split_linear(lin, p, rng, out);
    return out;
}

}  // namespace diffcert::zp
