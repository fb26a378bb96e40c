#include "diffcert/ratcore.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "diffcert/diffops.hpp"
#include "diffcert/zp.hpp"

namespace diffcert {

std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly cur = p.monic();
    if (cur.degree() == 0) return out;
    // Yun's algorithm.
    Poly dcur = cur.derivative();
    Poly g = poly_gcd(cur, dcur);
    Poly c = cur / g;
    Poly d = dcur / g - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Poly pi = poly_gcd(c, d);
        c = c / pi;
        d = d / pi - c.derivative();
        if (pi.degree() > 0) out.emplace_back(pi.monic(), i);
        ++i;
    }
    return out;
}

Poly squarefree_part(const Poly& p) {
    Poly out{Scalar(1)};
    for (const auto& [factor, mult] : squarefree_decompose(p)) out *= factor;
    return out;
}

RatFun PartialFractionForm::reassemble() const {
    RatFun acc{polynomial_part};
    for (const auto& t : terms)
        acc += RatFun(t.residue, t.factor.pow((unsigned long)t.power));
    return acc;
}

PartialFractionForm partial_fractions(const RatFun& f) {
    PartialFractionForm out;
    auto [poly_part, proper] = f.split_polynomial_part();
    out.polynomial_part = poly_part;
    if (proper.is_zero()) return out;

    auto sf = squarefree_decompose(proper.den());
    // Split the proper part across the pairwise coprime moduli v_i^{m_i},
    // peeling one modulus off at a time via Bezout cofactors.
    Poly r = proper.num();
    Poly rest_den = proper.den();
    for (std::size_t i = 0; i < sf.size(); ++i) {
        const auto& [v, mult] = sf[i];
        Poly modulus = v.pow((unsigned long)mult);
        Poly numerator_i;
        if (i + 1 == sf.size()) {
            numerator_i = r;
            assert(numerator_i.degree() < modulus.degree());
        } else {
            Poly others = rest_den / modulus;
            auto [g, s, t] = poly_xgcd(others, modulus);
            assert(g.is_one());
            // r/(modulus*others) = (r*s mod modulus)/modulus + carry/others
            Poly rs = r * s;
            auto [e, digit] = Poly::divrem(rs, modulus);
            numerator_i = digit;
            r = r * t + e * others;
            rest_den = others;
        }
        // Expand numerator_i / v^mult into v-adic digits.
        Poly rem = numerator_i;
        for (int power = mult; power >= 1; --power) {
            auto [quot, digit] = Poly::divrem(rem, v);
            if (!digit.is_zero()) out.terms.push_back({v, power, digit});
            rem = quot;
        }
        assert(rem.is_zero());
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const PolarTerm& a, const PolarTerm& b) {
        if (int c = cmp(a.factor, b.factor); c != 0) return c < 0;
        return a.power < b.power;
    });
    assert(out.reassemble() == f);
    return out;
}

namespace {

// Exact resultant over a field.
template <typename T>
T poly_resultant(Polynomial<T> a, Polynomial<T> b) {
    if (a.is_zero() || b.is_zero()) return T(0);
    T res(1);
    bool negate = false;
    while (true) {
        if (b.degree() == 0) {
            T lead = b.leading();
            for (int i = 0; i < a.degree(); ++i) res *= lead;
            break;
        }
        if (a.degree() < b.degree()) {
            if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
            std::swap(a, b);
        }
        Polynomial<T> r = Polynomial<T>::divrem(a, b).second;
        if (r.is_zero()) return T(0);
        T lead = b.leading();
        for (int i = 0; i < a.degree() - r.degree(); ++i) res *= lead;
        if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? -res : res;
}

std::vector<Rat> numeric_coeffs(const Poly& p, const char* what) {
    std::vector<Rat> out;
    out.reserve((std::size_t)p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        const Scalar& c = p.coeff((std::size_t)i);
        if (!is_number(c))
            throw std::domain_error(std::string(what) + " requires numeric coefficients");
        out.push_back(c.constant_value());
    }
    return out;
}

// 1 + max |c_i / c_top| bounds the absolute value of every complex root.
Rat cauchy_upper(const std::vector<Rat>& c) {
    Rat top = rat_abs(c.back());
    Rat m(0);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, rat_abs(c[i]) / top);
    return Rat(1) + m;
}

Rat cauchy_lower(const std::vector<Rat>& c) {
    std::vector<Rat> rev(c.rbegin(), c.rend());
    return Rat(1) / cauchy_upper(rev);
}

bool gcd_nontrivial(const Poly& a, const Poly& b) {
    return poly_gcd(a, b).degree() > 0;
}

std::set<long> dispersion_shift(const Poly& p, const Poly& r) {
    Poly P = squarefree_part(p);
    Poly R = squarefree_part(r);
    std::set<long> out;
    if (P.degree() == 0 || R.degree() == 0) return out;

    std::vector<Rat> pc = numeric_coeffs(P, "shift dispersion");
    std::vector<Rat> rc = numeric_coeffs(R, "shift dispersion");

    // All root differences satisfy |n| <= bound (Cauchy).
    Int bound;
    {
        Rat b = cauchy_upper(pc) + cauchy_upper(rc);
        bound = rat_num(b) / rat_den(b) + 1;
    }

    auto clear_den = [](const std::vector<Rat>& c) {
        Int l(1);
        for (const auto& x : c) l = int_lcm(l, rat_den(x));
        std::vector<Int> out_c;
        out_c.reserve(c.size());
        for (const auto& x : c) out_c.push_back(rat_num(x) * (l / rat_den(x)));
        return out_c;
    };
    std::vector<Int> ip = clear_den(pc), ir = clear_den(rc);

    static const std::vector<zp::u64> primes = zp::dispersion_primes(8);
    const std::size_t interp_points = (std::size_t)(P.degree() * R.degree()) + 1;

    for (zp::u64 prime : primes) {
        Int pm(prime);
        if (ip.back() % pm == 0 || ir.back() % pm == 0) continue;
        auto reduce_mod = [&](const std::vector<Int>& v) {
            zp::ZpPoly out_v(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) {
                Int m = v[i] % pm;
                if (m < 0) m += pm;
                out_v[i] = m.convert_to<zp::u64>();
            }
            return zp::zp_trim(std::move(out_v));
        };
        zp::ZpPoly pbar = reduce_mod(ip), rbar = reduce_mod(ir);

        // D(n) = Res_x(P(x), R(x+n)) vanishes at every dispersion value, and
        // the mod-prime resultant of pbar, rbar equals D(n) mod prime
        // (leading coefficients stay nonzero). Candidates are confirmed by
        // an exact gcd, so a stray zero mod prime is harmless.
        if (bound <= Int(4 * interp_points + 64)) {
            long b = bound.convert_to<long>();
            for (long n = -b; n <= b; ++n) {
                zp::u64 shift = n >= 0 ? (zp::u64)n % prime : prime - (zp::u64)(-n) % prime;
                if (zp::zp_resultant(pbar, zp::zp_shift_arg(rbar, shift, prime), prime) == 0 &&
                    gcd_nontrivial(P, R.shift_arg(Scalar(n))))
                    out.insert(n);
            }
            return out;
        }

        // Large root bound: recover D mod prime by interpolation and lift
        // its roots.
        std::vector<zp::u64> points(interp_points), values(interp_points);
        for (std::size_t y = 0; y < interp_points; ++y) {
            points[y] = (zp::u64)y;
            values[y] = zp::zp_resultant(pbar, zp::zp_shift_arg(rbar, (zp::u64)y, prime), prime);
        }
        zp::ZpPoly dbar = zp::zp_interpolate(points, values, prime);
        if (dbar.empty()) continue;  // prime divides the content of D; next prime

        for (zp::u64 root : zp::zp_roots(dbar, prime)) {
            Int base = root > prime / 2 ? Int(root) - Int(prime) : Int(root);
            for (Int n = base; n >= -bound; n -= Int(prime)) {
                if (n > bound) continue;
                if (gcd_nontrivial(P, R.shift_arg(Scalar(Rat(n)))))
                    out.insert(n.convert_to<long>());
            }
            for (Int n = base + Int(prime); n <= bound; n += Int(prime)) {
                if (n < -bound) continue;
                if (gcd_nontrivial(P, R.shift_arg(Scalar(Rat(n)))))
                    out.insert(n.convert_to<long>());
            }
        }
        return out;
    }
    throw std::runtime_error("dispersion: no usable prime");
}

std::set<long> dispersion_q(const Poly& p, const Poly& r, const DifferenceOperator& op) {
    std::set<long> out;
    Poly p2 = p.shift_down(p.valuation());
    Poly r2 = r.shift_down(r.valuation());
    Poly P = squarefree_part(p2);
    Poly R = squarefree_part(r2);
    if (P.degree() == 0 || R.degree() == 0) return out;

    const ConstField& field = op.field();
    auto verify = [&](long n) {
        if (gcd_nontrivial(P, R.scale_arg(field.q_pow(n)))) out.insert(n);
    };

    if (!field.is_symbolic()) {
        // Common root needs q^n = beta/alpha with alpha a root of P and
        // beta a root of R; exact magnitude bounds pin down the n range.
        std::vector<Rat> pc = numeric_coeffs(P, "q dispersion");
        std::vector<Rat> rc = numeric_coeffs(R, "q dispersion");
        Rat lo = cauchy_lower(rc) / cauchy_upper(pc);
        Rat hi = cauchy_upper(rc) / cauchy_lower(pc);
        Rat aq = rat_abs(field.numeric_q_value());
        bool growing = aq > 1;
        Rat step = growing ? aq : Rat(1) / aq;
        // |q|^n = step^(sign * n); collect all exponents e with step^e in [lo, hi].
        long e = 0;
        Rat t(1);
        while (t > lo) {
            --e;
            t /= step;
        }
        for (; t <= hi; ++e, t *= step) {
            if (t < lo) continue;
            verify(growing ? e : -e);
        }
        return out;
    }

    // Symbolic q: E(t) = Res_x(P(x), R(t x)) has the candidate q^n among its
    // roots; a vanishing sum of c_i(q) q^{n i} forces two exponents to tie,
    // so candidates come from q-degree (and q-valuation) differences.
    const std::size_t interp_points = (std::size_t)(P.degree() * R.degree()) + 1;
    std::vector<Scalar> points(interp_points), values(interp_points);
    for (std::size_t j = 0; j < interp_points; ++j) {
        points[j] = Scalar((long)(j + 1));
        values[j] = poly_resultant(P, R.scale_arg(points[j]));
    }
    // Newton interpolation over the scalar field.
    std::vector<Scalar> dd = values;
    for (std::size_t level = 1; level < interp_points; ++level)
        for (std::size_t i = interp_points - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level]);
            if (i == level) break;
        }
    Polynomial<Scalar> e_poly;
    for (std::size_t i = interp_points; i-- > 0;) {
        e_poly = e_poly * Polynomial<Scalar>::from_coeffs({-points[i], Scalar(1)}) +
                 Polynomial<Scalar>(dd[i]);
    }

    auto qdeg = [](const Scalar& s) { return (long)s.num().degree() - (long)s.den().degree(); };
    auto qval = [](const Scalar& s) {
        return (long)s.num().valuation() - (long)s.den().valuation();
    };
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i <= (std::size_t)std::max(e_poly.degree(), 0); ++i)
        if (!(e_poly.coeff(i) == Scalar(0))) support.push_back(i);
    std::set<long> candidates;
    for (std::size_t a = 0; a < support.size(); ++a)
        for (std::size_t b = a + 1; b < support.size(); ++b) {
            std::size_t i = support[a], j = support[b];
            const Scalar &ci = e_poly.coeff(i), &cj = e_poly.coeff(j);
            long span = (long)(j - i);
            long dd1 = qdeg(ci) - qdeg(cj);
            if (dd1 % span == 0) candidates.insert(dd1 / span);
            long dd2 = qval(ci) - qval(cj);
            if (dd2 % span == 0) candidates.insert(dd2 / span);
        }
    for (long n : candidates) verify(n);
    return out;
}

}  // namespace

std::set<long> dispersion_set(const Poly& p, const Poly& r, const DifferenceOperator& op) {
    if (p.is_zero() || r.is_zero())
        throw std::invalid_argument("dispersion of the zero polynomial");
    if (op.is_shift()) return dispersion_shift(p, r);
    return dispersion_q(p, r, op);
}

}  // namespace diffcert
