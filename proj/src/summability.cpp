#include "diffcert/summability.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace diffcert {

namespace {

Poly strip_x(const Poly& p) { return p.shift_down(p.valuation()); }

bool is_x(const Poly& p) { return p == Poly::variable(); }

// sigma(g) - g
RatFun sigma_minus_one(const RatFun& g, const DifferenceOperator& op) {
    return apply_sigma(g, op, 1) - g;
}

}  // namespace

std::vector<std::pair<int, Poly>> polar_digits(const RatFun& f, const Poly& w) {
    std::vector<std::pair<int, Poly>> out;
    if (w.degree() < 1) throw std::invalid_argument("polar_digits needs a nonconstant factor");
    Poly rest = f.den();
    int mult = 0;
    while (true) {
        auto [quot, rem] = Poly::divrem(rest, w);
        if (!rem.is_zero()) break;
        rest = quot;
        ++mult;
    }
    if (mult == 0) return out;
    Poly modulus = w.pow((unsigned long)mult);
    auto [g, s, t] = poly_xgcd(rest, modulus);
    assert(g.is_one());
    (void)t;
    // f = N/(modulus*rest); polar numerator at w is N*s mod modulus.
    Poly digits_num = (f.num() * s) % modulus;
    for (int power = mult; power >= 1; --power) {
        auto [quot, digit] = Poly::divrem(digits_num, w);
        if (!digit.is_zero()) out.emplace_back(power, digit);
        digits_num = quot;
    }
    assert(digits_num.is_zero());
    return out;
}

ReducedForm reduce(const RatFun& f, const DifferenceOperator& op) {
    ReducedForm rf;
    rf.input = f;
    rf.certificate = RatFun();
    rf.laurent_obstruction = Scalar(0);
    RatFun r = f;

    Poly w0 = f.den();
    if (op.is_q()) w0 = strip_x(w0);
    if (w0.degree() > 0) {
        Poly w_sf = squarefree_part(w0);
        std::set<long> disp = dispersion_set(w_sf, w_sf, op);
        // Walk the gaps from the widest down; every move sends a polar part
        // onto an already-present position nearer the orbit representative,
        // so each gap is cleared exactly once.
        for (auto it = disp.rbegin(); it != disp.rend(); ++it) {
            long n = *it;
            if (n <= 0) break;
            Poly cur = r.den();
            if (op.is_q()) cur = strip_x(cur);
            if (cur.degree() == 0) break;
            Poly cur_sf = squarefree_part(cur);
            Poly h = poly_gcd(cur_sf, apply_sigma(cur_sf, op, n).monic());
            if (h.degree() == 0) continue;
            for (const auto& [power, digit] : polar_digits(r, h)) {
                RatFun term(digit, h.pow((unsigned long)power));
                RatFun slid = apply_sigma(term, op, -n);
                RatFun moved;
                for (long k = 0; k < n; ++k) moved += apply_sigma(slid, op, k);
                r = r - term + slid;
                rf.certificate += moved;
            }
        }
        assert(sigma_minus_one(rf.certificate, op) + r == f);
    }

    rf.remainder = r;
    PartialFractionForm pf = partial_fractions(r);
    if (op.is_shift()) {
        rf.polynomial_remainder = pf.polynomial_part;
    } else {
        rf.laurent_obstruction = pf.polynomial_part.constant_term();
    }
    std::map<std::size_t, OrbitObstruction> grouped;
    std::vector<Poly> seen;
    for (const auto& term : pf.terms) {
        if (op.is_q() && is_x(term.factor)) continue;  // Laurent side
        std::size_t idx = seen.size();
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (seen[i] == term.factor) {
                idx = i;
                break;
            }
        if (idx == seen.size()) {
            seen.push_back(term.factor);
            grouped[idx].representative = term.factor;
        }
        grouped[idx].entries.emplace_back(term.power, term.residue);
    }
    for (auto& [idx, orb] : grouped) rf.orbit_obstructions.push_back(std::move(orb));

#ifndef NDEBUG
    if (!rf.orbit_obstructions.empty()) {
        // Each surviving polar factor sits alone in its orbit.
        Poly rem_den = r.den();
        if (op.is_q()) rem_den = strip_x(rem_den);
        if (rem_den.degree() > 0) {
            Poly sf = squarefree_part(rem_den);
            for (long n : dispersion_set(sf, sf, op)) assert(n == 0);
        }
    }
#endif
    return rf;
}

Poly shift_antidifference(const Poly& p) {
    if (p.is_zero()) return p;
    const int d = p.degree();
    // Pascal triangle of scalar binomials up to d+1.
    std::vector<std::vector<Scalar>> binom((std::size_t)d + 2);
    for (std::size_t n = 0; n < binom.size(); ++n) {
        binom[n].assign(n + 1, Scalar(1));
        for (std::size_t k = 1; k < n; ++k)
            binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    // G = sum g_k x^k solves sum_{k>j} g_k C(k,j) = p_j, solved top down.
    std::vector<Scalar> g((std::size_t)d + 2, Scalar(0));
    for (int j = d; j >= 0; --j) {
        Scalar rhs = p.coeff((std::size_t)j);
        for (int k = j + 2; k <= d + 1; ++k)
            rhs -= g[(std::size_t)k] * binom[(std::size_t)k][(std::size_t)j];
        g[(std::size_t)(j + 1)] = rhs / binom[(std::size_t)(j + 1)][(std::size_t)j];
    }
    Poly out = Poly::from_coeffs(std::move(g));
    assert(out.shift_arg(Scalar(1)) - out == p);
    return out;
}

std::optional<RatFun> is_summable(const RatFun& f, const DifferenceOperator& op) {
    ReducedForm rf = reduce(f, op);
    if (rf.has_polar_obstruction()) return std::nullopt;
    RatFun g = rf.certificate;
    if (op.is_shift()) {
        g += RatFun(shift_antidifference(rf.polynomial_remainder));
    } else {
        PartialFractionForm pf = partial_fractions(rf.remainder);
        if (!(pf.polynomial_part.constant_term() == Scalar(0))) return std::nullopt;
        const ConstField& field = op.field();
        for (int i = 1; i <= pf.polynomial_part.degree(); ++i) {
            Scalar c = pf.polynomial_part.coeff((std::size_t)i);
            if (c == Scalar(0)) continue;
            g += RatFun(Poly::monomial(c / field.qn_minus_one(i), (std::size_t)i));
        }
        for (const auto& term : pf.terms) {
            assert(is_x(term.factor));
            Scalar c = term.residue.constant_term();
            g += RatFun(Poly(c / field.qn_minus_one(-term.power)),
                        Poly::monomial(Scalar(1), (std::size_t)term.power));
        }
    }
    assert(sigma_minus_one(g, op) == f);
    return g;
}

ObstructionBasis ObstructionBasis::build(const std::vector<RatFun>& inputs,
                                         const DifferenceOperator& op, int extra_power) {
    std::vector<Poly> factors;
    for (const RatFun& f : inputs) {
        Poly den = f.den();
        if (op.is_q()) den = strip_x(den);
        if (den.degree() > 0) factors.push_back(den);
    }
    ObstructionBasis basis(OrbitAtlas::build(factors, op));

    std::vector<int> power(basis.atlas_.classes().size(), 0);
    for (const RatFun& f : inputs) {
        Poly den = f.den();
        if (op.is_q()) den = strip_x(den);
        if (den.degree() == 0) continue;
        for (const auto& [v, mult] : squarefree_decompose(den))
            for (const auto& piece : basis.atlas_.locate(v))
                power[piece.class_index] = std::max(power[piece.class_index], mult);
    }

    basis.laurent_slot_ = op.is_q();
    std::size_t offset = 0;
    for (std::size_t ci = 0; ci < power.size(); ++ci) {
        Slot slot{basis.atlas_.classes()[ci].representative, power[ci] + extra_power};
        basis.offsets_.push_back(offset);
        offset += (std::size_t)slot.representative.degree() * (std::size_t)slot.max_power;
        basis.slots_.push_back(std::move(slot));
    }
    basis.dimension_ = offset + (basis.laurent_slot_ ? 1 : 0);
    return basis;
}

std::vector<Scalar> obstruction_vector(const RatFun& f, const ObstructionBasis& basis) {
    const DifferenceOperator& op = basis.op();
    std::vector<Scalar> coords(basis.dimension(), Scalar(0));

    Poly den = f.den();
    if (op.is_q()) den = strip_x(den);
    if (den.degree() > 0) {
        for (const auto& [v, mult] : squarefree_decompose(den)) {
            for (const auto& piece : basis.atlas().locate(v)) {
                const Slot& slot = basis.slots()[piece.class_index];
                const Poly& rep = slot.representative;
                Poly back_raw = apply_sigma(piece.factor, op, -piece.offset);
                Scalar lead = back_raw.leading();
                Poly back = back_raw.monic();
                assert(back.divides(rep));
                Poly cofactor = rep / back;
                // CRT embedding of residues mod `back` into residues mod rep.
                Poly embed{Scalar(1)};
                if (cofactor.degree() > 0) {
                    auto [g, s, t] = poly_xgcd(back, cofactor);
                    assert(g.is_one());
                    (void)s;
                    embed = (t * cofactor) % rep;
                }
                Scalar lead_power(1);
                for (const auto& [power, digit] : polar_digits(f, piece.factor)) {
                    if (power > slot.max_power)
                        throw std::invalid_argument(
                            "obstruction basis power budget exceeded by the input");
                    // digit/factor^power == sigma^{-offset}(digit) / (lead * back)^power
                    Poly moved = apply_sigma(digit, op, -piece.offset);
                    Scalar scale = Scalar(1) / lead.pow(power);
                    Poly contribution = ((moved * scale) * embed) % rep;
                    std::size_t base = basis.slot_offset(piece.class_index) +
                                       (std::size_t)(power - 1) * (std::size_t)rep.degree();
                    for (int k = 0; k < rep.degree(); ++k)
                        coords[base + (std::size_t)k] += contribution.coeff((std::size_t)k);
                }
                (void)lead_power;
            }
        }
    }
    if (basis.has_laurent_slot()) {
        auto [poly_part, proper] = f.split_polynomial_part();
        (void)proper;
        coords[basis.dimension() - 1] = poly_part.constant_term();
    }
    return coords;
}

}  // namespace diffcert
