#include "diffcert/multiplicative.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "diffcert/lattice.hpp"

namespace diffcert {

namespace {

// Normalize a nonzero g so that its numerator is monic; sigma(g)/g is
// unchanged and certificates become byte-stable.
RatFun normalize_quotient_witness(const RatFun& g) {
    return g * RatFun(Scalar(1) / g.num().leading());
}

}  // namespace

ProductForm gp_normal_form(const RatFun& a, const DifferenceOperator& op) {
    if (a.is_zero()) throw std::invalid_argument("normal form of zero");

    Poly num = a.num(), den = a.den();
    long monomial = 0;
    if (op.is_q()) {
        long vn = (long)num.valuation(), vd = (long)den.valuation();
        monomial = vn - vd;
        num = num.shift_down((std::size_t)vn);
        den = den.shift_down((std::size_t)vd);
    }

    Poly u = num.monic(), v = den.monic();
    RatFun g{Scalar(1)};
    while (true) {
        std::set<long> disp = dispersion_set(u, v, op);
        if (disp.empty()) break;
        long j = 0;
        for (long d : disp)
            if (std::abs(d) > std::abs(j) || (std::abs(d) == std::abs(j) && d > j)) j = d;
        Poly h = poly_gcd(u, apply_sigma(v, op, j).monic());
        assert(h.degree() > 0);
        u = (u / h).monic();
        Poly back = apply_sigma(h, op, -j);
        v = (v / back).monic();
        // h / sigma^{-j}(h) == sigma(w)/w
        RatFun w{Scalar(1)};
        if (j > 0)
            for (long m = 1; m <= j; ++m) w *= RatFun(apply_sigma(h, op, -m));
        else
            for (long m = 0; m < -j; ++m) w /= RatFun(apply_sigma(h, op, m));
        g *= w;
    }

    ProductForm out;
    out.monomial_exp = monomial;
    out.kernel_num = u;
    out.kernel_den = v;
    out.telescoped = g.is_zero() ? g : normalize_quotient_witness(g);
    RatFun reassembled = RatFun(Poly::variable()).pow(monomial) *
                         (apply_sigma(out.telescoped, op, 1) / out.telescoped) *
                         RatFun(out.kernel_num, Poly{Scalar(1)}) / RatFun(out.kernel_den);
    RatFun c = a / reassembled;
    if (!c.is_constant()) throw std::logic_error("normal form constant is not constant");
    out.constant = c.constant_value();
    assert(dispersion_set(out.kernel_num, out.kernel_den, op).empty());
    assert(!op.is_q() || (out.kernel_num.valuation() == 0 && out.kernel_den.valuation() == 0));
    return out;
}

std::optional<ProductCertificate> product_decompose(const RatFun& a, const DifferenceOperator& op) {
    ProductForm form = gp_normal_form(a, op);
    if (!form.kernel_trivial()) return std::nullopt;
    ProductCertificate cert{form.constant, form.monomial_exp, form.telescoped};
    assert(RatFun(Poly(cert.c)) * RatFun(Poly::variable()).pow(cert.n) *
               apply_sigma(cert.g, op, 1) / cert.g ==
           a);
    return cert;
}

std::optional<long> q_power_exponent(const Scalar& s, const ConstField& field) {
    if (s.is_zero()) return std::nullopt;
    if (field.is_symbolic()) {
        const QPoly &num = s.num(), &den = s.den();
        if (num.valuation() != (std::size_t)num.degree() ||
            den.valuation() != (std::size_t)den.degree())
            return std::nullopt;
        if (!(num.leading() == Rat(1)) || !(den.leading() == Rat(1))) return std::nullopt;
        return (long)num.degree() - (long)den.degree();
    }
    if (!is_number(s)) return std::nullopt;
    Rat v = to_number(s);
    Rat q = field.numeric_q_value();
    if (v == 1) return 0;
    Rat av = rat_abs(v), aq = rat_abs(q);
    if (av == 1) return std::nullopt;  // |q|^m == 1 only for m == 0
    // Walk |q|^m monotonically toward |v|; stop on hit or overshoot.
    const bool t_up = av > 1;
    const long step = ((aq > 1) == t_up) ? 1 : -1;
    long m = 0;
    Rat t(1);
    while (true) {
        m += step;
        t = step == 1 ? Rat(t * aq) : Rat(t / aq);
        if (t == av) break;
        if (t_up ? (t > av) : (t < av)) return std::nullopt;
    }
    return rat_pow(q, m) == v ? std::optional<long>(m) : std::nullopt;
}

std::optional<RatFun> sigma_quotient_strict(const RatFun& a, const DifferenceOperator& op) {
    auto cert = product_decompose(a, op);
    if (!cert) return std::nullopt;
    if (cert->n != 0) return std::nullopt;
    RatFun g = cert->g;
    if (op.is_shift()) {
        if (!(cert->c == Scalar(1))) return std::nullopt;
    } else {
        auto m = q_power_exponent(cert->c, op.field());
        if (!m) return std::nullopt;
        g = g * RatFun(Poly::variable()).pow(*m);
    }
    assert(apply_sigma(g, op, 1) / g == a);
    return normalize_quotient_witness(g);
}

std::optional<long> minimal_torsion(const RatFun& a, const DifferenceOperator& op) {
    auto cert = product_decompose(a, op);
    if (!cert) return std::nullopt;          // a nontrivial kernel never becomes torsion
    if (cert->n != 0) return std::nullopt;   // x^n survives in every power
    const Scalar& z = cert->c;

    if (z == Scalar(1)) return 1;
    if (op.is_shift()) return z == Scalar(-1) ? std::optional<long>(2) : std::nullopt;

    const ConstField& field = op.field();
    if (field.is_symbolic()) {
        // z^n must be an exact q-power: z itself must be +-q^j.
        if (q_power_exponent(z, field)) return 1;
        if (q_power_exponent(-z, field)) return 2;
        return std::nullopt;
    }

    Rat zv = to_number(z);
    Rat q = field.numeric_q_value();
    if (zv == -1) return 2;  // (-1)^2 = q^0
    // |z|^n = |q|^m: compare exponent vectors over a coprime basis.
    std::vector<Int> gens = {int_abs(rat_num(zv)), int_abs(rat_den(zv)),
                             int_abs(rat_num(q)), int_abs(rat_den(q))};
    std::vector<Int> basis = coprime_basis(gens);
    std::vector<Int> alpha = factor_exponents(int_abs(rat_num(zv)), basis);
    std::vector<Int> beta = factor_exponents(int_abs(rat_num(q)), basis);
    {
        std::vector<Int> ad = factor_exponents(int_abs(rat_den(zv)), basis);
        std::vector<Int> bd = factor_exponents(int_abs(rat_den(q)), basis);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            alpha[i] -= ad[i];
            beta[i] -= bd[i];
        }
    }
    // n*alpha == m*beta componentwise with a single ratio m/n.
    Int p(0), s(0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (beta[i] == 0) {
            if (alpha[i] != 0) return std::nullopt;
            continue;
        }
        if (alpha[i] == 0) {
            if (p == 0 && s == 0) {
                p = 0;
                s = 1;
                continue;
            }
            if (p != 0) return std::nullopt;
            continue;
        }
        Int g = int_gcd(int_abs(alpha[i]), int_abs(beta[i]));
        Int np = alpha[i] / g, ns = beta[i] / g;
        if (ns < 0) {
            np = -np;
            ns = -ns;
        }
        if (s == 0 && p == 0) {
            p = np;
            s = ns;
        } else if (np * s != p * ns) {
            return std::nullopt;
        }
    }
    if (s == 0) {
        // |z| == 1 with z != +-1 cannot happen over Q.
        return std::nullopt;
    }
    long n = s.convert_to<long>();
    long m = p.convert_to<long>();
    if (rat_pow(zv, n) == rat_pow(q, m)) return n;
    if (rat_pow(zv, 2 * n) == rat_pow(q, 2 * m)) return 2 * n;
    return std::nullopt;
}

}  // namespace diffcert
