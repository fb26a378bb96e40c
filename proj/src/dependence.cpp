#include "diffcert/dependence.hpp"

#include <cassert>
#include <stdexcept>

#include "diffcert/multiplicative.hpp"

namespace diffcert {

GroupDescriptor GroupDescriptor::gm() {
    GroupDescriptor g;
    g.kind = Kind::Gm;
    return g;
}

GroupDescriptor GroupDescriptor::ga() {
    GroupDescriptor g;
    g.kind = Kind::Ga;
    return g;
}

GroupDescriptor GroupDescriptor::cyclic(long n) {
    if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
    if (n == 1) return trivial();
    GroupDescriptor g;
    g.kind = Kind::CyclicMu;
    g.mu_order = n;
    return g;
}

GroupDescriptor GroupDescriptor::subtorus(long ambient, IntMat lattice) {
    GroupDescriptor g;
    g.kind = Kind::SubtorusOfGm;
    g.ambient = ambient;
    g.lattice = hermite_rows(std::move(lattice));
    return g;
}

GroupDescriptor GroupDescriptor::subspace(long ambient, ScalarMat relations) {
    GroupDescriptor g;
    g.kind = Kind::SubspaceOfGa;
    g.ambient = ambient;
    g.relations = std::move(relations);
    return g;
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
    GroupDescriptor g;
    g.kind = Kind::Product;
    g.factors = std::move(factors);
    return g;
}

long GroupDescriptor::dimension() const {
    switch (kind) {
        case Kind::Trivial: return 0;
        case Kind::Gm:
        case Kind::Ga: return 1;
        case Kind::CyclicMu: return 0;
        case Kind::SubtorusOfGm: return ambient - (long)lattice.size();
        case Kind::SubspaceOfGa: return ambient - (long)relations.size();
        case Kind::Product: {
            long d = 0;
            for (const auto& f : factors) d += f.dimension();
            return d;
        }
    }
    return 0;
}

std::string GroupDescriptor::name() const {
    switch (kind) {
        case Kind::Trivial: return "trivial";
        case Kind::Gm: return "Gm";
        case Kind::Ga: return "Ga";
        case Kind::CyclicMu: return "mu(" + std::to_string(mu_order) + ")";
        case Kind::SubtorusOfGm:
            return "subtorus(Gm^" + std::to_string(ambient) + ",dim=" +
                   std::to_string(dimension()) + ")";
        case Kind::SubspaceOfGa:
            return "subspace(Ga^" + std::to_string(ambient) + ",dim=" +
                   std::to_string(dimension()) + ")";
        case Kind::Product: {
            std::string s;
            for (const auto& f : factors) {
                if (!s.empty()) s += " x ";
                s += f.name();
            }
            return s.empty() ? "trivial" : s;
        }
    }
    return "trivial";
}

long transcendence_degree(const GroupDescriptor& g) { return g.dimension(); }

std::optional<AdditiveCertificate> additive_dependence(const std::vector<RatFun>& fs,
                                                       const DifferenceOperator& op) {
    if (fs.empty()) throw std::invalid_argument("additive dependence of an empty family");
    ObstructionBasis basis = ObstructionBasis::build(fs, op);
    ScalarMat matrix(basis.dimension(), ScalarVec(fs.size(), Scalar(0)));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Scalar> v = obstruction_vector(fs[i], basis);
        for (std::size_t r = 0; r < v.size(); ++r) matrix[r][i] = v[r];
    }
    ScalarMat kernel = scalar_kernel(std::move(matrix), fs.size());
    if (kernel.empty()) return std::nullopt;

    AdditiveCertificate cert;
    cert.lambda = kernel.front();
    for (const Scalar& c : cert.lambda)
        if (!c.is_zero()) {
            Scalar inv = Scalar(1) / c;
            for (Scalar& x : cert.lambda) x *= inv;
            break;
        }
    RatFun combo;
    for (std::size_t i = 0; i < fs.size(); ++i) combo += RatFun(Poly(cert.lambda[i])) * fs[i];
    auto g = is_summable(combo, op);
    assert(g.has_value());
    cert.g = *g;
    return cert;
}

namespace {

struct MultDecomposition {
    long x_exp = 0;            // q-case only
    IntVec class_sums;         // per atlas class
    RatFun realization;        // g0 with a == z * x^e * sigma(g0)/g0 * prod rep^sum
    Scalar leftover;           // z
};

MultDecomposition decompose_multiplicative(const RatFun& a, const OrbitAtlas& atlas,
                                           const DifferenceOperator& op) {
    MultDecomposition out;
    out.class_sums.assign(atlas.classes().size(), Int(0));
    out.realization = RatFun(Scalar(1));

    Poly num = a.num(), den = a.den();
    if (op.is_q()) {
        out.x_exp = (long)num.valuation() - (long)den.valuation();
        num = num.shift_down(num.valuation());
        den = den.shift_down(den.valuation());
    }

    auto absorb = [&](const Poly& part, int sign) {
        if (part.degree() == 0) return;
        for (const auto& [v, mult] : squarefree_decompose(part)) {
            for (const auto& piece : atlas.locate(v)) {
                out.class_sums[piece.class_index] += sign * mult;
                if (piece.offset != 0) {
                    // sigma^e(rep)/rep == sigma(W)/W with W the product of
                    // the first e shifts of rep.
                    const Poly& rep = atlas.classes()[piece.class_index].representative;
                    RatFun w{Scalar(1)};
                    if (piece.offset > 0)
                        for (long k = 0; k < piece.offset; ++k)
                            w *= RatFun(apply_sigma(rep, op, k));
                    else
                        for (long k = piece.offset; k < 0; ++k)
                            w /= RatFun(apply_sigma(rep, op, k));
                    out.realization *= w.pow(sign * mult);
                }
            }
        }
    };
    absorb(num, +1);
    absorb(den, -1);

    RatFun assembled = RatFun(Poly::variable()).pow(out.x_exp) *
                       (apply_sigma(out.realization, op, 1) / out.realization);
    for (std::size_t ci = 0; ci < atlas.classes().size(); ++ci)
        assembled *= RatFun(atlas.classes()[ci].representative)
                         .pow(out.class_sums[ci].convert_to<long>());
    RatFun z = a / assembled;
    if (!z.is_constant()) throw std::logic_error("multiplicative decomposition leftover");
    out.leftover = z.constant_value();
    return out;
}

RatFun normalize_monic_num(const RatFun& g) {
    if (g.is_zero()) return g;
    return g * RatFun(Scalar(1) / g.num().leading());
}

}  // namespace

MultiplicativeLattice multiplicative_dependence(const std::vector<RatFun>& as,
                                                const DifferenceOperator& op) {
    if (as.empty()) throw std::invalid_argument("multiplicative dependence of an empty family");
    for (const RatFun& a : as)
        if (a.is_zero()) throw std::invalid_argument("zero entry in multiplicative family");
    const std::size_t d = as.size();

    std::vector<Poly> factors;
    for (const RatFun& a : as) {
        auto push = [&](Poly part) {
            if (op.is_q()) part = part.shift_down(part.valuation());
            if (part.degree() > 0) factors.push_back(part);
        };
        push(a.num());
        push(a.den());
    }
    OrbitAtlas atlas = OrbitAtlas::build(factors, op);

    std::vector<MultDecomposition> decomp;
    decomp.reserve(d);
    for (const RatFun& a : as) decomp.push_back(decompose_multiplicative(a, atlas, op));

    // Divisor-level relations: per-class sums (and the x-exponent for the
    // q-dilation) must cancel.
    IntMat rows;
    for (std::size_t ci = 0; ci < atlas.classes().size(); ++ci) {
        IntVec row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = decomp[i].class_sums[ci];
        rows.push_back(std::move(row));
    }
    if (op.is_q()) {
        IntVec row(d);
        for (std::size_t i = 0; i < d; ++i) row[i] = decomp[i].x_exp;
        rows.push_back(std::move(row));
    }
    IntMat divisor_kernel = integer_kernel(rows, d);

    MultiplicativeLattice out;
    if (divisor_kernel.empty()) return out;

    // Leftover constants restrict the divisor kernel further: on the kernel
    // basis they must multiply to 1 (shift) or to a power of q (q-dilation).
    std::vector<Scalar> ws;
    for (const auto& b : divisor_kernel) {
        Scalar w(1);
        for (std::size_t i = 0; i < d; ++i)
            w *= decomp[i].leftover.pow(b[i].convert_to<long>());
        ws.push_back(w);
    }
    IntMat mu = scalar_relation_lattice(ws, op.field(), op.is_q());

    IntMat basis;
    for (const auto& m : mu) {
        IntVec lambda(d, Int(0));
        for (std::size_t k = 0; k < divisor_kernel.size(); ++k)
            for (std::size_t i = 0; i < d; ++i) lambda[i] += m[k] * divisor_kernel[k][i];
        basis.push_back(std::move(lambda));
    }
    out.basis = hermite_rows(std::move(basis));

    for (const auto& lambda : out.basis) {
        MultiplicativeCertificate cert;
        cert.lambda = lambda;
        RatFun g{Scalar(1)};
        Scalar leftover(1);
        for (std::size_t i = 0; i < d; ++i) {
            long e = lambda[i].convert_to<long>();
            g *= decomp[i].realization.pow(e);
            leftover *= decomp[i].leftover.pow(e);
        }
        if (op.is_q() && !(leftover == Scalar(1))) {
            auto m = q_power_exponent(leftover, op.field());
            if (!m) throw std::logic_error("constant leftover is not a q power");
            g *= RatFun(Poly::variable()).pow(*m);
        }
        cert.g = normalize_monic_num(g);
        RatFun check{Scalar(1)};
        for (std::size_t i = 0; i < d; ++i)
            check *= as[i].pow(lambda[i].convert_to<long>());
        assert(apply_sigma(cert.g, op, 1) / cert.g == check);
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

GroupDescriptor galois_rank_one_mult(const RatFun& a, const DifferenceOperator& op) {
    if (a.is_zero()) throw std::invalid_argument("rank-one system with zero coefficient");
    auto n = minimal_torsion(a, op);
    if (!n) return GroupDescriptor::gm();
    return GroupDescriptor::cyclic(*n);
}

GroupDescriptor galois_rank_one_add(const RatFun& f, const DifferenceOperator& op) {
    return is_summable(f, op) ? GroupDescriptor::trivial() : GroupDescriptor::ga();
}

GroupDescriptor classify_diagonal(const std::vector<RatFun>& as, const DifferenceOperator& op) {
    MultiplicativeLattice lat = multiplicative_dependence(as, op);
    return GroupDescriptor::subtorus((long)as.size(), lat.basis);
}

GroupDescriptor classify_unipotent(const std::vector<RatFun>& fs, const DifferenceOperator& op) {
    if (fs.empty()) throw std::invalid_argument("unipotent classification of an empty family");
    ObstructionBasis basis = ObstructionBasis::build(fs, op);
    ScalarMat matrix(basis.dimension(), ScalarVec(fs.size(), Scalar(0)));
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::vector<Scalar> v = obstruction_vector(fs[i], basis);
        for (std::size_t r = 0; r < v.size(); ++r) matrix[r][i] = v[r];
    }
    ScalarMat kernel = scalar_kernel(std::move(matrix), fs.size());
    ScalarMat relations = kernel;
    scalar_rref(relations);
    return GroupDescriptor::subspace((long)fs.size(), relations);
}

GroupDescriptor classify_jordan(const RatFun& a, long size, const DifferenceOperator& op) {
    if (size <= 0) throw std::invalid_argument("jordan block size must be positive");
    GroupDescriptor mult = galois_rank_one_mult(a, op);
    if (size == 1) return mult;
    std::vector<RatFun> chain;
    RatFun dlog = apply_derivation(a, op, 1) / a;
    for (long i = 0; i + 2 <= size; ++i) chain.push_back(apply_derivation(dlog, op, (unsigned)i));
    return GroupDescriptor::product({mult, classify_unipotent(chain, op)});
}

}  // namespace diffcert
