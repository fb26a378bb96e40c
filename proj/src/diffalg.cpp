#include "diffcert/diffalg.hpp"

#include <cassert>
#include <stdexcept>

namespace diffcert {

const char* Verdict::kind_name() const {
    switch (kind) {
        case Kind::DifferentiallyAlgebraic: return "differentially-algebraic";
        case Kind::ProvablyTranscendental: return "provably-transcendental";
        case Kind::NoRelationUpToOrder: return "no-relation-up-to-order";
        case Kind::RationalSolution: return "rational-solution";
        case Kind::NoFormalSolution: return "no-formal-solution";
    }
    return "unknown";
}

std::optional<AdditiveCertificate> parametrized_telescoper(const RatFun& f,
                                                           const DifferenceOperator& op,
                                                           unsigned max_order) {
    ObstructionBasis basis = ObstructionBasis::build({f}, op, (int)max_order);
    std::vector<std::vector<Scalar>> columns;
    std::vector<RatFun> derivatives;
    for (unsigned n = 0; n <= max_order; ++n) {
        derivatives.push_back(n == 0 ? f : apply_derivation(derivatives.back(), op, 1));
        columns.push_back(obstruction_vector(derivatives.back(), basis));
        ScalarMat matrix(basis.dimension(), ScalarVec(n + 1, Scalar(0)));
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t r = 0; r < columns[i].size(); ++r) matrix[r][i] = columns[i][r];
        ScalarMat kernel = scalar_kernel(std::move(matrix), n + 1);
        if (kernel.empty()) continue;
        AdditiveCertificate cert;
        cert.lambda = kernel.front();
        for (const Scalar& c : cert.lambda)
            if (!c.is_zero()) {
                Scalar inv = Scalar(1) / c;
                for (Scalar& x : cert.lambda) x *= inv;
                break;
            }
        RatFun combo;
        for (std::size_t i = 0; i <= n; ++i)
            combo += RatFun(Poly(cert.lambda[i])) * derivatives[i];
        auto g = is_summable(combo, op);
        assert(g.has_value());
        cert.g = *g;
        return cert;
    }
    return std::nullopt;
}

Verdict diff_transcendence_additive(const RatFun& f, const DifferenceOperator& op) {
    Verdict v;
    ReducedForm rf = reduce(f, op);
    if (rf.has_polar_obstruction()) {
        // A lone pole per orbit survives, with raised order, in every
        // constant combination of derivatives, while sigma(g) - g always
        // spreads over at least two orbit positions.
        v.kind = Verdict::Kind::ProvablyTranscendental;
        v.witness = rf.orbit_obstructions.front().representative;
        return v;
    }
    v.kind = Verdict::Kind::DifferentiallyAlgebraic;
    AdditiveCertificate cert;
    if (op.is_shift() || rf.laurent_obstruction == Scalar(0)) {
        auto g = is_summable(f, op);
        assert(g.has_value());
        cert.lambda = {Scalar(1)};
        cert.g = *g;
    } else {
        // The derivation kills the x^0 term of the Laurent remainder.
        auto g = is_summable(apply_derivation(f, op, 1), op);
        assert(g.has_value());
        cert.lambda = {Scalar(0), Scalar(1)};
        cert.g = *g;
    }
    v.telescoper = std::move(cert);
    return v;
}

Verdict diff_transcendence_mult(const RatFun& a, const DifferenceOperator& op) {
    if (a.is_zero()) throw std::invalid_argument("tau(y) = a y needs a nonzero a");
    RatFun dlog = apply_derivation(a, op, 1) / a;
    Verdict additive_route = diff_transcendence_additive(dlog, op);
    auto structural = product_decompose(a, op);
    assert((additive_route.kind == Verdict::Kind::DifferentiallyAlgebraic) ==
           structural.has_value());
    if (!structural) {
        Verdict v;
        v.kind = Verdict::Kind::ProvablyTranscendental;
        v.witness = additive_route.witness;
        return v;
    }
    Verdict v;
    v.kind = Verdict::Kind::DifferentiallyAlgebraic;
    v.product = structural;
    v.telescoper = additive_route.telescoper;
    return v;
}

Verdict ogawara_classify(const RatFun& f, const DifferenceOperator& op) {
    if (!op.is_q())
        throw std::invalid_argument("the formal-solution classification is a q-dilation statement");
    Verdict v;
    if (f.is_zero()) {
        v.kind = Verdict::Kind::RationalSolution;
        v.solution = RatFun();
        return v;
    }
    ReducedForm rf = reduce(f, op);
    if (rf.has_polar_obstruction()) {
        v.kind = Verdict::Kind::ProvablyTranscendental;
        v.witness = rf.orbit_obstructions.front().representative;
        return v;
    }
    if (!(rf.laurent_obstruction == Scalar(0))) {
        // Coefficientwise (q^n - 1) z_n = f_n has no solution at n = 0.
        v.kind = Verdict::Kind::NoFormalSolution;
        return v;
    }
    auto z = is_summable(f, op);
    assert(z.has_value());
    v.kind = Verdict::Kind::RationalSolution;
    v.solution = *z;
    return v;
}

}  // namespace diffcert
