#ifndef DIFFCERT_DIFFALG_HPP
#define DIFFCERT_DIFFALG_HPP

#include <optional>

#include "diffcert/dependence.hpp"
#include "diffcert/multiplicative.hpp"

namespace diffcert {

// Outcome of a differential-transcendence or formal-solution analysis.
struct Verdict {
    enum class Kind {
        DifferentiallyAlgebraic,
        ProvablyTranscendental,
        NoRelationUpToOrder,
        RationalSolution,
        NoFormalSolution,
    };

    Kind kind = Kind::NoRelationUpToOrder;
    std::optional<AdditiveCertificate> telescoper;  // differentially algebraic witness
    std::optional<ProductCertificate> product;      // multiplicative witness (c, n, g)
    Poly witness;                                   // transcendence: the lone orbit factor
    long order_bound = 0;                           // NoRelationUpToOrder
    RatFun solution;                                // RationalSolution

    const char* kind_name() const;
};

// Nonzero (lambda_0..lambda_n, g), n <= max_order, with
// sum lambda_i d^i(f) == sigma(g) - g, of minimal order; nothing if no such
// relation exists up to the bound.
std::optional<AdditiveCertificate> parametrized_telescoper(const RatFun& f,
                                                           const DifferenceOperator& op,
                                                           unsigned max_order);

// Complete dichotomy for tau(y) = y + f, no order bound: a lone pole in some
// orbit of the reduced form blocks every telescoper, otherwise an explicit
// certificate of order 0 (or 1 in the q-case when the x^0 term obstructs).
Verdict diff_transcendence_additive(const RatFun& f, const DifferenceOperator& op);

// Complete dichotomy for tau(y) = a y, decided by two routes that agree: the
// reduced form of dlog a, and the product decomposition of a with free
// constant. Differentially algebraic exactly when a == c x^n sigma(g)/g.
Verdict diff_transcendence_mult(const RatFun& a, const DifferenceOperator& op);

// Formal power series solutions of tau(z) = z + f for the q-dilation:
// either z is rational (with the witness), no formal solution exists, or
// every solution is differentially transcendental.
Verdict ogawara_classify(const RatFun& f, const DifferenceOperator& op);

}  // namespace diffcert

#endif
