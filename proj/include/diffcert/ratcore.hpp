#ifndef DIFFCERT_RATCORE_HPP
#define DIFFCERT_RATCORE_HPP

#include <set>
#include <utility>
#include <vector>

#include "diffcert/scalar.hpp"

namespace diffcert {

// The working field K = C(x): rational functions in x whose coefficients are
// constant-field elements.
using Poly = Polynomial<Scalar>;
using RatFun = RationalFunction<Scalar>;

class DifferenceOperator;  // diffops.hpp

inline Poly poly_of(long n) { return Poly(Scalar(n)); }
inline RatFun ratfun_of(long n) { return RatFun(Scalar(n)); }

// p = unit * prod p_i^{m_i} with the p_i monic, squarefree, pairwise coprime
// and the multiplicities strictly increasing (Yun's algorithm). Rejects the
// zero polynomial.
std::vector<std::pair<Poly, int>> squarefree_decompose(const Poly& p);

// Product of the distinct monic factors of p.
Poly squarefree_part(const Poly& p);

struct PolarTerm {
    Poly factor;    // monic squarefree
    int power;      // >= 1
    Poly residue;   // nonzero, deg < deg factor
};

// f == polynomial_part + sum residue / factor^power, exactly. Factors are
// pairwise coprime and terms are sorted canonically.
struct PartialFractionForm {
    Polynomial<Scalar> polynomial_part;
    std::vector<PolarTerm> terms;

    RatFun reassemble() const;
};

PartialFractionForm partial_fractions(const RatFun& f);

// All integers n with deg gcd(p, sigma^n(r)) > 0, where sigma^n substitutes
// x -> x+n (shift) or x -> q^n x (q-dilation). Exact: candidates come from a
// modular resultant (shift) or from exponent comparison on Res(p(x), r(tx))
// (q-dilation), and every candidate is confirmed by an exact gcd.
//
// In the q-dilation case factors of x are ignored on both sides: 0 is the
// fixed point of the dilation and its orbit never meets a nonzero root.
std::set<long> dispersion_set(const Poly& p, const Poly& r, const DifferenceOperator& op);

}  // namespace diffcert

#endif
