#ifndef DIFFCERT_MULTIPLICATIVE_HPP
#define DIFFCERT_MULTIPLICATIVE_HPP

#include <optional>

#include "diffcert/diffops.hpp"

namespace diffcert {

// Multiplicative normal form a == c * x^n * (sigma(g)/g) * (u/v), exactly,
// with u, v monic, x-free in the q-case, and deg gcd(u, sigma^j(v)) == 0 for
// every integer j (the kernel). The monomial exponent n is 0 for the shift.
struct ProductForm {
    Scalar constant;
    long monomial_exp = 0;
    RatFun telescoped;  // g, normalized with monic numerator
    Poly kernel_num;    // u
    Poly kernel_den;    // v

    bool kernel_trivial() const { return kernel_num.is_one() && kernel_den.is_one(); }
};

ProductForm gp_normal_form(const RatFun& a, const DifferenceOperator& op);

struct ProductCertificate {
    Scalar c;
    long n = 0;
    RatFun g;
};

// a == c * x^n * sigma(g)/g with arbitrary constant c (n forced 0 for the
// shift); succeeds exactly when the kernel of the normal form is trivial.
std::optional<ProductCertificate> product_decompose(const RatFun& a, const DifferenceOperator& op);

// Strict-constant variant: g with a == sigma(g)/g exactly. For the shift
// only c == 1 is removable; for the q-dilation constants in q^Z are absorbed
// through powers of x (q^m == sigma(x^m)/x^m), nothing else.
std::optional<RatFun> sigma_quotient_strict(const RatFun& a, const DifferenceOperator& op);

// Minimal n >= 1 with a^n == sigma(g)/g solvable under the strict constant
// rule; nothing when no power works.
std::optional<long> minimal_torsion(const RatFun& a, const DifferenceOperator& op);

// m with s == q^m, when s is an exact power of q in the given field.
std::optional<long> q_power_exponent(const Scalar& s, const ConstField& field);

}  // namespace diffcert

#endif
