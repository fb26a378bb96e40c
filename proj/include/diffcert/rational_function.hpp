#ifndef DIFFCERT_RATIONAL_FUNCTION_HPP
#define DIFFCERT_RATIONAL_FUNCTION_HPP

#include <stdexcept>
#include <utility>

#include "diffcert/polynomial.hpp"

namespace diffcert {

// Fraction of polynomials over an exact field T, kept in canonical form:
// numerator and denominator coprime, denominator monic and nonzero, zero is
// 0/1. Equality of values is therefore coefficientwise equality.
template <typename T>
class RationalFunction {
public:
    using Poly = Polynomial<T>;

    RationalFunction() : num_(), den_{T(1)} {}
    explicit RationalFunction(const T& c) : num_(c), den_{T(1)} {}
    explicit RationalFunction(long c) : num_(c), den_{T(1)} {}
    RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    explicit RationalFunction(Poly num) : num_(std::move(num)), den_{T(1)} {}

    static RationalFunction variable() { return RationalFunction(Poly::variable()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    T constant_value() const {
        if (!is_constant()) throw std::domain_error("not a constant");
        return num_.constant_term();
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction operator-() const {
        RationalFunction r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return RationalFunction(den_, num_);
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction acc(T(1)), b = *this;
        unsigned long k = (unsigned long)e;
        while (k) {
            if (k & 1) acc *= b;
            if (k >>= 1) b *= b;
        }
        return acc;
    }

    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(),
                                den_ * den_);
    }

    // Substitute x -> s*x + a.
    RationalFunction substitute_affine(const T& s, const T& a) const {
        Poly n = num_, d = den_;
        if (!(s == T(1))) {
            n = n.scale_arg(s);
            d = d.scale_arg(s);
        }
        if (!(a == T(0))) {
            n = n.shift_arg(a);
            d = d.shift_arg(a);
        }
        return RationalFunction(std::move(n), std::move(d));
    }

    // Polynomial part and proper remainder: *this == poly + proper.
    std::pair<Poly, RationalFunction> split_polynomial_part() const {
        auto [q, r] = Poly::divrem(num_, den_);
        RationalFunction proper;
        proper.num_ = std::move(r);
        proper.den_ = den_;
        return {std::move(q), std::move(proper)};
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
        return !(a == b);
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        if (num_.is_zero()) {
            den_ = Poly{T(1)};
            return;
        }
        Poly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        T lead = den_.leading();
        if (!(lead == T(1))) {
            T inv = T(1) / lead;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_;
    Poly den_;
};

template <typename T>
int cmp(const RationalFunction<T>& a, const RationalFunction<T>& b) {
    if (int c = cmp(a.num(), b.num()); c != 0) return c;
    return cmp(a.den(), b.den());
}

}  // namespace diffcert

#endif
