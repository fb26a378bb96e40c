#ifndef DIFFCERT_POLYNOMIAL_HPP
#define DIFFCERT_POLYNOMIAL_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace diffcert {

// Dense univariate polynomial over an exact field T.
//
// Coefficients are stored lowest degree first and the top coefficient is
// always nonzero (the zero polynomial has an empty coefficient vector, with
// degree() == -1). T must provide field arithmetic, T(long) construction
// and an is_zero() test via `coeff == T(0)`.
template <typename T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const T& constant) {
        if (!(constant == T(0))) coeffs_.push_back(constant);
    }
    explicit Polynomial(long constant) : Polynomial(T(constant)) {}

    static Polynomial from_coeffs(std::vector<T> coeffs) {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // The monomial c*x^k.
    static Polynomial monomial(const T& c, std::size_t k) {
        if (c == T(0)) return Polynomial();
        std::vector<T> v(k + 1, T(0));
        v[k] = c;
        return from_coeffs(std::move(v));
    }

    static Polynomial variable() { return monomial(T(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == T(1); }

    // degree() of the zero polynomial is -1.
    int degree() const { return (int)coeffs_.size() - 1; }

    const std::vector<T>& coeffs() const { return coeffs_; }

    T coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : T(0);
    }

    const T& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    T constant_term() const { return coeff(0); }

    bool is_monic() const { return !is_zero() && leading() == T(1); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * (T(1) / leading());
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
        return from_coeffs(std::move(v));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> v(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
        return from_coeffs(std::move(v));
    }

    Polynomial operator-() const {
        std::vector<T> v = coeffs_;
        for (auto& c : v) c = -c;
        return from_coeffs(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(std::move(v));
    }

    friend Polynomial operator*(const Polynomial& a, const T& s) {
        if (s == T(0)) return Polynomial();
        std::vector<T> v = a.coeffs_;
        for (auto& c : v) c *= s;
        return from_coeffs(std::move(v));
    }
    friend Polynomial operator*(const T& s, const Polynomial& a) { return a * s; }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division; the divisor's leading coefficient must be invertible.
    static std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        if (a.degree() < b.degree()) return {Polynomial(), a};
        std::vector<T> rem = a.coeffs_;
        std::vector<T> quot(a.coeffs_.size() - b.coeffs_.size() + 1, T(0));
        const T inv_lead = T(1) / b.leading();
        for (int i = (int)rem.size() - 1; i >= b.degree(); --i) {
            if (rem[i] == T(0)) continue;
            T q = rem[i] * inv_lead;
            quot[i - b.degree()] = q;
            for (int j = 0; j <= b.degree(); ++j)
                rem[i - b.degree() + j] -= q * b.coeffs_[j];
        }
        return {from_coeffs(std::move(quot)), from_coeffs(std::move(rem))};
    }

    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divrem(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divrem(a, b).second;
    }

    bool divides(const Polynomial& a) const { return divrem(a, *this).second.is_zero(); }

    Polynomial pow(unsigned long e) const {
        Polynomial acc{T(1)}, b = *this;
        while (e) {
            if (e & 1) acc *= b;
            if (e >>= 1) b *= b;
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<T> v(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * T((long)i);
        return from_coeffs(std::move(v));
    }

    template <typename U>
    U evaluate(const U& x) const {
        U acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + U(coeffs_[i]);
        return acc;
    }

    // p(x + a), exact Taylor shift.
    Polynomial shift_arg(const T& a) const {
        Polynomial acc;
        Polynomial lin = from_coeffs({a, T(1)});
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * lin + Polynomial(coeffs_[i]);
        return acc;
    }

    // p(s * x).
    Polynomial scale_arg(const T& s) const {
        std::vector<T> v = coeffs_;
        T f(1);
        for (std::size_t i = 1; i < v.size(); ++i) {
            f *= s;
            v[i] *= f;
        }
        return from_coeffs(std::move(v));
    }

    // Multiplicity of x = 0 as a root.
    std::size_t valuation() const {
        if (is_zero()) return 0;
        std::size_t v = 0;
        while (coeffs_[v] == T(0)) ++v;
        return v;
    }

    // p / x^k; all removed coefficients must be zero.
    Polynomial shift_down(std::size_t k) const {
        if (is_zero()) return *this;
        if (valuation() < k) throw std::domain_error("shift_down drops nonzero coefficients");
        return from_coeffs(std::vector<T>(coeffs_.begin() + (long)k, coeffs_.end()));
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

// Monic greatest common divisor; gcd(0, 0) == 0.
template <typename T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto r = Polynomial<T>::divrem(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? r : r.monic();
    }
    return a.monic();
}

// Extended gcd: returns (g, s, t) monic with s*a + t*b == g.
template <typename T>
std::tuple<Polynomial<T>, Polynomial<T>, Polynomial<T>> poly_xgcd(const Polynomial<T>& a,
                                                                  const Polynomial<T>& b) {
    Polynomial<T> r0 = a, r1 = b;
    Polynomial<T> s0{T(1)}, s1{}, t0{}, t1{T(1)};
    while (!r1.is_zero()) {
        auto [q, r2] = Polynomial<T>::divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        Polynomial<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    T lead = r0.leading();
    T inv = T(1) / lead;
    return {r0 * inv, s0 * inv, t0 * inv};
}

template <typename T>
int cmp(const Polynomial<T>& a, const Polynomial<T>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i)
        if (int c = cmp(a.coeff((std::size_t)i), b.coeff((std::size_t)i)); c != 0) return c;
    return 0;
}

}  // namespace diffcert

#endif
