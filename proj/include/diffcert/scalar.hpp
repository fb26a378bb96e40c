#ifndef DIFFCERT_SCALAR_HPP
#define DIFFCERT_SCALAR_HPP

#include <stdexcept>
#include <string>

#include "diffcert/rational.hpp"
#include "diffcert/rational_function.hpp"

namespace diffcert {

// An element of the constant field. Constants live in Q(q), reduced
// fractions of polynomials in the distinguished indeterminate q; plain
// rational constants are the degree-zero elements. The same arithmetic
// core thus serves all three field flavours below (q is simply absent,
// a number, or the indeterminate itself).
using Scalar = RationalFunction<Rat>;
using QPoly = Polynomial<Rat>;

inline Scalar scalar_of(const Rat& r) { return Scalar(r); }
inline Scalar scalar_of(long n) { return Scalar(n); }

inline bool is_number(const Scalar& s) { return s.is_constant(); }

inline Rat to_number(const Scalar& s) {
    if (!is_number(s))
        throw std::domain_error("scalar involves the symbolic constant q where a number is required");
    return s.constant_value();
}

// The constant field of the engine: plain rationals, rationals with a fixed
// numeric q, or rationals with a transcendental symbolic q. A numeric q must
// avoid 0, 1 and -1 (the only rational roots of unity), so that q^n - 1 is
// invertible for every n != 0; a symbolic q satisfies that by construction.
class ConstField {
public:
    enum class Kind { Rationals, NumericQ, SymbolicQ };

    static ConstField rationals() { return ConstField(Kind::Rationals, Rat(0)); }

    static ConstField numeric_q(const Rat& q) {
        if (q == 0 || q == 1 || q == -1)
            throw std::invalid_argument("q must avoid 0 and the roots of unity 1, -1");
        return ConstField(Kind::NumericQ, q);
    }

    static ConstField symbolic_q() { return ConstField(Kind::SymbolicQ, Rat(0)); }

    Kind kind() const { return kind_; }
    bool has_q() const { return kind_ != Kind::Rationals; }
    bool is_symbolic() const { return kind_ == Kind::SymbolicQ; }

    Rat numeric_q_value() const {
        if (kind_ != Kind::NumericQ) throw std::domain_error("no numeric q in this field");
        return q_;
    }

    Scalar q() const {
        switch (kind_) {
            case Kind::NumericQ: return Scalar(q_);
            case Kind::SymbolicQ: return Scalar::variable();
            default: throw std::domain_error("the constant field has no q");
        }
    }

    Scalar q_pow(long n) const { return q().pow(n); }

    // q^n - 1, invertible for n != 0.
    Scalar qn_minus_one(long n) const {
        if (n == 0) throw std::domain_error("q^0 - 1 is not invertible");
        return q_pow(n) - Scalar(1);
    }

    friend bool operator==(const ConstField& a, const ConstField& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::Rationals: return "Q";
            case Kind::NumericQ: return "Q, q = " + q_.str();
            default: return "Q(q), q symbolic";
        }
    }

private:
    ConstField(Kind k, Rat q) : kind_(k), q_(std::move(q)) {}

    Kind kind_;
    Rat q_;
};

}  // namespace diffcert

#endif
