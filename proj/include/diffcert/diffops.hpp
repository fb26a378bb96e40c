#ifndef DIFFCERT_DIFFOPS_HPP
#define DIFFCERT_DIFFOPS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "diffcert/ratcore.hpp"

namespace diffcert {

// The difference operator sigma acting on K = C(x): either the shift
// x -> x+1 over plain rational constants, or the q-dilation x -> qx over a
// constant field carrying q. Each kind is paired with the derivation that
// commutes with it: d/dx for the shift, x*d/dx for the dilation. Both
// operators are automorphisms of K, so negative powers are allowed.
class DifferenceOperator {
public:
    enum class Kind { Shift, QDilation };

    static DifferenceOperator shift() {
        return DifferenceOperator(Kind::Shift, ConstField::rationals());
    }

    static DifferenceOperator q_dilation(const ConstField& field) {
        if (!field.has_q())
            throw std::invalid_argument("q-dilation needs a constant field with q");
        return DifferenceOperator(Kind::QDilation, field);
    }

    Kind kind() const { return kind_; }
    bool is_shift() const { return kind_ == Kind::Shift; }
    bool is_q() const { return kind_ == Kind::QDilation; }
    const ConstField& field() const { return field_; }

    std::string describe() const {
        return is_shift() ? "shift x -> x+1" : "q-dilation x -> qx (" + field_.describe() + ")";
    }

private:
    DifferenceOperator(Kind k, ConstField f) : kind_(k), field_(std::move(f)) {}

    Kind kind_;
    ConstField field_;
};

// sigma^n(f): exact substitution x -> x+n or x -> q^n x.
RatFun apply_sigma(const RatFun& f, const DifferenceOperator& op, long n = 1);
Poly apply_sigma(const Poly& p, const DifferenceOperator& op, long n = 1);

// i-fold application of the paired derivation.
RatFun apply_derivation(const RatFun& f, const DifferenceOperator& op, unsigned i = 1);

// Square matrix over K with nonzero determinant.
class SystemMatrix {
public:
    SystemMatrix(long dim, std::vector<RatFun> entries);
    static SystemMatrix identity(long dim);

    long dim() const { return dim_; }
    const RatFun& at(long i, long j) const { return entries_[(std::size_t)(i * dim_ + j)]; }
    RatFun& at(long i, long j) { return entries_[(std::size_t)(i * dim_ + j)]; }

    RatFun determinant() const;

    friend SystemMatrix operator*(const SystemMatrix& a, const SystemMatrix& b);
    friend bool operator==(const SystemMatrix& a, const SystemMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    SystemMatrix() : dim_(0) {}

    long dim_;
    std::vector<RatFun> entries_;
};

SystemMatrix apply_sigma(const SystemMatrix& a, const DifferenceOperator& op, long n = 1);

// A_n = sigma^{n-1}(A) * ... * sigma(A) * A; A_0 is the identity.
SystemMatrix iterate_matrix(const SystemMatrix& a, const DifferenceOperator& op, long n);

}  // namespace diffcert

#endif
