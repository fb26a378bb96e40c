#include "diffcert/diffops.hpp"

#include <cassert>
#include <stdexcept>

namespace diffcert {

RatFun apply_sigma(const RatFun& f, const DifferenceOperator& op, long n) {
    if (n == 0) return f;
    if (op.is_shift()) return f.substitute_affine(Scalar(1), Scalar(n));
    return f.substitute_affine(op.field().q_pow(n), Scalar(0));
}

Poly apply_sigma(const Poly& p, const DifferenceOperator& op, long n) {
    if (n == 0) return p;
    if (op.is_shift()) return p.shift_arg(Scalar(n));
    return p.scale_arg(op.field().q_pow(n));
}

RatFun apply_derivation(const RatFun& f, const DifferenceOperator& op, unsigned i) {
    RatFun g = f;
    for (unsigned k = 0; k < i; ++k) {
        g = g.derivative();
        if (op.is_q()) g = RatFun(Poly::variable()) * g;  // x * d/dx
    }
    return g;
}

SystemMatrix::SystemMatrix(long dim, std::vector<RatFun> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim_ <= 0) throw std::invalid_argument("matrix dimension must be positive");
    if (entries_.size() != (std::size_t)(dim_ * dim_))
        throw std::invalid_argument("matrix entry count does not match dimension");
    if (determinant().is_zero())
        throw std::invalid_argument("system matrix must be invertible");
}

SystemMatrix SystemMatrix::identity(long dim) {
    SystemMatrix m;
    m.dim_ = dim;
    m.entries_.assign((std::size_t)(dim * dim), RatFun());
    for (long i = 0; i < dim; ++i) m.at(i, i) = RatFun(Scalar(1));
    return m;
}

RatFun SystemMatrix::determinant() const {
    // Fraction-field Gaussian elimination.
    std::vector<RatFun> w = entries_;
    auto at = [&](long i, long j) -> RatFun& { return w[(std::size_t)(i * dim_ + j)]; };
    RatFun det{Scalar(1)};
    for (long col = 0; col < dim_; ++col) {
        long pivot = -1;
        for (long row = col; row < dim_; ++row)
            if (!at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return RatFun();
        if (pivot != col) {
            for (long j = 0; j < dim_; ++j) std::swap(at(pivot, j), at(col, j));
            det = -det;
        }
        det *= at(col, col);
        RatFun inv = at(col, col).inverse();
        for (long row = col + 1; row < dim_; ++row) {
            if (at(row, col).is_zero()) continue;
            RatFun factor = at(row, col) * inv;
            for (long j = col; j < dim_; ++j) at(row, j) -= factor * at(col, j);
        }
    }
    return det;
}

SystemMatrix operator*(const SystemMatrix& a, const SystemMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    SystemMatrix out = SystemMatrix::identity(a.dim_);
    for (long i = 0; i < a.dim_; ++i)
        for (long j = 0; j < a.dim_; ++j) {
            RatFun s;
            for (long k = 0; k < a.dim_; ++k) s += a.at(i, k) * b.at(k, j);
            out.at(i, j) = s;
        }
    return out;
}

SystemMatrix apply_sigma(const SystemMatrix& a, const DifferenceOperator& op, long n) {
    SystemMatrix out = a;
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j) out.at(i, j) = apply_sigma(a.at(i, j), op, n);
    return out;
}

SystemMatrix iterate_matrix(const SystemMatrix& a, const DifferenceOperator& op, long n) {
    if (n < 0) throw std::invalid_argument("iterate_matrix needs n >= 0");
    SystemMatrix acc = SystemMatrix::identity(a.dim());
    for (long k = 0; k < n; ++k) acc = apply_sigma(a, op, k) * acc;
    return acc;
}

}  // namespace diffcert
