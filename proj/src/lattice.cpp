#include "diffcert/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace diffcert {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

void negate_row(IntVec& row) {
    for (auto& x : row) x = -x;
}

}  // namespace

IntMat hermite_rows(IntMat rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        // Chain gcd reductions until at most one row below `rank` hits col.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = rank; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() ||
                    int_abs(rows[i][col]) < int_abs(rows[best][col]))
                    best = i;
            }
            if (best == rows.size()) break;
            bool reduced_any = false;
            for (std::size_t i = rank; i < rows.size(); ++i) {
                if (i == best || rows[i][col] == 0) continue;
                Int q = rows[i][col] / rows[best][col];
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[best][j];
                reduced_any = true;
            }
            if (!reduced_any) {
                std::swap(rows[best], rows[rank]);
                if (rows[rank][col] < 0) negate_row(rows[rank]);
                for (std::size_t i = 0; i < rank; ++i) {
                    if (rows[i][col] == 0) continue;
                    Int q = floor_div(rows[i][col], rows[rank][col]);
                    for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[rank][j];
                }
                ++rank;
                break;
            }
        }
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntVec& r) {
                                  return std::all_of(r.begin(), r.end(),
                                                     [](const Int& x) { return x == 0; });
                              }),
               rows.end());
    return rows;
}

IntMat integer_kernel(const IntMat& m, std::size_t cols) {
    IntMat a = m;
    IntMat u(cols, IntVec(cols, Int(0)));  // columns tracked as u[var][col]
    for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

    auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (auto& row : a) row[dst] -= q * row[src];
        for (auto& row : u) row[dst] -= q * row[src];
    };
    auto col_swap = [&](std::size_t c1, std::size_t c2) {
        for (auto& row : a) std::swap(row[c1], row[c2]);
        for (auto& row : u) std::swap(row[c1], row[c2]);
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < a.size() && pivot < cols; ++r) {
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = pivot; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                if (best == cols || int_abs(a[r][c]) < int_abs(a[r][best])) best = c;
            }
            if (best == cols) break;  // row already clear
            bool reduced_any = false;
            for (std::size_t c = pivot; c < cols; ++c) {
                if (c == best || a[r][c] == 0) continue;
                col_op(c, best, a[r][c] / a[r][best]);
                reduced_any = true;
            }
            if (!reduced_any) {
                col_swap(best, pivot);
                ++pivot;
                break;
            }
        }
    }

    IntMat kernel;
    for (std::size_t c = pivot; c < cols; ++c) {
        IntVec v(cols);
        for (std::size_t i = 0; i < cols; ++i) v[i] = u[i][c];
#ifndef NDEBUG
        for (const auto& row : m) {
            Int s(0);
            for (std::size_t i = 0; i < cols; ++i) s += row[i] * v[i];
            assert(s == 0);
        }
#endif
        kernel.push_back(std::move(v));
    }
    return hermite_rows(std::move(kernel));
}

bool lattice_contains(const IntMat& hnf_basis, const IntVec& v) {
    IntVec w = v;
    for (const auto& row : hnf_basis) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        if (w[p] % row[p] != 0) continue;  // cannot use this pivot exactly
        Int q = w[p] / row[p];
        for (std::size_t j = 0; j < w.size(); ++j) w[j] -= q * row[j];
    }
    return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

IntMat even_character_sublattice(const IntMat& basis, const std::vector<int>& parity) {
    auto chi = [&](const IntVec& v) {
        Int s(0);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (parity[i]) s += v[i];
        return (s % 2) != 0;
    };
    std::size_t odd_at = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (chi(basis[i])) {
            odd_at = i;
            break;
        }
    if (odd_at == basis.size()) return hermite_rows(basis);
    IntMat out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!chi(basis[i])) {
            out.push_back(basis[i]);
        } else if (i != odd_at) {
            IntVec v = basis[i];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] += basis[odd_at][j];
            out.push_back(std::move(v));
        }
    }
    IntVec twice = basis[odd_at];
    for (auto& x : twice) x *= 2;
    out.push_back(std::move(twice));
    return hermite_rows(std::move(out));
}

std::vector<Int> coprime_basis(const std::vector<Int>& inputs) {
    std::set<Int> pool;
    for (const Int& n : inputs) {
        Int a = int_abs(n);
        if (a > 1) pool.insert(a);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it1 = pool.begin(); it1 != pool.end() && !changed; ++it1)
            for (auto it2 = std::next(it1); it2 != pool.end() && !changed; ++it2) {
                Int g = int_gcd(*it1, *it2);
                if (g == 1) continue;
                Int a = *it1 / g, b = *it2 / g;
                pool.erase(*it2);
                pool.erase(pool.find(*it1));
                pool.insert(g);
                if (a > 1) pool.insert(a);
                if (b > 1) pool.insert(b);
                changed = true;
            }
    }
    return std::vector<Int>(pool.begin(), pool.end());
}

IntVec factor_exponents(Int n, const std::vector<Int>& basis) {
    if (n <= 0) throw std::invalid_argument("factor_exponents needs a positive integer");
    IntVec out(basis.size(), Int(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        while (n % basis[i] == 0) {
            n /= basis[i];
            out[i] += 1;
        }
    if (n != 1) throw std::logic_error("integer does not decompose over the coprime basis");
    return out;
}

namespace {

std::vector<QPoly> qpoly_coprime_refine(std::vector<QPoly> pool) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pool.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
                if (pool[i] == pool[j]) {
                    pool.erase(pool.begin() + (long)j);
                    changed = true;
                    break;
                }
                QPoly g = poly_gcd(pool[i], pool[j]);
                if (g.degree() == 0) continue;
                QPoly a = pool[i] / g, b = pool[j] / g;
                pool.erase(pool.begin() + (long)j);
                pool.erase(pool.begin() + (long)i);
                pool.push_back(g);
                if (a.degree() > 0) pool.push_back(a.monic());
                if (b.degree() > 0) pool.push_back(b.monic());
                changed = true;
            }
    }
    std::sort(pool.begin(), pool.end(), [](const QPoly& a, const QPoly& b) { return cmp(a, b) < 0; });
    return pool;
}

int qpoly_exponent(QPoly n, const QPoly& d) {
    int e = 0;
    while (n.degree() >= d.degree()) {
        auto [q, r] = QPoly::divrem(n, d);
        if (!r.is_zero()) break;
        n = q;
        ++e;
    }
    return e;
}

}  // namespace

IntMat scalar_relation_lattice(const std::vector<Scalar>& zs, const ConstField& field,
                               bool q_target) {
    const std::size_t d = zs.size();
    const std::size_t vars = d + (q_target ? 1 : 0);
    for (const Scalar& z : zs)
        if (z.is_zero()) throw std::invalid_argument("zero scalar in relation lattice");

    IntMat rows;

    // Polynomial-in-q side: exponents over a coprime basis of monic factors.
    std::vector<QPoly> gens;
    for (const Scalar& z : zs) {
        if (z.num().degree() > 0) gens.push_back(z.num().monic());
        if (z.den().degree() > 0) gens.push_back(z.den());
    }
    const QPoly qvar = QPoly::variable();
    if (q_target && field.is_symbolic()) gens.push_back(qvar);
    std::vector<QPoly> atoms = qpoly_coprime_refine(std::move(gens));
    for (const QPoly& atom : atoms) {
        IntVec row(vars, Int(0));
        for (std::size_t i = 0; i < d; ++i)
            row[i] = qpoly_exponent(zs[i].num().monic(), atom) -
                     qpoly_exponent(zs[i].den(), atom);
        if (q_target && field.is_symbolic() && atom == qvar) row[d] = -1;
        rows.push_back(std::move(row));
    }

    // Rational content side.
    std::vector<Rat> contents(d);
    for (std::size_t i = 0; i < d; ++i) contents[i] = zs[i].num().leading();
    Rat q_content(1);
    if (q_target && !field.is_symbolic()) q_content = field.numeric_q_value();

    std::vector<Int> int_gens;
    for (const Rat& c : contents) {
        int_gens.push_back(rat_num(c));
        int_gens.push_back(rat_den(c));
    }
    int_gens.push_back(rat_num(q_content));
    int_gens.push_back(rat_den(q_content));
    std::vector<Int> cbasis = coprime_basis(int_gens);
    for (std::size_t b = 0; b < cbasis.size(); ++b) {
        IntVec row(vars, Int(0));
        for (std::size_t i = 0; i < d; ++i) {
            row[i] = factor_exponents(int_abs(rat_num(contents[i])), cbasis)[b] -
                     factor_exponents(int_abs(rat_den(contents[i])), cbasis)[b];
        }
        if (q_target && !field.is_symbolic())
            row[d] = factor_exponents(int_abs(rat_den(q_content)), cbasis)[b] -
                     factor_exponents(int_abs(rat_num(q_content)), cbasis)[b];
        rows.push_back(std::move(row));
    }

    IntMat kernel = integer_kernel(rows, vars);

    std::vector<int> parity(vars, 0);
    for (std::size_t i = 0; i < d; ++i) parity[i] = contents[i] < 0 ? 1 : 0;
    if (q_target && !field.is_symbolic()) parity[d] = q_content < 0 ? 1 : 0;
    IntMat even = even_character_sublattice(kernel, parity);

    if (!q_target) return even;
    IntMat projected;
    for (auto& row : even) {
        row.pop_back();
        projected.push_back(std::move(row));
    }
    return hermite_rows(std::move(projected));
}

}  // namespace diffcert
