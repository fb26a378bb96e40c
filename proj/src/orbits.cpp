#include "diffcert/orbits.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace diffcert {

namespace {

struct PolyLess {
    bool operator()(const Poly& a, const Poly& b) const { return cmp(a, b) < 0; }
};

// Pairwise-coprime refinement of a set of monic squarefree polynomials.
std::vector<Poly> coprime_refine(std::vector<Poly> pool) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pool.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
                Poly g = poly_gcd(pool[i], pool[j]);
                if (g.degree() == 0) continue;
                Poly a = pool[i] / g, b = pool[j] / g;
                pool.erase(pool.begin() + (long)j);
                pool.erase(pool.begin() + (long)i);
                pool.push_back(g);
                if (a.degree() > 0) pool.push_back(a.monic());
                if (b.degree() > 0) pool.push_back(b.monic());
                changed = true;
            }
        if (changed) continue;
        // dedupe
        std::sort(pool.begin(), pool.end(), [](const Poly& a, const Poly& b) { return cmp(a, b) < 0; });
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    }
    return pool;
}

}  // namespace

OrbitAtlas OrbitAtlas::build(const std::vector<Poly>& factors, const DifferenceOperator& op) {
    OrbitAtlas atlas(op);

    std::vector<Poly> pool;
    for (const Poly& f : factors) {
        if (f.is_zero()) throw std::invalid_argument("orbit atlas of the zero polynomial");
        Poly v = squarefree_part(f);
        if (op.is_q()) v = v.shift_down(v.valuation());
        if (v.degree() > 0) pool.push_back(v.monic());
    }
    if (pool.empty()) return atlas;

    pool = coprime_refine(std::move(pool));

    // Split atoms until every sigma-overlap is a whole-atom shift.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pool.size() && !changed; ++i) {
            for (std::size_t j = 0; j < pool.size() && !changed; ++j) {
                for (long n : dispersion_set(pool[i], pool[j], op)) {
                    if (i == j && n <= 0) continue;  // symmetric; 0 is trivial
                    Poly shifted = apply_sigma(pool[j], op, n).monic();
                    Poly g = poly_gcd(pool[i], shifted);
                    assert(g.degree() > 0);
                    if (g == pool[i] && g == shifted) continue;  // coherent
                    std::vector<Poly> pieces;
                    pieces.push_back(g);
                    if (g.degree() < pool[i].degree()) pieces.push_back((pool[i] / g).monic());
                    Poly back = apply_sigma(g, op, -n).monic();
                    pieces.push_back(back);
                    if (back.degree() < pool[j].degree()) pieces.push_back((pool[j] / back).monic());
                    if (i == j) {
                        pool.erase(pool.begin() + (long)i);
                    } else {
                        pool.erase(pool.begin() + (long)std::max(i, j));
                        pool.erase(pool.begin() + (long)std::min(i, j));
                    }
                    for (auto& piece : pieces) pool.push_back(piece);
                    pool = coprime_refine(std::move(pool));
                    changed = true;
                    break;
                }
            }
        }
    }

    // Group atoms into classes of whole-atom shifts; offsets are consistent
    // because sigma^n fixes no nonconstant atom for n != 0.
    std::sort(pool.begin(), pool.end(), [](const Poly& a, const Poly& b) { return cmp(a, b) < 0; });
    std::vector<long> offset(pool.size(), 0);
    std::vector<long> cls(pool.size(), -1);
    long next_class = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = next_class;
        offset[i] = 0;
        // breadth-first over shift relations
        std::vector<std::size_t> frontier{i};
        while (!frontier.empty()) {
            std::vector<std::size_t> next;
            for (std::size_t a : frontier) {
                for (std::size_t b = 0; b < pool.size(); ++b) {
                    if (cls[b] >= 0 || pool[a].degree() != pool[b].degree()) continue;
                    for (long n : dispersion_set(pool[a], pool[b], op)) {
                        if (apply_sigma(pool[b], op, n).monic() == pool[a]) {
                            cls[b] = cls[i];
                            offset[b] = offset[a] - n;  // pool[a] = sigma^n(pool[b])
                            next.push_back(b);
                            break;
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
        ++next_class;
    }

    for (long c = 0; c < next_class; ++c) {
        Class klass;
        long min_offset = 0;
        bool first = true;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (cls[i] == c) {
                if (first || offset[i] < min_offset) min_offset = offset[i];
                first = false;
            }
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (cls[i] == c) klass.members.emplace_back(offset[i] - min_offset, pool[i]);
        std::sort(klass.members.begin(), klass.members.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        klass.representative = klass.members.front().second;
        assert(klass.members.front().first == 0);
#ifndef NDEBUG
        for (const auto& [e, member] : klass.members)
            assert(apply_sigma(klass.representative, op, e).monic() == member);
#endif
        atlas.classes_.push_back(std::move(klass));
    }
    std::sort(atlas.classes_.begin(), atlas.classes_.end(), [](const Class& a, const Class& b) {
        return cmp(a.representative, b.representative) < 0;
    });
    return atlas;
}

std::vector<OrbitAtlas::Piece> OrbitAtlas::locate(const Poly& v) const {
    std::vector<Piece> pieces;
    Poly remaining = v.monic();
    for (std::size_t ci = 0; ci < classes_.size() && remaining.degree() > 0; ++ci) {
        const Poly& rep = classes_[ci].representative;
        for (long n : dispersion_set(remaining, rep, op_)) {
            Poly w = poly_gcd(remaining, apply_sigma(rep, op_, n).monic());
            if (w.degree() == 0) continue;
            pieces.push_back({ci, n, w});
            remaining = (remaining / w).monic();
            if (remaining.degree() == 0) break;
        }
    }
    if (remaining.degree() > 0)
        throw std::invalid_argument("obstruction basis does not cover all orbits of the input");
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.class_index != b.class_index) return a.class_index < b.class_index;
        return a.offset < b.offset;
    });
    return pieces;
}

}  // namespace diffcert
