#ifndef DIFFCERT_ORBITS_HPP
#define DIFFCERT_ORBITS_HPP

#include <cstddef>
#include <vector>

#include "diffcert/diffops.hpp"
#include "diffcert/ratcore.hpp"

namespace diffcert {

// A sigma-coherent atlas of the orbits touched by a set of monic squarefree
// polynomials. The input factors are refined into "atoms": pairwise coprime
// monic squarefree polynomials such that two atoms sharing an orbit are
// exact sigma-shifts of each other and no atom meets its own shifts. Atoms
// related by sigma form a class; the class representative is the member
// from which every other member is reached by sigma^n with n >= 0.
class OrbitAtlas {
public:
    struct Class {
        Poly representative;
        std::vector<std::pair<long, Poly>> members;  // offset e >= 0 -> monic sigma^e(rep)
    };

    struct Piece {
        std::size_t class_index;
        long offset;   // factor divides monic sigma^offset(representative)
        Poly factor;   // monic
    };

    // Factors need not be squarefree or monic; x-factors are dropped in the
    // q-dilation case (poles at the fixed point 0 are handled separately).
    static OrbitAtlas build(const std::vector<Poly>& factors, const DifferenceOperator& op);

    const std::vector<Class>& classes() const { return classes_; }
    const DifferenceOperator& op() const { return op_; }

    // Splits a monic squarefree v (coprime to x in the q-case) into pieces
    // on the atlas orbits. Throws std::invalid_argument if part of v lies on
    // no known orbit.
    std::vector<Piece> locate(const Poly& v) const;

private:
    explicit OrbitAtlas(DifferenceOperator op) : op_(std::move(op)) {}

    DifferenceOperator op_;
    std::vector<Class> classes_;
};

}  // namespace diffcert

#endif
