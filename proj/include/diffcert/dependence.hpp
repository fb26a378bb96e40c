#ifndef DIFFCERT_DEPENDENCE_HPP
#define DIFFCERT_DEPENDENCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "diffcert/lattice.hpp"
#include "diffcert/linalg.hpp"
#include "diffcert/summability.hpp"

namespace diffcert {

// Symbolic difference Galois group of the classified system.
struct GroupDescriptor {
    enum class Kind { Trivial, Gm, CyclicMu, Ga, SubtorusOfGm, SubspaceOfGa, Product };

    Kind kind = Kind::Trivial;
    long mu_order = 0;       // CyclicMu
    long ambient = 0;        // d of Gm^d / Ga^d
    IntMat lattice;          // subtorus: integer relation rows, Hermite normal form
    ScalarMat relations;     // subspace: constant relation rows, reduced echelon
    std::vector<GroupDescriptor> factors;

    static GroupDescriptor trivial() { return {}; }
    static GroupDescriptor gm();
    static GroupDescriptor ga();
    static GroupDescriptor cyclic(long n);
    static GroupDescriptor subtorus(long ambient, IntMat lattice);
    static GroupDescriptor subspace(long ambient, ScalarMat relations);
    static GroupDescriptor product(std::vector<GroupDescriptor> factors);

    long dimension() const;
    std::string name() const;
};

// dim G == trdeg of the associated solution-field extension.
long transcendence_degree(const GroupDescriptor& g);

struct AdditiveCertificate {
    ScalarVec lambda;  // first nonzero entry 1
    RatFun g;          // sum lambda_i f_i == sigma(g) - g
};

struct MultiplicativeCertificate {
    IntVec lambda;
    RatFun g;  // prod a_i^{lambda_i} == sigma(g)/g, exactly
};

struct MultiplicativeLattice {
    IntMat basis;  // canonical HNF rows; empty means independence
    std::vector<MultiplicativeCertificate> certificates;
};

// A nonzero constant relation sum lambda_i f_i == sigma(g) - g, if any.
std::optional<AdditiveCertificate> additive_dependence(const std::vector<RatFun>& fs,
                                                       const DifferenceOperator& op);

// Canonical basis of {lambda : prod a_i^{lambda_i} == sigma(g)/g solvable
// with strict constant}, each basis vector with its witness g.
MultiplicativeLattice multiplicative_dependence(const std::vector<RatFun>& as,
                                                const DifferenceOperator& op);

// Galois group of tau(y) == a y: the full torus unless a is torsion.
GroupDescriptor galois_rank_one_mult(const RatFun& a, const DifferenceOperator& op);

// Galois group of tau(y) == y + f: trivial iff f is summable.
GroupDescriptor galois_rank_one_add(const RatFun& f, const DifferenceOperator& op);

GroupDescriptor classify_diagonal(const std::vector<RatFun>& as, const DifferenceOperator& op);
GroupDescriptor classify_unipotent(const std::vector<RatFun>& fs, const DifferenceOperator& op);

// Jordan block with eigenvalue a and the given size: product of the rank-one
// multiplicative group and the additive group of the derivative chain of
// dlog a. The two parts are classified independently.
GroupDescriptor classify_jordan(const RatFun& a, long size, const DifferenceOperator& op);

}  // namespace diffcert

#endif
