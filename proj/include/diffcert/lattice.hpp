#ifndef DIFFCERT_LATTICE_HPP
#define DIFFCERT_LATTICE_HPP

#include <vector>

#include "diffcert/rational.hpp"
#include "diffcert/scalar.hpp"

namespace diffcert {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major

// Basis of the lattice {x in Z^cols : M x == 0}, via unimodular column
// reduction; the result is in canonical row-style Hermite normal form.
IntMat integer_kernel(const IntMat& m, std::size_t cols);

// Unique row-style Hermite normal form of the lattice spanned by the rows:
// row echelon, positive pivots, entries above a pivot reduced into
// [0, pivot). Rows of the input need not be independent.
IntMat hermite_rows(IntMat rows);

// Whether v lies in the lattice spanned by the rows of basis (basis in HNF).
bool lattice_contains(const IntMat& hnf_basis, const IntVec& v);

// The sublattice of the row span of `basis` on which the Z/2 character
// chi(lambda) = sum_i lambda_i * parity_i stays even.
IntMat even_character_sublattice(const IntMat& basis, const std::vector<int>& parity);

// Pairwise coprime integers > 1 such that every input (|.| > 1) is an exact
// product of powers of them (factor refinement; no factorization needed).
std::vector<Int> coprime_basis(const std::vector<Int>& inputs);

// Exponents of n (> 0) over a coprime basis; throws if n does not decompose.
IntVec factor_exponents(Int n, const std::vector<Int>& basis);

// Basis (in HNF) of {lambda in Z^d : prod z_i^{lambda_i} in T} where T is
// {1} or, when q_target is set, the group of integer powers of q. Scalars
// live in Q or Q(q) and must be nonzero.
IntMat scalar_relation_lattice(const std::vector<Scalar>& zs, const ConstField& field,
                               bool q_target);

}  // namespace diffcert

#endif
