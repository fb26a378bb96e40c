#ifndef DIFFCERT_LINALG_HPP
#define DIFFCERT_LINALG_HPP

#include <optional>
#include <vector>

#include "diffcert/scalar.hpp"

namespace diffcert {

using ScalarVec = std::vector<Scalar>;
using ScalarMat = std::vector<ScalarVec>;  // row major

// Reduced row echelon form (in place); returns pivot column per rank row.
std::vector<std::size_t> scalar_rref(ScalarMat& m);

// Canonical kernel basis of the linear map with matrix m (rows x cols),
// one vector per free column, ordered by free column.
ScalarMat scalar_kernel(ScalarMat m, std::size_t cols);

// A particular solution of m x == rhs, if consistent.
std::optional<ScalarVec> scalar_solve(ScalarMat m, ScalarVec rhs);

}  // namespace diffcert

#endif
