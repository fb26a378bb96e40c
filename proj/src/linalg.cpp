#include "diffcert/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace diffcert {

std::vector<std::size_t> scalar_rref(ScalarMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t i = rank; i < m.size(); ++i)
            if (!m[i][col].is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        Scalar inv = Scalar(1) / m[rank][col];
        for (auto& x : m[rank]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col].is_zero()) continue;
            Scalar f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        pivots.push_back(col);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

ScalarMat scalar_kernel(ScalarMat m, std::size_t cols) {
    for (auto& row : m) assert(row.size() == cols);
    std::vector<std::size_t> pivots = scalar_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    ScalarMat kernel;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        ScalarVec v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::optional<ScalarVec> scalar_solve(ScalarMat m, ScalarVec rhs) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(rhs[i]);
    std::vector<std::size_t> pivots = scalar_rref(m);
    // Inconsistent iff a pivot lands in the appended column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    ScalarVec x(cols, Scalar(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
    return x;
}

}  // namespace diffcert
