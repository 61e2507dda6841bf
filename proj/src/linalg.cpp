#include "adsfam/linalg.hpp"

#include <utility>

namespace adsfam {

int rref_in_place(RFMatrix& m) {
    if (m.empty()) return 0;
    size_t rows = m.size();
    size_t cols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        // Prefer a low-degree pivot to keep intermediate degrees down.
        size_t piv = rows;
        int best = -1;
        for (size_t r = row; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            int deg = m[r][col].num().degree() + m[r][col].den().degree();
            if (piv == rows || deg < best) {
                piv = r;
                best = deg;
            }
        }
        if (piv == rows) continue;
        std::swap(m[piv], m[row]);
        RatFunc inv = RatFunc(1) / m[row][col];
        for (size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            RatFunc f = m[r][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

std::vector<std::vector<RatFunc>> nullspace(RFMatrix m, int cols) {
    size_t nc = static_cast<size_t>(cols);
    for (auto& r : m) r.resize(nc, RatFunc());
    int rank = rref_in_place(m);
    std::vector<int> pivot_of_col(nc, -1);
    {
        size_t row = 0;
        for (size_t c = 0; c < nc && row < m.size(); ++c)
            if (row < static_cast<size_t>(rank) && !m[row][c].is_zero() &&
                m[row][c] == RatFunc(1)) {
                // confirm it is really the pivot: all earlier entries in the row are 0
                bool lead = true;
                for (size_t cc = 0; cc < c; ++cc)
                    if (!m[row][cc].is_zero()) {
                        lead = false;
                        break;
                    }
                if (lead) {
                    pivot_of_col[c] = static_cast<int>(row);
                    ++row;
                }
            }
    }
    std::vector<std::vector<RatFunc>> basis;
    for (size_t free_col = 0; free_col < nc; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<RatFunc> v(nc, RatFunc());
        v[free_col] = RatFunc(1);
        for (size_t c = 0; c < nc; ++c)
            if (pivot_of_col[c] >= 0)
                v[c] = -m[static_cast<size_t>(pivot_of_col[c])][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace adsfam
