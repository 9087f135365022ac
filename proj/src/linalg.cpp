#include "bautin/linalg.hpp"

namespace bautin {

namespace {

// Reduce to row-echelon form in place; returns the pivot column per row used.
int eliminate(RatMat& m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        Rat inv = m[r][c].inv();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

}  // namespace

int rank(RatMat m) { return eliminate(m); }

int rank_augmented(const RatMat& m, const RatVec& col) {
    RatMat a = m;
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(col[i]);
    return eliminate(a);
}

RatVec solve_least_structured(RatMat m, RatVec rhs) {
    const std::size_t rows = m.size();
    if (rows == 0) return {};
    const std::size_t cols = m[0].size();
    for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
    eliminate(m);
    // Read the reduced system: each pivot row gives one solved unknown;
    // inconsistency shows as a row (0 .. 0 | nonzero).
    RatVec x(cols, Rat(0));
    std::vector<bool> solved(cols, false);
    for (std::size_t i = 0; i < rows; ++i) {
        std::size_t c = 0;
        while (c < cols && m[i][c].is_zero()) ++c;
        if (c == cols) {
            if (!m[i][cols].is_zero()) return {};  // inconsistent
            continue;
        }
        // free variables are held at zero; require the pivot row to involve
        // only the pivot unknown among unsolved columns ahead
        x[c] = m[i][cols];
        for (std::size_t j = c + 1; j < cols; ++j)
            if (!m[i][j].is_zero()) x[c] -= m[i][j] * x[j];  // x[j] defaults 0
        solved[c] = true;
    }
    return x;
}

}  // namespace bautin
