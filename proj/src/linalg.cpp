#include "trop/linalg.hpp"

#include <vector>

namespace trop {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(m[r], m[p]);
        Rat inv = m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve(RatMat a, RatVec b) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int i = 0; i < rows; ++i) a[i].push_back(b[i]);
    std::vector<int> pivots = rref(a);
    // inconsistent iff a pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVec x(cols, Rat(0));
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

RatMat nullspace(RatMat a) {
    if (a.empty()) return {};
    int cols = static_cast<int>(a[0].size());
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMat basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(cols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < static_cast<int>(pivots.size()); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace trop
