#include "trop/subsets.hpp"

#include <algorithm>

namespace trop {

std::vector<int> members(Mask m) {
    std::vector<int> out;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1) out.push_back(i);
    return out;
}

Mask mask_of(const std::vector<int>& elems) {
    Mask m = 0;
    for (int e : elems) m |= bit(e);
    return m;
}

std::string subset_str(Mask m) {
    std::string s;
    bool dots = false;
    for (int i : members(m))
        if (i > 9) dots = true;
    bool first = true;
    for (int i : members(m)) {
        if (!first && dots) s += '.';
        s += std::to_string(i);
        first = false;
    }
    return s;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Mask> all_subsets(int n, int d) {
    std::vector<Mask> out;
    std::vector<int> cur;
    // lex order of sorted member lists = recursive choice of smallest first
    auto rec = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            out.push_back(mask_of(cur));
            return;
        }
        for (int i = start; i <= n - left + 1; ++i) {
            cur.push_back(i);
            self(self, i + 1, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, 1, d);
    return out;
}

int subset_rank(int n, int d, Mask m) {
    std::vector<int> mem = members(m);
    int rank = 0, prev = 0;
    for (int pos = 0; pos < d; ++pos) {
        for (int v = prev + 1; v < mem[pos]; ++v)
            rank += static_cast<int>(binomial(n - v, d - pos - 1));
        prev = mem[pos];
    }
    return rank;
}

SubsetTable::SubsetTable(int n, int d) : n_(n), d_(d), subsets_(all_subsets(n, d)) {
    rank_.assign(Mask(1) << n, -1);
    for (int r = 0; r < static_cast<int>(subsets_.size()); ++r) rank_[subsets_[r]] = r;
}

std::vector<Mask> hypersimplex_vertices(int d, int n) {
    if (d <= 0 || d >= n) throw std::invalid_argument("hypersimplex requires 1 <= d <= n-1");
    return all_subsets(n, d);
}

bool vertices_adjacent(Mask s, Mask t) {
    if (popcount(s) != popcount(t)) throw std::invalid_argument("vertices_adjacent: rank mismatch");
    return popcount(s & ~t) == 1;
}

}  // namespace trop
