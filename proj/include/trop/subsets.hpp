#ifndef TROP_SUBSETS_HPP
#define TROP_SUBSETS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// Subsets of the ground set [n] = {1,...,n} are stored as bitmasks:
// bit (i-1) set means element i is a member.  n <= 31 throughout.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

inline Mask bit(int i) { return Mask(1) << (i - 1); }

inline bool contains(Mask m, int i) { return (m >> (i - 1)) & 1; }

// Members of a mask in increasing order.
std::vector<int> members(Mask m);

// Mask from a list of elements in [n].
Mask mask_of(const std::vector<int>& elems);

// Digits of the subset concatenated, "123"; elements beyond 9 are
// separated by dots ("1.12.14").
std::string subset_str(Mask m);

long long binomial(int n, int k);

// All d-subsets of [n] as masks, in lexicographic order of the sorted
// member lists (123 < 124 < ... < 567).
std::vector<Mask> all_subsets(int n, int d);

// Lexicographic position of a d-subset among all d-subsets of [n].
// Inverse of all_subsets indexing.
int subset_rank(int n, int d, Mask m);

// Fixed-(n,d) subset indexer with O(1) mask->rank lookup.
class SubsetTable {
  public:
    SubsetTable() = default;
    SubsetTable(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    int size() const { return static_cast<int>(subsets_.size()); }
    Mask mask(int rank) const { return subsets_[rank]; }
    int rank(Mask m) const { return rank_[m]; }
    const std::vector<Mask>& masks() const { return subsets_; }

  private:
    int n_ = 0, d_ = 0;
    std::vector<Mask> subsets_;
    std::vector<int> rank_;
};

// Hypersimplex vertices: all d-subsets of [n], lexicographically ordered.
// Throws for d <= 0 or d >= n.
std::vector<Mask> hypersimplex_vertices(int d, int n);

// True iff e_S - e_T = e_i - e_j for some i, j, i.e. |S \ T| = 1.
// Throws on mismatched cardinality (the subsets must live in one
// hypersimplex; callers pass masks over the same ground set).
bool vertices_adjacent(Mask s, Mask t);

}  // namespace trop

#endif
