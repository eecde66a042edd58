#ifndef TROP_MATROID_HPP
#define TROP_MATROID_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "trop/perm.hpp"
#include "trop/subsets.hpp"

namespace trop {

// A matroid of rank d on the ground set [n], stored as its sorted list of
// basis masks. Construction validates the basis-exchange axiom.
class Matroid {
  public:
    Matroid() = default;
    static Matroid from_bases(int n, int d, std::vector<Mask> bases);

    static Matroid uniform(int d, int n);
    static Matroid fano();
    static Matroid nonfano();
    static Matroid pappus();
    static Matroid hessian();
    // Rank 3 on 2^r - 1 points; the three-point circuits are the lines of
    // the projective space PG(r-1, 2).
    static Matroid generalized_fano(int r);
    // Parses "fano", "uniform(2,4)", "generalized_fano(4)", ...
    static Matroid named(const std::string& name);

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<Mask>& bases() const { return bases_; }
    bool is_basis(Mask b) const { return lookup_[b]; }
    // Rank of an arbitrary subset: max |B cap s| over bases.
    int rank_of(Mask s) const;

    Matroid relabel(const Permutation& p) const;

    // Minors by a single element, ground set relabeled order-preservingly
    // to [n-1]. If labels is non-null it receives, per new element, the
    // original label. Throws if the result would have no basis (deleting a
    // coloop / contracting a loop).
    Matroid deletion(int i, std::vector<int>* labels = nullptr) const;
    Matroid contraction(int i, std::vector<int>* labels = nullptr) const;

    // True iff the matroid polytope conv{e_B} has affine dimension n-1.
    bool is_connected() const;
    // Connected with no U(2,4)- or M(K4)-minor.
    bool is_series_parallel() const;

    // All minimal dependent sets (size at most d+1).
    std::vector<Mask> circuits() const;
    // Partition of the ground set into loops-free parallel classes
    // (single-element classes for non-parallel elements). Throws on loops.
    std::vector<Mask> parallel_classes() const;

    // Lexicographically smallest relabeling of the sorted basis list; two
    // matroids are isomorphic iff their canonical bases agree.
    std::vector<Mask> canonical_bases() const;
    bool isomorphic_to(const Matroid& other) const;

    bool operator==(const Matroid& o) const {
        return n_ == o.n_ && d_ == o.d_ && bases_ == o.bases_;
    }

  private:
    int n_ = 0, d_ = 0;
    std::vector<Mask> bases_;
    std::vector<char> lookup_;
};

// Node labels of generic tropical planes: the three graphic families of
// rank-3 matroids plus the Fano pair.
//   SetPartition4  {A,B,C,D}        quadrilateral with edge classes A..D
//   Merged         [A,B;C,D](E)     quadrilateral plus diagonal E; the two
//                                   triangles are (A,B,E) and (C,D,E)
//   K4             <A;b;(c,d,e,f)>  complete graph K4, class A and the
//                                   opposite edge b, remaining edges c..f
struct MatroidLabel {
    enum class Family { kSetPartition4, kMerged, kK4, kFano, kNonFano, kOther };
    Family family = Family::kOther;
    // Parallel classes in family-specific order (see above); empty for
    // Fano/NonFano/Other.
    std::vector<std::vector<int>> blocks;

    std::string str() const;
};

// Matches a connected rank-3 matroid against the label families.
MatroidLabel classify_label(const Matroid& m);

// Text format: first line "n d", then one basis per line as
// space-separated indices.
void write_matroid(std::ostream& os, const Matroid& m);
Matroid read_matroid(std::istream& is);

}  // namespace trop

#endif
