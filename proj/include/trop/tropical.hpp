#ifndef TROP_TROPICAL_HPP
#define TROP_TROPICAL_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "trop/matroid.hpp"
#include "trop/rat.hpp"
#include "trop/subsets.hpp"

namespace trop {

// A tropical Pluecker vector: one value in Q u {inf} per d-subset of [n].
// The support (finite entries) must be the basis set of a matroid; this is
// checked on construction.
class TropicalPluckerVector {
  public:
    TropicalPluckerVector(int d, int n, std::vector<TRat> values);

    // All-zero vector (support U(d,n)).
    static TropicalPluckerVector zero(int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }
    int size() const { return table_.size(); }
    const SubsetTable& table() const { return table_; }

    const TRat& at(Mask s) const { return values_[table_.rank(s)]; }
    const TRat& at_rank(int r) const { return values_[r]; }
    TRat& at(Mask s) { return values_[table_.rank(s)]; }
    const std::vector<TRat>& values() const { return values_; }

    Matroid support_matroid() const;
    bool finite() const;

    // (g.pi)(S) = pi(g^{-1} S)
    TropicalPluckerVector relabel(const Permutation& g) const;

    // Subtracts the exact least-squares projection onto the lineality
    // space spanned by the incidence vectors v_i(S) = [i in S]; the result
    // is the canonical representative of pi modulo lineality. Finite
    // vectors only.
    TropicalPluckerVector normalized() const;

    bool operator==(const TropicalPluckerVector& o) const {
        return d_ == o.d_ && n_ == o.n_ && values_ == o.values_;
    }

  private:
    int d_ = 0, n_ = 0;
    SubsetTable table_;
    std::vector<TRat> values_;
};

// The quadruples (S; {i,j,k,l}) indexing the three-term relations:
// S a (d-2)-subset, {i,j,k,l} a 4-subset of the complement, both in
// lexicographic order.
std::vector<std::pair<Mask, Mask>> three_term_quadruples(int d, int n);

// Which of the three terms m1 = pi(Sij)+pi(Skl), m2 = pi(Sik)+pi(Sjl),
// m3 = pi(Sil)+pi(Sjk) attain the minimum, as bits 0,1,2; 0 if the
// minimum is infinite.
std::uint8_t attainment_mask(const TropicalPluckerVector& pi, Mask s, Mask quad);

bool three_term_min_attained_twice(const TropicalPluckerVector& pi, Mask s, Mask quad);

// True iff every three-term relation has its minimum infinite or attained
// at least twice.
bool dressian_member(const TropicalPluckerVector& pi);

// The per-quadruple attainment sets; two vectors lie in the same cell of
// the Pluecker fan iff their signatures agree.
struct ConeSignature {
    int d = 0, n = 0;
    std::vector<std::uint8_t> attain;  // indexed like three_term_quadruples

    bool operator==(const ConeSignature&) const = default;
};

// Throws if pi is not in the Dressian.
ConeSignature cone_signature(const TropicalPluckerVector& pi);

// lambda_M: 0 on bases, 1 off. Throws for disconnected M.
TropicalPluckerVector indicator_vector(const Matroid& m);

// For a vector with the Pappus support (d=3, n=9): true iff the tropical
// evaluation of the three degree-6 monomials of the Pappus trinomial
// attains its minimum exactly once, certifying that pi is not in the
// tropical variety of the Pappus ideal.
bool trinomial_excludes(const TropicalPluckerVector& pi);

// File format: line 1 "d n", then one line per d-subset "indices value"
// with value "p/q", an integer, or "inf"; omitted subsets default to inf.
void write_plucker(std::ostream& os, const TropicalPluckerVector& pi);
TropicalPluckerVector read_plucker(std::istream& is);

}  // namespace trop

#endif
