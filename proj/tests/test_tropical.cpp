#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "trop/tropical.hpp"

using namespace trop;

namespace {

TropicalPluckerVector with_entry(TropicalPluckerVector pi, std::vector<int> subset, Rat v) {
    pi.at(mask_of(subset)) = TRat(v);
    return pi;
}

TropicalPluckerVector add_lineality(const TropicalPluckerVector& pi, const RatVec& c) {
    std::vector<TRat> vals;
    for (int r = 0; r < pi.size(); ++r) {
        TRat v = pi.at_rank(r);
        if (v.finite())
            for (int i : members(pi.table().mask(r))) v.val += c[i - 1];
        vals.push_back(v);
    }
    return TropicalPluckerVector(pi.d(), pi.n(), std::move(vals));
}

}  // namespace

TEST_CASE("three-term relation on (2,4)") {
    TropicalPluckerVector zero = TropicalPluckerVector::zero(2, 4);
    Mask quad = mask_of({1, 2, 3, 4});
    CHECK(attainment_mask(zero, 0, quad) == 0b111);
    CHECK(three_term_min_attained_twice(zero, 0, quad));
    CHECK(dressian_member(zero));

    TropicalPluckerVector bad = with_entry(zero, {1, 2}, rat(-1));
    CHECK(attainment_mask(bad, 0, quad) == 0b001);
    CHECK_FALSE(three_term_min_attained_twice(bad, 0, quad));
    CHECK_FALSE(dressian_member(bad));

    CHECK_THROWS(attainment_mask(zero, bit(1), quad));
}

TEST_CASE("quadruple enumeration") {
    CHECK(three_term_quadruples(2, 4).size() == 1);
    CHECK(three_term_quadruples(3, 6).size() == 6 * 5);       // C(6,1)*C(5,4)
    CHECK(three_term_quadruples(3, 7).size() == 7 * 15);      // C(7,1)*C(6,4)
    CHECK(three_term_quadruples(3, 9).size() == 9 * 70);
}

TEST_CASE("matroid indicator vectors lie in the Dressian") {
    TropicalPluckerVector fano = indicator_vector(Matroid::fano());
    int ones = 0;
    for (int r = 0; r < fano.size(); ++r)
        if (fano.at_rank(r).val == 1) ++ones;
    CHECK(fano.size() == 35);
    CHECK(ones == 7);
    CHECK(dressian_member(fano));

    TropicalPluckerVector pappus = indicator_vector(Matroid::pappus());
    ones = 0;
    for (int r = 0; r < pappus.size(); ++r)
        if (pappus.at_rank(r).val == 1) ++ones;
    CHECK(pappus.size() == 84);
    CHECK(ones == 9);
    CHECK(dressian_member(pappus));

    CHECK(indicator_vector(Matroid::uniform(3, 6)) == TropicalPluckerVector::zero(3, 6));

    // disconnected: U(1,1) + U(2,5)
    std::vector<Mask> bases;
    for (Mask p : all_subsets(5, 2)) bases.push_back(bit(1) | (p << 1));
    CHECK_THROWS(indicator_vector(Matroid::from_bases(6, 3, bases)));
}

TEST_CASE("cone signatures") {
    TropicalPluckerVector zero = TropicalPluckerVector::zero(3, 6);
    ConeSignature sig = cone_signature(zero);
    for (std::uint8_t a : sig.attain) CHECK(a == 0b111);

    TropicalPluckerVector bad = with_entry(TropicalPluckerVector::zero(2, 4), {1, 2}, rat(-1));
    CHECK_THROWS(cone_signature(bad));

    // equivariance: the relabeled Fano indicator is the Fano indicator of
    // the relabeled matroid
    Permutation g({2, 3, 4, 5, 6, 7, 1});
    TropicalPluckerVector fano = indicator_vector(Matroid::fano());
    CHECK(fano.relabel(g) == indicator_vector(Matroid::fano().relabel(g)));
    CHECK(dressian_member(fano.relabel(g)));
}

TEST_CASE("lineality invariance") {
    TropicalPluckerVector fano = indicator_vector(Matroid::fano());
    RatVec c = {rat(1), rat(-2), rat(1, 3), rat(0), rat(5), rat(-1, 7), rat(2)};
    TropicalPluckerVector shifted = add_lineality(fano, c);
    CHECK(dressian_member(shifted));
    CHECK(cone_signature(shifted) == cone_signature(fano));
    CHECK(shifted.normalized() == fano.normalized());
}

TEST_CASE("support must be a matroid") {
    // finite exactly on {12, 34}: no valid exchange
    SubsetTable table(4, 2);
    std::vector<TRat> vals(table.size());
    vals[table.rank(mask_of({1, 2}))] = TRat(rat(0));
    vals[table.rank(mask_of({3, 4}))] = TRat(rat(0));
    CHECK_THROWS(TropicalPluckerVector(2, 4, std::move(vals)));

    std::vector<TRat> none(table.size());
    CHECK_THROWS(TropicalPluckerVector(2, 4, std::move(none)));
}

TEST_CASE("pappus trinomial witness") {
    TropicalPluckerVector base = indicator_vector(Matroid::pappus());

    TropicalPluckerVector generic = with_entry(
        with_entry(with_entry(base, {1, 6, 7}, rat(1)), {2, 5, 8}, rat(2)), {3, 4, 9}, rat(4));
    CHECK(trinomial_excludes(generic));

    TropicalPluckerVector tied = with_entry(
        with_entry(with_entry(base, {1, 6, 7}, rat(3)), {2, 5, 8}, rat(3)), {3, 4, 9}, rat(5));
    CHECK_FALSE(trinomial_excludes(tied));

    CHECK_FALSE(trinomial_excludes(base));
    CHECK_THROWS(trinomial_excludes(indicator_vector(Matroid::fano())));
}

TEST_CASE("plucker file format") {
    TropicalPluckerVector fano = indicator_vector(Matroid::fano());
    std::stringstream ss;
    write_plucker(ss, fano);
    std::stringstream in(ss.str());
    CHECK(read_plucker(in) == fano);

    // missing entries default to infinity
    std::stringstream sparse("2 4\n12 0\n13 1\n14 1\n23 1\n24 1\n");
    TropicalPluckerVector pi = read_plucker(sparse);
    CHECK_FALSE(pi.at(mask_of({3, 4})).finite());
    CHECK(pi.at(mask_of({1, 2})).val == 0);

    std::stringstream dup("2 4\n12 0\n12 1\n");
    CHECK_THROWS(read_plucker(dup));
    std::stringstream badsub("2 4\n123 0\n");
    CHECK_THROWS(read_plucker(badsub));
}
