#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "trop/linalg.hpp"
#include "trop/lp.hpp"
#include "trop/perm.hpp"
#include "trop/rat.hpp"
#include "trop/subsets.hpp"

using namespace trop;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/4") == rat(3, 4));
    CHECK(parse_rat("-7") == rat(-7));
    CHECK(to_string(rat(6, 4)) == "3/2");
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("abc"));

    TRat inf = TRat::infinity();
    TRat two{rat(2)};
    CHECK(inf + two == inf);
    CHECK(two + two == TRat{rat(4)});
    CHECK(two < inf);
    CHECK_FALSE(inf < inf);
}

TEST_CASE("subset masks") {
    CHECK(mask_of({1, 3, 4}) == 0b1101u);
    CHECK(members(0b1101u) == std::vector<int>{1, 3, 4});
    CHECK(subset_str(mask_of({2, 5, 6})) == "256");
    CHECK(subset_str(mask_of({1, 12, 14})) == "1.12.14");
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(5, 0) == 1);

    auto subs = all_subsets(4, 2);
    REQUIRE(subs.size() == 6);
    CHECK(subs.front() == mask_of({1, 2}));
    CHECK(subs[1] == mask_of({1, 3}));
    CHECK(subs.back() == mask_of({3, 4}));
    for (int r = 0; r < (int)subs.size(); ++r) CHECK(subset_rank(4, 2, subs[r]) == r);

    SubsetTable tab(7, 3);
    CHECK(tab.size() == 35);
    for (int r = 0; r < tab.size(); ++r) CHECK(tab.rank(tab.mask(r)) == r);
}

TEST_CASE("hypersimplex vertices") {
    CHECK(hypersimplex_vertices(3, 4).size() == 4);
    CHECK(hypersimplex_vertices(3, 7).size() == 35);
    CHECK(hypersimplex_vertices(2, 5).size() == 10);
    CHECK_THROWS(hypersimplex_vertices(0, 4));
    CHECK_THROWS(hypersimplex_vertices(4, 4));

    CHECK(vertices_adjacent(mask_of({1, 2, 3}), mask_of({1, 2, 4})));
    CHECK_FALSE(vertices_adjacent(mask_of({1, 2, 3}), mask_of({1, 4, 5})));
    CHECK_FALSE(vertices_adjacent(mask_of({1, 2, 3}), mask_of({1, 2, 3})));
    CHECK_THROWS(vertices_adjacent(mask_of({1, 2}), mask_of({1, 2, 3})));
}

TEST_CASE("permutations") {
    Permutation id = Permutation::identity(4);
    Permutation p({2, 3, 1, 4});
    CHECK(p(1) == 2);
    CHECK((p * p.inverse()) == id);
    CHECK((p.inverse() * p) == id);
    Permutation q({1, 2, 4, 3});
    CHECK((p * q)(3) == 4);
    CHECK((p * q)(4) == 1);
    CHECK(p.apply(mask_of({1, 2})) == mask_of({2, 3}));
    CHECK(symmetric_group(4).size() == 24);
    CHECK_THROWS(Permutation({1, 1, 2}));
}

TEST_CASE("exact linear algebra") {
    RatMat a = {{rat(1), rat(2)}, {rat(2), rat(4)}};
    CHECK(rank(a) == 1);
    CHECK(rank(RatMat{}) == 0);

    auto x = solve({{rat(1), rat(1)}, {rat(1), rat(-1)}}, {rat(3), rat(1)});
    REQUIRE(x);
    CHECK((*x)[0] == rat(2));
    CHECK((*x)[1] == rat(1));
    CHECK_FALSE(solve(a, {rat(1), rat(3)}));

    auto ns = nullspace(a);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0][0] * rat(1) + ns[0][1] * rat(2) == 0);
}

TEST_CASE("lp: infeasible pair x >= 1, x <= 0") {
    LinearSystem sys(1);
    sys.add_ge({rat(1)}, rat(1));
    sys.add_le({rat(1)}, rat(0));
    CHECK_FALSE(lp_solve(sys).feasible);
}

TEST_CASE("lp: open segment x + y = 1, x > 0, y > 0") {
    LinearSystem sys(2);
    sys.add_eq({rat(1), rat(1)}, rat(1));
    sys.add_gt({rat(1), rat(0)}, rat(0));
    sys.add_gt({rat(0), rat(1)}, rat(0));
    LpResult r = lp_solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.dimension == 1);
    CHECK(r.witness[0] + r.witness[1] == rat(1));
    CHECK(r.witness[0] > 0);
    CHECK(r.witness[1] > 0);
}

TEST_CASE("lp: empty system is full-dimensional") {
    LinearSystem sys(3);
    LpResult r = lp_solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.dimension == 3);
}

TEST_CASE("lp: implied equalities collapse dimension") {
    // x <= 1 and x >= 1 stated as inequalities; y free in [0,2]
    LinearSystem sys(2);
    sys.add_le({rat(1), rat(0)}, rat(1));
    sys.add_ge({rat(1), rat(0)}, rat(1));
    sys.add_ge({rat(0), rat(1)}, rat(0));
    sys.add_le({rat(0), rat(1)}, rat(2));
    LpResult r = lp_solve(sys);
    REQUIRE(r.feasible);
    CHECK(r.dimension == 1);
    CHECK(r.witness[0] == rat(1));
}

TEST_CASE("lp: strict row with empty interior is infeasible") {
    // x >= 1, x <= 1, x > 1 - closure is a point but the open set is empty
    LinearSystem sys(1);
    sys.add_ge({rat(1)}, rat(1));
    sys.add_le({rat(1)}, rat(1));
    sys.add_gt({rat(1)}, rat(1));
    CHECK_FALSE(lp_feasible(sys).feasible);
}

TEST_CASE("lp: maximization") {
    // max x + y over the triangle x,y >= 0, x + 2y <= 4, 2x + y <= 4
    LinearSystem sys(2);
    sys.add_ge({rat(1), rat(0)}, rat(0));
    sys.add_ge({rat(0), rat(1)}, rat(0));
    sys.add_le({rat(1), rat(2)}, rat(4));
    sys.add_le({rat(2), rat(1)}, rat(4));
    RatVec arg;
    auto v = lp_maximize(sys, {rat(1), rat(1)}, &arg);
    REQUIRE(v);
    CHECK(*v == rat(8, 3));
    CHECK(arg[0] == rat(4, 3));

    bool unbounded = false;
    LinearSystem open(1);
    open.add_ge({rat(1)}, rat(0));
    CHECK_FALSE(lp_maximize(open, {rat(1)}, nullptr, &unbounded));
    CHECK(unbounded);
}
