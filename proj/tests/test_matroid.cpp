#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "trop/matroid.hpp"

using namespace trop;

namespace {

// Cycle matroid of a multigraph: element e lives on edge edge_of[e-1]
// (vertex pairs), bases = spanning-tree transversals.
Matroid multigraph_matroid(int n, int vertices, const std::vector<std::pair<int, int>>& edge_of) {
    std::vector<Mask> bases;
    int rank = vertices - 1;
    for (Mask s : all_subsets(n, rank)) {
        // union-find over vertices; s is a basis iff acyclic
        std::vector<int> parent(vertices + 1);
        for (int v = 1; v <= vertices; ++v) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool acyclic = true;
        for (int e : members(s)) {
            int a = find(edge_of[e - 1].first), b = find(edge_of[e - 1].second);
            if (a == b) {
                acyclic = false;
                break;
            }
            parent[a] = b;
        }
        if (acyclic) bases.push_back(s);
    }
    return Matroid::from_bases(n, rank, bases);
}

// Quadrilateral with edge classes A,B,C,D in cyclic order.
Matroid quad_matroid(const std::vector<std::vector<int>>& blocks, int n) {
    std::vector<std::pair<int, int>> edges(n);
    std::vector<std::pair<int, int>> cyc = {{1, 2}, {2, 3}, {3, 4}, {4, 1}};
    for (int b = 0; b < 4; ++b)
        for (int e : blocks[b]) edges[e - 1] = cyc[b];
    return multigraph_matroid(n, 4, edges);
}

}  // namespace

TEST_CASE("from_bases validates the exchange axiom") {
    Matroid u24 = Matroid::from_bases(4, 2, all_subsets(4, 2));
    CHECK(u24.bases().size() == 6);
    CHECK(u24 == Matroid::uniform(2, 4));
    CHECK_THROWS(Matroid::from_bases(4, 2, {mask_of({1, 2}), mask_of({3, 4})}));
    CHECK_THROWS(Matroid::from_bases(4, 2, {}));
    CHECK_THROWS(Matroid::from_bases(4, 2, {mask_of({1, 2, 3})}));
}

TEST_CASE("named matroids have the right basis counts") {
    CHECK(Matroid::fano().bases().size() == 28);
    CHECK(Matroid::fano().circuits().size() == 7 + 7);  // 7 lines + 7 complements of lines
    CHECK(Matroid::nonfano().bases().size() == 29);
    CHECK(Matroid::pappus().bases().size() == 75);
    CHECK(Matroid::hessian().bases().size() == 72);

    Matroid f4 = Matroid::generalized_fano(4);
    CHECK(f4.n() == 15);
    CHECK((int)binomial(15, 3) - (int)f4.bases().size() == 35);

    CHECK(Matroid::named("uniform(2,4)") == Matroid::uniform(2, 4));
    CHECK(Matroid::named("fano") == Matroid::fano());
    CHECK_THROWS(Matroid::named("octahedron"));
    CHECK_THROWS(Matroid::generalized_fano(2));
}

TEST_CASE("basis and nonbasis counts match the closed formulas") {
    auto beta = [](int r) { return ((1 << r) - 1) * ((1 << r) - 2) * ((1 << r) - 4) / 6; };
    auto nu = [](int r) { return ((1 << r) - 1) * ((1 << r) - 2) / 6; };
    for (int r = 2; r <= 4; ++r) CHECK(beta(r) + nu(r) == binomial((1 << r) - 1, 3));
    CHECK(beta(3) == 28);
    CHECK(nu(3) == 7);
    CHECK(beta(4) == 420);
    CHECK(nu(4) == 35);
    CHECK((int)Matroid::fano().bases().size() == beta(3));
}

TEST_CASE("minors") {
    CHECK(Matroid::uniform(3, 7).deletion(7) == Matroid::uniform(3, 6));
    CHECK(Matroid::uniform(3, 7).contraction(7) == Matroid::uniform(2, 6));

    std::vector<int> labels;
    Matroid d = Matroid::fano().deletion(3, &labels);
    CHECK(labels == std::vector<int>{1, 2, 4, 5, 6, 7});
    CHECK(d.n() == 6);

    for (int i = 1; i <= 7; ++i) {
        Matroid c = Matroid::fano().contraction(i);
        CHECK(c.d() == 2);
        auto classes = c.parallel_classes();
        CHECK(classes.size() == 3);
        for (Mask cls : classes) CHECK(popcount(cls) == 2);
    }

    // a coloop cannot be deleted, a loop cannot be contracted
    Matroid coloop = Matroid::from_bases(3, 2, {mask_of({1, 3}), mask_of({2, 3})});
    CHECK_THROWS(coloop.deletion(3));
    Matroid loop = Matroid::from_bases(3, 2, {mask_of({1, 2})});
    CHECK_THROWS(loop.contraction(3));
}

TEST_CASE("deletions commute under the induced relabeling") {
    Matroid m = Matroid::fano();
    for (auto [i, j] : {std::pair{2, 5}, {1, 7}, {3, 4}}) {
        // deleting i then (original) j vs j then (original) i
        Matroid a = m.deletion(i).deletion(j > i ? j - 1 : j);
        Matroid b = m.deletion(j).deletion(i > j ? i - 1 : i);
        CHECK(a == b);
    }
}

TEST_CASE("connectivity") {
    CHECK(Matroid::uniform(3, 6).is_connected());
    CHECK(Matroid::pappus().is_connected());

    // U(1,1) + U(2,5): element 1 is a coloop
    std::vector<Mask> bases;
    for (Mask p : all_subsets(5, 2)) bases.push_back(bit(1) | (p << 1));
    CHECK_FALSE(Matroid::from_bases(6, 3, bases).is_connected());
}

TEST_CASE("connectivity agrees with the common-circuit definition") {
    std::vector<Matroid> sample = {Matroid::uniform(2, 4), Matroid::uniform(3, 6),
                                   Matroid::fano().deletion(1),
                                   quad_matroid({{1, 2}, {3}, {4, 5}, {6}}, 6)};
    {
        std::vector<Mask> bases;
        for (Mask p : all_subsets(5, 2)) bases.push_back(bit(1) | (p << 1));
        sample.push_back(Matroid::from_bases(6, 3, bases));
    }
    for (const Matroid& m : sample) {
        auto circuits = m.circuits();
        bool oracle = true;
        for (int i = 1; i <= m.n() && oracle; ++i)
            for (int j = i + 1; j <= m.n() && oracle; ++j) {
                bool common = false;
                for (Mask c : circuits)
                    if (contains(c, i) && contains(c, j)) common = true;
                if (!common) oracle = false;
            }
        if (m.n() == 1) oracle = true;
        CHECK(m.is_connected() == oracle);
    }
}

TEST_CASE("series-parallel test") {
    CHECK_FALSE(Matroid::uniform(2, 4).is_series_parallel());

    Matroid quad = quad_matroid({{1, 2}, {3}, {4, 5}, {6}}, 6);
    CHECK(quad.is_series_parallel());

    // K4 with vertex classes: contains M(K4) by construction
    Matroid k4 = multigraph_matroid(6, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(k4.is_series_parallel());
    CHECK_FALSE(Matroid::fano().is_series_parallel());
}

TEST_CASE("node label classification") {
    Matroid quad = quad_matroid({{1, 2}, {3}, {4, 5}, {6}}, 6);
    MatroidLabel l1 = classify_label(quad);
    CHECK(l1.family == MatroidLabel::Family::kSetPartition4);
    CHECK(l1.blocks.size() == 4);
    CHECK(l1.str() == "{12,3,45,6}");

    // quadrilateral 1-2-3-4 plus diagonal 1-3 carrying class E = {5,6}
    Matroid merged = multigraph_matroid(6, 4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {1, 3}});
    MatroidLabel l2 = classify_label(merged);
    CHECK(l2.family == MatroidLabel::Family::kMerged);
    CHECK(l2.blocks[4] == std::vector<int>{5, 6});
    // the two triangles are {1,2,E} and {3,4,E}
    CHECK(l2.blocks[0] == std::vector<int>{1});
    CHECK(l2.blocks[1] == std::vector<int>{2});
    CHECK(l2.blocks[2] == std::vector<int>{3});
    CHECK(l2.blocks[3] == std::vector<int>{4});

    // K4 whose edge 1-2 carries the doubled class A = {1,7}
    Matroid k4l =
        multigraph_matroid(7, 4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 2}});
    MatroidLabel l3 = classify_label(k4l);
    CHECK(l3.family == MatroidLabel::Family::kK4);
    CHECK(l3.blocks[0] == std::vector<int>{1, 7});
    CHECK(l3.blocks[1] == std::vector<int>{6});  // edge 3-4 is opposite edge 1-2

    CHECK(classify_label(Matroid::fano()).family == MatroidLabel::Family::kFano);
    CHECK(classify_label(Matroid::nonfano()).family == MatroidLabel::Family::kNonFano);
    CHECK(classify_label(Matroid::uniform(3, 7)).family == MatroidLabel::Family::kOther);
    CHECK(classify_label(Matroid::uniform(3, 4)).family ==
          MatroidLabel::Family::kSetPartition4);
}

TEST_CASE("facet restrictions of named matroid polytopes are matroid polytopes") {
    for (const char* name : {"fano", "nonfano", "pappus", "hessian", "uniform(3,6)"}) {
        Matroid m = Matroid::named(name);
        for (int i = 1; i <= m.n(); ++i) {
            // x_i = 0 and x_i = 1 facets; from_bases inside throws if the
            // restriction were not a matroid polytope
            bool has_without = false, has_with = false;
            for (Mask b : m.bases()) (contains(b, i) ? has_with : has_without) = true;
            if (has_without) CHECK_NOTHROW(m.deletion(i));
            if (has_with) CHECK_NOTHROW(m.contraction(i));
        }
    }
}

TEST_CASE("canonical form and isomorphism") {
    Matroid f = Matroid::fano();
    Permutation p({3, 1, 7, 2, 6, 4, 5});
    CHECK(f.relabel(p).isomorphic_to(f));
    CHECK_FALSE(f.isomorphic_to(Matroid::nonfano()));
    CHECK(f.relabel(p).canonical_bases() == f.canonical_bases());
}

TEST_CASE("text format round trip") {
    std::stringstream ss;
    write_matroid(ss, Matroid::fano());
    std::string dump = ss.str();
    CHECK(dump.substr(0, 4) == "7 3\n");
    std::stringstream in(dump);
    CHECK(read_matroid(in) == Matroid::fano());

    std::stringstream bad("4 2\n1 2\n3 4\n");
    CHECK_THROWS(read_matroid(bad));
}
