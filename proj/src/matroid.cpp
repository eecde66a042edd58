#include "trop/matroid.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trop/linalg.hpp"
#include "trop/rat.hpp"

namespace trop {

Matroid Matroid::from_bases(int n, int d, std::vector<Mask> bases) {
    if (n < 1 || n > 31 || d < 0 || d > n) throw std::invalid_argument("matroid: bad (n,d)");
    if (bases.empty()) throw std::invalid_argument("matroid: no bases");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());

    Matroid m;
    m.n_ = n;
    m.d_ = d;
    m.lookup_.assign(Mask(1) << n, 0);
    for (Mask b : bases) {
        if (popcount(b) != d || (b >> n) != 0)
            throw std::invalid_argument("matroid: basis " + subset_str(b) + " is not a " +
                                        std::to_string(d) + "-subset of [" + std::to_string(n) +
                                        "]");
        m.lookup_[b] = 1;
    }
    m.bases_ = std::move(bases);

    for (Mask b1 : m.bases_)
        for (Mask b2 : m.bases_)
            for (int i : members(b1 & ~b2)) {
                bool found = false;
                for (int j : members(b2 & ~b1))
                    if (m.lookup_[(b1 ^ bit(i)) | bit(j)]) {
                        found = true;
                        break;
                    }
                if (!found)
                    throw std::invalid_argument("matroid: exchange axiom fails for bases " +
                                                subset_str(b1) + ", " + subset_str(b2) +
                                                " at element " + std::to_string(i));
            }
    return m;
}

Matroid Matroid::uniform(int d, int n) { return from_bases(n, d, all_subsets(n, d)); }

namespace {

// Bases = all triples of [n] except the given circuits.
Matroid from_nonbases(int n, const std::vector<Mask>& nonbases) {
    std::vector<Mask> bases;
    for (Mask t : all_subsets(n, 3))
        if (std::find(nonbases.begin(), nonbases.end(), t) == nonbases.end()) bases.push_back(t);
    return Matroid::from_bases(n, 3, bases);
}

std::vector<Mask> pappus_lines() {
    std::vector<Mask> lines;
    for (const char* s : {"123", "148", "159", "247", "269", "357", "368", "456", "789"}) {
        std::vector<int> elems;
        for (const char* p = s; *p; ++p) elems.push_back(*p - '0');
        lines.push_back(mask_of(elems));
    }
    return lines;
}

}  // namespace

Matroid Matroid::generalized_fano(int r) {
    // r = 2 would have every point triple collinear, hence no basis at all
    // (the basis-count formula gives 0), so rank 3 starts at r = 3.
    if (r < 3 || r > 5) throw std::invalid_argument("generalized_fano: need 3 <= r <= 5");
    // Points are the nonzero vectors of GF(2)^r, identified with 1..2^r-1;
    // lines are the triples {a, b, a xor b}.
    int n = (1 << r) - 1;
    std::vector<Mask> nonbases;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if ((a ^ b) > b) nonbases.push_back(mask_of({a, b, a ^ b}));
    return from_nonbases(n, nonbases);
}

Matroid Matroid::fano() { return generalized_fano(3); }

Matroid Matroid::nonfano() {
    // The Fano plane with one line (here {3,5,6}) declared independent.
    std::vector<Mask> nonbases;
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b)
            if ((a ^ b) > b && !(a == 3 && b == 5)) nonbases.push_back(mask_of({a, b, a ^ b}));
    return from_nonbases(7, nonbases);
}

Matroid Matroid::pappus() { return from_nonbases(9, pappus_lines()); }

Matroid Matroid::hessian() {
    // The affine plane AG(2,3): the nine Pappus lines plus three more.
    std::vector<Mask> lines = pappus_lines();
    lines.push_back(mask_of({1, 6, 7}));
    lines.push_back(mask_of({2, 5, 8}));
    lines.push_back(mask_of({3, 4, 9}));
    return from_nonbases(9, lines);
}

Matroid Matroid::named(const std::string& name) {
    auto args = [&](std::size_t open) {
        if (name.back() != ')') throw std::invalid_argument("matroid name: '" + name + "'");
        std::vector<int> out;
        std::stringstream ss(name.substr(open + 1, name.size() - open - 2));
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
        return out;
    };
    if (name == "fano") return fano();
    if (name == "nonfano") return nonfano();
    if (name == "pappus") return pappus();
    if (name == "hessian") return hessian();
    if (name.rfind("uniform(", 0) == 0) {
        auto a = args(7);
        if (a.size() != 2) throw std::invalid_argument("uniform needs (d,n)");
        return uniform(a[0], a[1]);
    }
    if (name.rfind("generalized_fano(", 0) == 0) {
        auto a = args(16);
        if (a.size() != 1) throw std::invalid_argument("generalized_fano needs (r)");
        return generalized_fano(a[0]);
    }
    throw std::invalid_argument("unknown matroid name: '" + name + "'");
}

int Matroid::rank_of(Mask s) const {
    int best = 0;
    for (Mask b : bases_) best = std::max(best, popcount(b & s));
    return best;
}

Matroid Matroid::relabel(const Permutation& p) const {
    if (p.n() != n_) throw std::invalid_argument("relabel: permutation degree mismatch");
    std::vector<Mask> bases;
    bases.reserve(bases_.size());
    for (Mask b : bases_) bases.push_back(p.apply(b));
    return from_bases(n_, d_, std::move(bases));
}

Matroid Matroid::deletion(int i, std::vector<int>* labels) const {
    if (i < 1 || i > n_) throw std::invalid_argument("deletion: element out of range");
    std::vector<Mask> bases;
    Mask low = bit(i) - 1;
    for (Mask b : bases_)
        if (!contains(b, i)) bases.push_back((b & low) | ((b >> 1) & ~low));
    if (bases.empty()) throw std::runtime_error("deletion of a coloop leaves no basis");
    if (labels) {
        labels->clear();
        for (int e = 1; e <= n_; ++e)
            if (e != i) labels->push_back(e);
    }
    return from_bases(n_ - 1, d_, std::move(bases));
}

Matroid Matroid::contraction(int i, std::vector<int>* labels) const {
    if (i < 1 || i > n_) throw std::invalid_argument("contraction: element out of range");
    std::vector<Mask> bases;
    Mask low = bit(i) - 1;
    for (Mask b : bases_)
        if (contains(b, i)) {
            Mask c = b ^ bit(i);
            bases.push_back((c & low) | ((c >> 1) & ~low));
        }
    if (bases.empty()) throw std::runtime_error("contraction of a loop leaves no basis");
    if (labels) {
        labels->clear();
        for (int e = 1; e <= n_; ++e)
            if (e != i) labels->push_back(e);
    }
    return from_bases(n_ - 1, d_ - 1, std::move(bases));
}

bool Matroid::is_connected() const {
    // dim conv{e_B} = n-1 iff connected.
    if (bases_.size() == 1) return n_ == 1;
    RatMat rows;
    for (std::size_t k = 1; k < bases_.size(); ++k) {
        RatVec row(n_, Rat(0));
        for (int e = 1; e <= n_; ++e)
            row[e - 1] = Rat(int(contains(bases_[k], e)) - int(contains(bases_[0], e)));
        rows.push_back(std::move(row));
    }
    return rank(rows) == n_ - 1;
}

std::vector<Mask> Matroid::circuits() const {
    std::vector<Mask> out;
    auto independent = [&](Mask s) { return rank_of(s) == popcount(s); };
    for (Mask s = 1; s < (Mask(1) << n_); ++s) {
        if (popcount(s) > d_ + 1 || independent(s)) continue;
        bool minimal = true;
        for (int i : members(s))
            if (!independent(s ^ bit(i))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(s);
    }
    return out;
}

std::vector<Mask> Matroid::parallel_classes() const {
    std::vector<Mask> classes;
    Mask seen = 0;
    for (int i = 1; i <= n_; ++i) {
        if (rank_of(bit(i)) == 0) throw std::runtime_error("parallel_classes: loop present");
        if (contains(seen, i)) continue;
        Mask cls = bit(i);
        for (int j = i + 1; j <= n_; ++j)
            if (!contains(seen, j) && rank_of(bit(i) | bit(j)) == 1) cls |= bit(j);
        seen |= cls;
        classes.push_back(cls);
    }
    return classes;
}

std::vector<Mask> Matroid::canonical_bases() const {
    std::vector<Mask> best;
    for (const Permutation& p : symmetric_group(n_)) {
        std::vector<Mask> cand;
        cand.reserve(bases_.size());
        for (Mask b : bases_) cand.push_back(p.apply(b));
        std::sort(cand.begin(), cand.end());
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

bool Matroid::isomorphic_to(const Matroid& other) const {
    return n_ == other.n_ && d_ == other.d_ && bases_.size() == other.bases_.size() &&
           canonical_bases() == other.canonical_bases();
}

namespace {

// Rank of a subset in the minor M/C (restricted anywhere).
int minor_rank(const Matroid& m, Mask c, Mask s) { return m.rank_of(s | c) - m.rank_of(c); }

bool has_u24_minor(const Matroid& m) {
    Mask all = (Mask(1) << m.n()) - 1;
    for (Mask t : all_subsets(m.n(), 4)) {
        Mask rest = all & ~t;
        // Enumerate contraction sets; deletions are implicit in restricting
        // to t.
        for (Mask c = 0;; c = (c - rest) & rest) {
            bool ok = minor_rank(m, c, t) == 2;
            for (int i : members(t))
                if (!ok) break;
                else
                    ok = minor_rank(m, c, bit(i)) == 1;
            if (ok)
                for (int i : members(t))
                    for (int j : members(t & ~(bit(i) | (bit(i) - 1)))) {
                        if (minor_rank(m, c, bit(i) | bit(j)) != 2) ok = false;
                    }
            if (ok) return true;
            if (c == rest) break;
        }
    }
    return false;
}

const Matroid& k4_matroid() {
    // Edges of K4 labeled 1..6 as 12,13,14,23,24,34; the four triangles
    // are the nonbases.
    static const Matroid k4 = [] {
        std::vector<Mask> bases;
        std::vector<Mask> tri = {mask_of({1, 2, 4}), mask_of({1, 3, 5}), mask_of({2, 3, 6}),
                                 mask_of({4, 5, 6})};
        for (Mask t : all_subsets(6, 3))
            if (std::find(tri.begin(), tri.end(), t) == tri.end()) bases.push_back(t);
        return Matroid::from_bases(6, 3, bases);
    }();
    return k4;
}

bool has_k4_minor(const Matroid& m) {
    if (m.n() < 6 || m.d() < 3) return false;
    static const std::vector<Mask> k4_canon = k4_matroid().canonical_bases();
    Mask all = (Mask(1) << m.n()) - 1;
    for (Mask t : all_subsets(m.n(), 6)) {
        Mask rest = all & ~t;
        for (Mask c = 0;; c = (c - rest) & rest) {
            if (minor_rank(m, c, t) == 3) {
                std::vector<Mask> bases;
                std::vector<int> mem = members(t);
                for (Mask b3 : all_subsets(6, 3)) {
                    Mask s = 0;
                    for (int i : members(b3)) s |= bit(mem[i - 1]);
                    if (minor_rank(m, c, s) == 3) bases.push_back(b3);
                }
                if (bases.size() == 16 &&
                    Matroid::from_bases(6, 3, bases).canonical_bases() == k4_canon)
                    return true;
            }
            if (c == rest) break;
        }
    }
    return false;
}

}  // namespace

bool Matroid::is_series_parallel() const {
    return is_connected() && !has_u24_minor(*this) && !has_k4_minor(*this);
}

std::string MatroidLabel::str() const {
    auto blk = [&](int i) { return subset_str(mask_of(blocks[i])); };
    switch (family) {
        case Family::kSetPartition4:
            return "{" + blk(0) + "," + blk(1) + "," + blk(2) + "," + blk(3) + "}";
        case Family::kMerged:
            return "[" + blk(0) + "," + blk(1) + ";" + blk(2) + "," + blk(3) + "](" + blk(4) + ")";
        case Family::kK4:
            return "<" + blk(0) + ";" + blk(1) + ";(" + blk(2) + "," + blk(3) + "," + blk(4) +
                   "," + blk(5) + ")>";
        case Family::kFano:
            return "Fano";
        case Family::kNonFano:
            return "NonFano";
        default:
            return "Other";
    }
}

MatroidLabel classify_label(const Matroid& m) {
    MatroidLabel out;
    if (m.d() != 3) return out;

    if (m.n() == 7 && m.bases().size() == 28 &&
        m.canonical_bases() == Matroid::fano().canonical_bases()) {
        out.family = MatroidLabel::Family::kFano;
        return out;
    }
    if (m.n() == 7 && m.bases().size() == 29 &&
        m.canonical_bases() == Matroid::nonfano().canonical_bases()) {
        out.family = MatroidLabel::Family::kNonFano;
        return out;
    }

    std::vector<Mask> classes;
    try {
        classes = m.parallel_classes();
    } catch (const std::runtime_error&) {
        return out;
    }
    const int k = (int)classes.size();
    if (k < 4 || k > 6) return out;

    // Triples of parallel classes that are dependent (via representatives).
    std::vector<std::array<int, 3>> nonbases;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            for (int c = b + 1; c < k; ++c) {
                Mask s = bit(members(classes[a])[0]) | bit(members(classes[b])[0]) |
                         bit(members(classes[c])[0]);
                if (m.rank_of(s) < 3) nonbases.push_back({a, b, c});
            }

    auto block = [&](int cls) { return members(classes[cls]); };

    if (k == 4 && nonbases.empty()) {
        out.family = MatroidLabel::Family::kSetPartition4;
        for (int cls = 0; cls < 4; ++cls) out.blocks.push_back(block(cls));
        return out;
    }
    if (k == 5 && nonbases.size() == 2) {
        // Two triangles sharing the diagonal class E.
        std::vector<int> t1(nonbases[0].begin(), nonbases[0].end());
        std::vector<int> t2(nonbases[1].begin(), nonbases[1].end());
        std::vector<int> common;
        for (int x : t1)
            if (std::find(t2.begin(), t2.end(), x) != t2.end()) common.push_back(x);
        if (common.size() != 1) return out;
        int e = common[0];
        auto rest = [&](std::vector<int>& t) {
            std::vector<int> r;
            for (int x : t)
                if (x != e) r.push_back(x);
            return r;
        };
        std::vector<int> ab = rest(t1), cd = rest(t2);
        if (block(ab[0])[0] > block(cd[0])[0]) std::swap(ab, cd);
        out.family = MatroidLabel::Family::kMerged;
        out.blocks = {block(ab[0]), block(ab[1]), block(cd[0]), block(cd[1]), block(e)};
        return out;
    }
    if (k == 6 && nonbases.size() == 4) {
        // K4: every class lies in exactly two triangles, and two triangles
        // meet in one class.
        std::vector<int> deg(6, 0);
        for (auto& t : nonbases)
            for (int x : t) ++deg[x];
        for (int x = 0; x < 6; ++x)
            if (deg[x] != 2) return out;
        // A = a largest class (ties: smallest member); b = the opposite
        // edge, the unique class sharing no triangle with A.
        int a_cls = 0;
        for (int cls = 1; cls < 6; ++cls) {
            if (popcount(classes[cls]) > popcount(classes[a_cls]) ||
                (popcount(classes[cls]) == popcount(classes[a_cls]) &&
                 block(cls)[0] < block(a_cls)[0]))
                a_cls = cls;
        }
        std::vector<bool> adjacent(6, false);
        adjacent[a_cls] = true;
        for (auto& t : nonbases)
            if (std::find(t.begin(), t.end(), a_cls) != t.end())
                for (int x : t) adjacent[x] = true;
        int b_cls = -1;
        for (int cls = 0; cls < 6; ++cls)
            if (!adjacent[cls]) {
                if (b_cls >= 0) return out;
                b_cls = cls;
            }
        if (b_cls < 0) return out;
        out.family = MatroidLabel::Family::kK4;
        out.blocks = {block(a_cls), block(b_cls)};
        for (int cls = 0; cls < 6; ++cls)
            if (cls != a_cls && cls != b_cls) out.blocks.push_back(block(cls));
        return out;
    }
    return out;
}

void write_matroid(std::ostream& os, const Matroid& m) {
    os << m.n() << ' ' << m.d() << '\n';
    for (Mask b : m.bases()) {
        bool first = true;
        for (int i : members(b)) {
            if (!first) os << ' ';
            os << i;
            first = false;
        }
        os << '\n';
    }
}

Matroid read_matroid(std::istream& is) {
    int n, d;
    if (!(is >> n >> d)) throw std::runtime_error("matroid input: missing header");
    std::string line;
    std::getline(is, line);
    std::vector<Mask> bases;
    while (std::getline(is, line)) {
        std::stringstream ss(line);
        std::vector<int> elems;
        int x;
        while (ss >> x) elems.push_back(x);
        if (elems.empty()) break;
        bases.push_back(mask_of(elems));
    }
    return Matroid::from_bases(n, d, std::move(bases));
}

}  // namespace trop
