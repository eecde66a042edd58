#include "trop/tropical.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "trop/linalg.hpp"

namespace trop {

TropicalPluckerVector::TropicalPluckerVector(int d, int n, std::vector<TRat> values)
    : d_(d), n_(n), table_(n, d), values_(std::move(values)) {
    if ((int)values_.size() != table_.size())
        throw std::invalid_argument("plucker: expected one value per d-subset");
    support_matroid();  // validates: nonempty support forming a matroid
}

TropicalPluckerVector TropicalPluckerVector::zero(int d, int n) {
    SubsetTable table(n, d);
    return TropicalPluckerVector(d, n, std::vector<TRat>(table.size(), TRat(Rat(0))));
}

Matroid TropicalPluckerVector::support_matroid() const {
    std::vector<Mask> support;
    for (int r = 0; r < table_.size(); ++r)
        if (values_[r].finite()) support.push_back(table_.mask(r));
    if (support.empty()) throw std::invalid_argument("plucker: all entries infinite");
    return Matroid::from_bases(n_, d_, std::move(support));
}

bool TropicalPluckerVector::finite() const {
    return std::all_of(values_.begin(), values_.end(), [](const TRat& v) { return v.finite(); });
}

TropicalPluckerVector TropicalPluckerVector::relabel(const Permutation& g) const {
    if (g.n() != n_) throw std::invalid_argument("plucker relabel: degree mismatch");
    std::vector<TRat> out(values_.size());
    for (int r = 0; r < table_.size(); ++r) out[table_.rank(g.apply(table_.mask(r)))] = values_[r];
    return TropicalPluckerVector(d_, n_, std::move(out));
}

TropicalPluckerVector TropicalPluckerVector::normalized() const {
    if (!finite()) throw std::invalid_argument("plucker normalize: infinite entries");
    // Exact least squares against the incidence vectors v_i(S) = [i in S]:
    // solve the normal equations G c = r, then subtract sum_{i in S} c_i.
    RatMat g(n_, RatVec(n_, Rat(0)));
    RatVec r(n_, Rat(0));
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j)
            g[i - 1][j - 1] =
                Rat(long(i == j ? binomial(n_ - 1, d_ - 1) : binomial(n_ - 2, d_ - 2)));
        for (int k = 0; k < table_.size(); ++k)
            if (contains(table_.mask(k), i)) r[i - 1] += values_[k].val;
    }
    auto c = solve(g, r);
    if (!c) throw std::logic_error("plucker normalize: singular Gram matrix");
    std::vector<TRat> out(values_.size());
    for (int k = 0; k < table_.size(); ++k) {
        Rat v = values_[k].val;
        for (int i : members(table_.mask(k))) v -= (*c)[i - 1];
        out[k] = TRat(v);
    }
    return TropicalPluckerVector(d_, n_, std::move(out));
}

std::vector<std::pair<Mask, Mask>> three_term_quadruples(int d, int n) {
    std::vector<std::pair<Mask, Mask>> out;
    for (Mask s : all_subsets(n, d - 2)) {
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i)
            if (!contains(s, i)) rest.push_back(i);
        for (Mask q : all_subsets((int)rest.size(), 4)) {
            Mask quad = 0;
            for (int idx : members(q)) quad |= bit(rest[idx - 1]);
            out.emplace_back(s, quad);
        }
    }
    return out;
}

std::uint8_t attainment_mask(const TropicalPluckerVector& pi, Mask s, Mask quad) {
    if ((s & quad) != 0 || popcount(quad) != 4 || popcount(s) != pi.d() - 2)
        throw std::invalid_argument("three-term relation: bad index sets");
    std::vector<int> q = members(quad);
    int i = q[0], j = q[1], k = q[2], l = q[3];
    TRat m[3] = {pi.at(s | bit(i) | bit(j)) + pi.at(s | bit(k) | bit(l)),
                 pi.at(s | bit(i) | bit(k)) + pi.at(s | bit(j) | bit(l)),
                 pi.at(s | bit(i) | bit(l)) + pi.at(s | bit(j) | bit(k))};
    TRat best = std::min(std::min(m[0], m[1]), m[2]);
    if (!best.finite()) return 0;
    std::uint8_t mask = 0;
    for (int t = 0; t < 3; ++t)
        if (m[t] == best) mask |= std::uint8_t(1) << t;
    return mask;
}

bool three_term_min_attained_twice(const TropicalPluckerVector& pi, Mask s, Mask quad) {
    std::uint8_t m = attainment_mask(pi, s, quad);
    return m == 0 || popcount(m) >= 2;
}

bool dressian_member(const TropicalPluckerVector& pi) {
    for (auto [s, quad] : three_term_quadruples(pi.d(), pi.n()))
        if (!three_term_min_attained_twice(pi, s, quad)) return false;
    return true;
}

ConeSignature cone_signature(const TropicalPluckerVector& pi) {
    ConeSignature sig;
    sig.d = pi.d();
    sig.n = pi.n();
    for (auto [s, quad] : three_term_quadruples(pi.d(), pi.n())) {
        std::uint8_t m = attainment_mask(pi, s, quad);
        if (m != 0 && popcount(m) < 2)
            throw std::runtime_error("cone_signature: vector not in the Dressian");
        sig.attain.push_back(m);
    }
    return sig;
}

TropicalPluckerVector indicator_vector(const Matroid& m) {
    if (!m.is_connected()) throw std::invalid_argument("indicator_vector: disconnected matroid");
    SubsetTable table(m.n(), m.d());
    std::vector<TRat> vals(table.size());
    for (int r = 0; r < table.size(); ++r)
        vals[r] = TRat(Rat(m.is_basis(table.mask(r)) ? 0 : 1));
    return TropicalPluckerVector(m.d(), m.n(), std::move(vals));
}

bool trinomial_excludes(const TropicalPluckerVector& pi) {
    if (pi.d() != 3 || pi.n() != 9)
        throw std::invalid_argument("trinomial_excludes: needs d=3, n=9");
    auto term = [&](std::initializer_list<const char*> subsets) {
        TRat sum{Rat(0)};
        for (const char* s : subsets) {
            std::vector<int> elems;
            for (const char* p = s; *p; ++p) elems.push_back(*p - '0');
            sum = sum + pi.at(mask_of(elems));
        }
        return sum;
    };
    TRat m[3] = {term({"289", "389", "489", "569", "589", "167"}),
                 term({"189", "389", "489", "569", "679", "258"}),
                 term({"189", "289", "569", "589", "678", "349"})};
    TRat best = std::min(std::min(m[0], m[1]), m[2]);
    if (!best.finite()) return false;
    int count = 0;
    for (const TRat& t : m)
        if (t == best) ++count;
    return count == 1;
}

void write_plucker(std::ostream& os, const TropicalPluckerVector& pi) {
    os << pi.d() << ' ' << pi.n() << '\n';
    for (int r = 0; r < pi.size(); ++r) {
        const TRat& v = pi.at_rank(r);
        os << subset_str(pi.table().mask(r)) << ' ' << (v.finite() ? to_string(v.val) : "inf")
           << '\n';
    }
}

TropicalPluckerVector read_plucker(std::istream& is) {
    int d, n;
    if (!(is >> d >> n)) throw std::runtime_error("plucker input: missing header");
    if (n > 9) throw std::runtime_error("plucker input: n <= 9 required by the text format");
    SubsetTable table(n, d);
    std::vector<TRat> vals(table.size());  // default inf
    std::vector<char> seen(table.size(), 0);
    std::string subset, value;
    while (is >> subset >> value) {
        std::vector<int> elems;
        for (char ch : subset) {
            if (ch < '1' || ch > '9') throw std::runtime_error("plucker input: bad subset");
            elems.push_back(ch - '0');
        }
        Mask m = mask_of(elems);
        if ((int)elems.size() != d || table.rank(m) < 0)
            throw std::runtime_error("plucker input: '" + subset + "' is not a d-subset");
        if (seen[table.rank(m)]) throw std::runtime_error("plucker input: duplicate " + subset);
        seen[table.rank(m)] = 1;
        vals[table.rank(m)] = value == "inf" ? TRat::infinity() : TRat(parse_rat(value));
    }
    return TropicalPluckerVector(d, n, std::move(vals));
}

}  // namespace trop
