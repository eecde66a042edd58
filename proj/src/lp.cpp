#include "trop/lp.hpp"

#include <cstddef>
#include <stdexcept>

#include "trop/linalg.hpp"

namespace trop {

void LinearSystem::add_eq(RatVec row, Rat rhs) {
    if ((int)row.size() != vars) throw std::runtime_error("lp: row size mismatch");
    eq.push_back(std::move(row));
    eq_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_le(RatVec row, Rat rhs) {
    if ((int)row.size() != vars) throw std::runtime_error("lp: row size mismatch");
    le.push_back(std::move(row));
    le_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_lt(RatVec row, Rat rhs) {
    if ((int)row.size() != vars) throw std::runtime_error("lp: row size mismatch");
    lt.push_back(std::move(row));
    lt_rhs.push_back(std::move(rhs));
}

void LinearSystem::add_ge(RatVec row, Rat rhs) {
    for (Rat& r : row) r = -r;
    add_le(std::move(row), -rhs);
}

void LinearSystem::add_gt(RatVec row, Rat rhs) {
    for (Rat& r : row) r = -r;
    add_lt(std::move(row), -rhs);
}

namespace {

enum class Status { kOptimal, kUnbounded, kInfeasible };

// Dictionary-form simplex on a tableau whose columns are
// [structural | slack | artificial | rhs]. Bland's rule, so no cycling.
// obj holds reduced costs (pivot while some obj[j] > 0) with
// obj[rhs] == -(current objective value).
void pivot(RatMat& tab, RatVec& obj, std::vector<int>& basis, int row, int col) {
    const std::size_t w = obj.size();
    Rat piv = tab[row][col];
    for (std::size_t j = 0; j < w; ++j) tab[row][j] /= piv;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        if ((int)i == row || tab[i][col] == 0) continue;
        Rat f = tab[i][col];
        for (std::size_t j = 0; j < w; ++j) tab[i][j] -= f * tab[row][j];
    }
    if (obj[col] != 0) {
        Rat f = obj[col];
        for (std::size_t j = 0; j < w; ++j) obj[j] -= f * tab[row][j];
    }
    basis[row] = col;
}

// Runs Bland pivots over the first ncols columns. Returns false if some
// improving column is unbounded.
bool run(RatMat& tab, RatVec& obj, std::vector<int>& basis, int ncols) {
    const int rhs = (int)obj.size() - 1;
    for (;;) {
        int col = -1;
        for (int j = 0; j < ncols; ++j)
            if (obj[j] > 0) {
                col = j;
                break;
            }
        if (col < 0) return true;
        int row = -1;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (tab[i][col] <= 0) continue;
            if (row < 0) {
                row = (int)i;
                continue;
            }
            Rat cur = tab[row][rhs] * tab[i][col];
            Rat cand = tab[i][rhs] * tab[row][col];
            if (cand < cur || (cand == cur && basis[i] < basis[row])) row = (int)i;
        }
        if (row < 0) return false;
        pivot(tab, obj, basis, row, col);
    }
}

// max c.y subject to A y <= b, y >= 0.
Status simplex(const RatMat& a, const RatVec& b, const RatVec& c, RatVec& y, Rat& value) {
    const int m = (int)a.size();
    const int n = (int)c.size();
    // Rows with negative rhs are negated and given an artificial variable.
    std::vector<int> art_of(m, -1);
    int p = 0;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) art_of[i] = p++;
    const int ncols = n + m + p;
    const int rhs = ncols;

    RatMat tab(m, RatVec(ncols + 1, Rat(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        bool neg = art_of[i] >= 0;
        for (int j = 0; j < n; ++j) tab[i][j] = neg ? -a[i][j] : a[i][j];
        tab[i][n + i] = neg ? Rat(-1) : Rat(1);
        tab[i][rhs] = neg ? -b[i] : b[i];
        if (neg) {
            tab[i][n + m + art_of[i]] = 1;
            basis[i] = n + m + art_of[i];
        } else {
            basis[i] = n + i;
        }
    }

    if (p > 0) {
        // Phase 1: maximize -(sum of artificials).
        RatVec obj(ncols + 1, Rat(0));
        for (int i = 0; i < m; ++i)
            if (art_of[i] >= 0)
                for (int j = 0; j <= ncols; ++j) obj[j] += tab[i][j];
        for (int i = 0; i < p; ++i) obj[n + m + i] = 0;
        // Artificials never re-enter: restrict entering columns to the rest.
        if (!run(tab, obj, basis, n + m)) throw std::logic_error("lp: phase 1 unbounded");
        if (obj[rhs] != 0) return Status::kInfeasible;
        // Pivot any artificial still in the basis out (it sits at value 0),
        // or drop its row if it is identically zero.
        for (int i = 0; i < m; ++i) {
            if (basis[i] < n + m) continue;
            int col = -1;
            for (int j = 0; j < n + m; ++j)
                if (tab[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                pivot(tab, obj, basis, i, col);
            } else {
                tab.erase(tab.begin() + i);
                basis.erase(basis.begin() + i);
                --i;
            }
        }
    }

    // Phase 2 with the real objective.
    RatVec obj(ncols + 1, Rat(0));
    for (int j = 0; j < n; ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i] >= n || c[basis[i]] == 0) continue;
        Rat f = c[basis[i]];
        for (int j = 0; j <= ncols; ++j) obj[j] -= f * tab[i][j];
    }
    if (!run(tab, obj, basis, n + m)) return Status::kUnbounded;

    y.assign(n, Rat(0));
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] < n) y[basis[i]] = tab[i][rhs];
    value = -obj[rhs];
    return Status::kOptimal;
}

// max c.x subject to E x = f, A x <= b, x free in Q^vars.
// Equalities are eliminated exactly; the remaining free coordinates are
// split into nonnegative pairs for the simplex.
Status maximize_free(int vars, const RatMat& e, const RatVec& f, const RatMat& a,
                     const RatVec& b, const RatVec& c, RatVec& x, Rat& value) {
    RatVec x0(vars, Rat(0));
    RatMat null_basis;
    if (!e.empty()) {
        auto part = solve(e, f);
        if (!part) return Status::kInfeasible;
        x0 = *part;
        null_basis = nullspace(e);
    } else {
        null_basis.assign(vars, RatVec(vars, Rat(0)));
        for (int j = 0; j < vars; ++j) null_basis[j][j] = 1;
    }
    const int k = (int)null_basis.size();
    auto dot = [vars](const RatVec& u, const RatVec& v) {
        Rat s(0);
        for (int j = 0; j < vars; ++j) s += u[j] * v[j];
        return s;
    };

    if (k == 0) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (dot(a[i], x0) > b[i]) return Status::kInfeasible;
        x = x0;
        value = dot(c, x0);
        return Status::kOptimal;
    }

    // Reduced problem in t with x = x0 + sum t_j N_j, t = u - v, u,v >= 0.
    RatMat ar(a.size(), RatVec(2 * k));
    RatVec br(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (int j = 0; j < k; ++j) {
            ar[i][j] = dot(a[i], null_basis[j]);
            ar[i][k + j] = -ar[i][j];
        }
        br[i] = b[i] - dot(a[i], x0);
    }
    RatVec cr(2 * k);
    for (int j = 0; j < k; ++j) {
        cr[j] = dot(c, null_basis[j]);
        cr[k + j] = -cr[j];
    }

    RatVec y;
    Rat v;
    Status st = simplex(ar, br, cr, y, v);
    if (st != Status::kOptimal) return st;
    x = x0;
    for (int j = 0; j < k; ++j) {
        Rat t = y[j] - y[k + j];
        if (t == 0) continue;
        for (int i = 0; i < vars; ++i) x[i] += t * null_basis[j][i];
    }
    value = dot(c, x);
    return Status::kOptimal;
}

}  // namespace

LpResult lp_feasible(const LinearSystem& sys) {
    LpResult res;
    const int m = sys.vars;
    if (sys.lt.empty()) {
        RatVec x, c(m, Rat(0));
        Rat v;
        Status st = maximize_free(m, sys.eq, sys.eq_rhs, sys.le, sys.le_rhs, c, x, v);
        if (st != Status::kOptimal) return res;
        res.feasible = true;
        res.witness = std::move(x);
        return res;
    }
    // Maximize eps (appended variable) with every strict row relaxed to
    // a.x + eps <= b, capped by eps <= 1; the open set is nonempty iff the
    // optimum is positive.
    RatMat e = sys.eq, a = sys.le;
    RatVec f = sys.eq_rhs, b = sys.le_rhs;
    for (auto& row : e) row.push_back(0);
    for (auto& row : a) row.push_back(0);
    for (std::size_t i = 0; i < sys.lt.size(); ++i) {
        RatVec row = sys.lt[i];
        row.push_back(1);
        a.push_back(std::move(row));
        b.push_back(sys.lt_rhs[i]);
    }
    RatVec cap(m + 1, Rat(0));
    cap[m] = 1;
    a.push_back(cap);
    b.push_back(Rat(1));

    RatVec c(m + 1, Rat(0)), x;
    c[m] = 1;
    Rat v;
    Status st = maximize_free(m + 1, e, f, a, b, c, x, v);
    if (st != Status::kOptimal || v <= 0) return res;
    res.feasible = true;
    res.witness.assign(x.begin(), x.begin() + m);
    return res;
}

LpResult lp_solve(const LinearSystem& sys) {
    LpResult res = lp_feasible(sys);
    if (!res.feasible) return res;

    // Affine dimension of the closure: vars minus the rank of the stated
    // equalities together with every weak row forced to equality. Only rows
    // tight at the witness can be implied equalities; for each, maximize its
    // slack over the closure (capped at 1) and test whether it stays zero.
    RatMat closure_le = sys.le;
    RatVec closure_rhs = sys.le_rhs;
    for (std::size_t i = 0; i < sys.lt.size(); ++i) {
        closure_le.push_back(sys.lt[i]);
        closure_rhs.push_back(sys.lt_rhs[i]);
    }
    auto dot = [&](const RatVec& u, const RatVec& v) {
        Rat s(0);
        for (int j = 0; j < sys.vars; ++j) s += u[j] * v[j];
        return s;
    };
    RatMat eqs = sys.eq;
    for (std::size_t i = 0; i < sys.le.size(); ++i) {
        if (dot(sys.le[i], res.witness) != sys.le_rhs[i]) continue;
        RatVec c(sys.vars);
        for (int j = 0; j < sys.vars; ++j) c[j] = -sys.le[i][j];
        RatMat a = closure_le;
        RatVec b = closure_rhs;
        a.push_back(c);
        b.push_back(Rat(1) - sys.le_rhs[i]);  // slack <= 1 keeps it bounded
        RatVec x;
        Rat v;
        Status st = maximize_free(sys.vars, sys.eq, sys.eq_rhs, a, b, c, x, v);
        if (st != Status::kOptimal) throw std::logic_error("lp: slack subproblem failed");
        if (v == -sys.le_rhs[i]) eqs.push_back(sys.le[i]);
    }
    res.dimension = sys.vars - (eqs.empty() ? 0 : rank(eqs));
    return res;
}

std::optional<Rat> lp_maximize(const LinearSystem& sys, const RatVec& objective,
                               RatVec* argmax, bool* unbounded) {
    if (unbounded) *unbounded = false;
    RatMat a = sys.le;
    RatVec b = sys.le_rhs;
    for (std::size_t i = 0; i < sys.lt.size(); ++i) {
        a.push_back(sys.lt[i]);
        b.push_back(sys.lt_rhs[i]);
    }
    RatVec x;
    Rat v;
    Status st = maximize_free(sys.vars, sys.eq, sys.eq_rhs, a, b, objective, x, v);
    if (st == Status::kInfeasible) return std::nullopt;
    if (st == Status::kUnbounded) {
        if (unbounded) *unbounded = true;
        return std::nullopt;
    }
    if (argmax) *argmax = std::move(x);
    return v;
}

}  // namespace trop
