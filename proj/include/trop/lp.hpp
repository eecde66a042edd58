#ifndef TROP_LP_HPP
#define TROP_LP_HPP

#include <optional>

#include "trop/rat.hpp"

namespace trop {

// A system of exact linear constraints over m variables:
//   eq rows:  a.x == b
//   le rows:  a.x <= b   (weak)
//   lt rows:  a.x <  b   (strict)
// The solution set is a relatively open polyhedron.
struct LinearSystem {
    int vars = 0;

    RatMat eq;
    RatVec eq_rhs;
    RatMat le;
    RatVec le_rhs;
    RatMat lt;
    RatVec lt_rhs;

    explicit LinearSystem(int m = 0) : vars(m) {}

    void add_eq(RatVec row, Rat rhs);
    void add_le(RatVec row, Rat rhs);
    void add_lt(RatVec row, Rat rhs);
    // a.x >= b and a.x > b as negated rows
    void add_ge(RatVec row, Rat rhs);
    void add_gt(RatVec row, Rat rhs);
};

struct LpResult {
    bool feasible = false;
    // affine dimension of the closure (only set by lp_solve, -1 otherwise)
    int dimension = -1;
    // a rational point satisfying every constraint, strict ones strictly
    RatVec witness;
};

// Exact feasibility of the relatively open polyhedron. Strict rows are
// handled by maximizing an auxiliary slack eps, capped at 1; the open set
// is nonempty iff the optimum is positive.
LpResult lp_feasible(const LinearSystem& sys);

// lp_feasible plus the affine dimension of the closure: vars minus the
// rank of the equality system together with all implied equalities among
// the weak rows.
LpResult lp_solve(const LinearSystem& sys);

// Maximize c.x over the closure of sys (strict rows weakened).
// Returns nullopt if infeasible; if unbounded, returns nullopt value with
// *unbounded set. Used internally and by tests.
std::optional<Rat> lp_maximize(const LinearSystem& sys, const RatVec& objective,
                               RatVec* argmax = nullptr, bool* unbounded = nullptr);

}  // namespace trop

#endif
