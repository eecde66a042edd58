#ifndef TROP_LINALG_HPP
#define TROP_LINALG_HPP

#include <optional>

#include "trop/rat.hpp"

namespace trop {

// Dense exact linear algebra over Q, row-major vectors of Rat.

int rank(RatMat m);

// Solves A x = b; empty if inconsistent. If underdetermined, returns one
// solution (free variables set to zero).
std::optional<RatVec> solve(RatMat a, RatVec b);

// Basis of the kernel of A.
RatMat nullspace(RatMat a);

}  // namespace trop

#endif
