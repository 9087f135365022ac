#pragma once

#include "bautin/rational.hpp"

#include <vector>

namespace bautin {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major

// Exact rank by fraction-free Gaussian elimination.
int rank(RatMat m);

// Rank of the matrix with `col` appended as an extra column.
int rank_augmented(const RatMat& m, const RatVec& col);

// Solve m*x = rhs exactly when a solution exists (m square or tall, full
// column rank). Returns empty vector when inconsistent or rank-deficient.
RatVec solve_least_structured(RatMat m, RatVec rhs);

}  // namespace bautin
