#pragma once

#include <vector>

#include "skeinlab/laurent.hpp"

namespace skeinlab {

using IntMat = std::vector<std::vector<BigInt>>;

/// Basis of the integer kernel of M (rows are equations over `cols`
/// unknowns), computed by exact column reduction to Hermite-style echelon
/// form with a tracked transform. Basis vectors are primitive (content 1).
std::vector<std::vector<BigInt>> integer_kernel(const IntMat& M, std::size_t cols);

/// Rank of M over the rationals, computed exactly (fraction-free Gaussian
/// elimination).
int integer_rank(IntMat M);

/// Solve M x = rhs exactly over the rationals and return x if it is an
/// integer vector; M must have full column rank on the relevant columns.
/// Returns an empty vector when no integer solution exists.
std::vector<BigInt> solve_integer(const IntMat& M, const std::vector<BigInt>& rhs);

}  // namespace skeinlab
