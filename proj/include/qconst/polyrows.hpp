#pragma once

#include "qconst/linalg.hpp"
#include "qconst/scalar.hpp"

#include <vector>

namespace qconst {

/// Nullspace of a scalar matrix by fraction-free elimination: rows are cleared
/// of denominators, reduced to echelon form with polynomial arithmetic only
/// (each row divided by the gcd of its entries after every update), and the
/// basis (1 on a free column, 0 on the others) is recovered by back
/// substitution. Also returns the rank.
struct PolyNullspace {
  std::vector<std::vector<Scalar>> vectors;
  std::size_t rank = 0;
};

PolyNullspace polynomial_nullspace(const Matrix<Scalar>& m, std::size_t cols);

} // namespace qconst
