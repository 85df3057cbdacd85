#pragma once

#include "qconst/linalg.hpp"
#include "qconst/scalar.hpp"

#include <optional>
#include <vector>

namespace qconst {

/// Nullspace of a matrix whose entries all lie in Q, by Gauss-Jordan modulo a
/// run of word-size primes, Chinese remaindering and rational reconstruction.
/// Stops as soon as the reconstructed vectors annihilate every row exactly.
/// One vector per free column of the reduced echelon form, in column order,
/// with a 1 in its own free column and 0 in the others.
/// nullopt when an entry is not rational or nothing verifies within max_primes.
std::optional<std::vector<std::vector<Scalar>>> rational_nullspace(const Matrix<Scalar>& m, std::size_t cols,
                                                                   std::size_t max_primes = 1024);

} // namespace qconst
