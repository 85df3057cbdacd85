#pragma once

#include "qconst/linalg.hpp"
#include "qconst/modfield.hpp"
#include "qconst/scalar.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace qconst {

/// A point of F_p^m at which scalars are evaluated.
struct ModPoint {
  ModField field;
  std::vector<std::uint64_t> values;
};

/// Random point for m indeterminates in a freshly drawn field.
ModPoint random_point(int conductor, int num_indeterminates, std::mt19937_64& rng);

/// Image of a scalar; nullopt when a denominator (coefficient or polynomial) vanishes.
std::optional<std::uint64_t> reduce(const MPoly& poly, const ModPoint& pt);
std::optional<std::uint64_t> reduce(const Scalar& s, const ModPoint& pt);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

/// Entrywise image; nullopt when some entry is undefined at the point.
std::optional<ModMatrix> reduce(const Matrix<Scalar>& m, std::size_t cols, const ModPoint& pt);

struct ModEchelon {
  std::size_t rank = 0;
  /// Original indices of rows that stayed independent, in scan order.
  std::vector<std::size_t> independent_rows;
  std::vector<std::size_t> pivot_cols;
};

/// Row-by-row elimination mod p: each row is reduced against the rows kept so
/// far and kept when something survives.
ModEchelon mod_echelon(const ModMatrix& m, std::size_t cols, const ModField& f);

} // namespace qconst
