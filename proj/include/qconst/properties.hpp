#pragma once

#include "qconst/constants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qconst {

struct PropertyOptions {
  std::uint64_t seed = kDefaultSeed;
  int trials = 1000;
  /// Largest word length drawn.
  int max_n = 5;
  /// Test hook: swap the bracket orientation inside the bracket-identity suite.
  bool corrupt_bracket = false;
};

struct SuiteResult {
  std::string name;
  int trials = 0;
  int failures = 0;
  /// Smallest failing case seen, empty when none failed.
  std::string counterexample;
  bool passed() const { return failures == 0; }
};

/// d_i from the recursion d_i(e_j x) = delta_ij x + q_ij e_j d_i x, against derive().
SuiteResult check_derivation_recursion(const PropertyOptions& opts);

/// d_i(u v) = d_i(u) v + a(u, i) u d_i(v) for homogeneous u.
SuiteResult check_leibniz(const PropertyOptions& opts);

/// d_j [u, e_i]_{a(u,i)} = [d_j u, e_i]_{a(u,i) q_ji}, i = j included.
SuiteResult check_bracket_identity(const PropertyOptions& opts);

/// d_j X^{i_1 ... i_p} = 0 for j != i_1.
SuiteResult check_annihilation(const PropertyOptions& opts);

/// On a singular orbit the relation among its simple commutators expands to 0.
SuiteResult check_orbit_relation(const PropertyOptions& opts);

/// Dual cocycle membership against rank-based membership on singular orbits.
SuiteResult check_dual_cocycle(const PropertyOptions& opts);

/// Full cyclic products of b_j over Q_j and of a over Q both equal prod q_{i_1 i_2}
/// over ordered pairs of positions, and the distinct-member products are their
/// roots of the expected order.
SuiteResult check_bridge(const PropertyOptions& opts);

/// Every suite above, in that order, each with its own stream derived from the seed.
std::vector<SuiteResult> run_all_properties(const PropertyOptions& opts);

} // namespace qconst
