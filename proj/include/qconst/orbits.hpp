#pragma once

#include "qconst/linalg.hpp"
#include "qconst/ncpoly.hpp"
#include "qconst/param_env.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qconst {

/// Orbit of the cyclic group generated by tau: i_1 ... i_n -> i_n i_1 ... i_{n-1}.
/// members[alpha] = tau^alpha(representative); the representative is the
/// lexicographically least member.
struct Orbit {
  Word representative;
  std::vector<Word> members;

  std::size_t period() const { return members.size(); }
  bool is_long() const { return members.size() == representative.size(); }
};

/// Cyclic orbits partitioning the distinct permutations of q, ordered by representative.
std::vector<Orbit> decompose(const Signature& q);

using FactorFn = std::function<Scalar(const Word&)>;

/// w -> a(w).
FactorFn a_factors(const ParamEnv& env);
/// w -> b_j(w) on permutations of Q_j.
FactorFn b_factors(Letter j, const ParamEnv& env);

/// Product of the factor over the distinct members (one period).
Scalar cocycle_product(const Orbit& orbit, const FactorFn& factor);

struct OrbitStatus {
  Orbit orbit;
  Scalar product;
  bool singular = false;
};

struct ChildOrbits {
  Letter j = 0;
  Signature signature;
  std::vector<OrbitStatus> orbits;
  int chi = 0;
};

struct OrbitReport {
  Signature signature;
  std::vector<OrbitStatus> orbits;
  int chi = 0;
  /// One entry per letter j with n_j >= 1, ascending.
  std::vector<ChildOrbits> children;

  /// chi_j for letter j (0 when j does not occur in Q).
  int chi_of(Letter j) const;
};

/// Singular-orbit counts: chi over Q with factors a, chi_j over Q_j with factors b_j.
OrbitReport chi_counts(const Signature& q, const ParamEnv& env);

/// Coefficients C(tau^alpha i) = prod_{beta < alpha} factor(tau^beta i) of the
/// unique relation among the simple commutators of a singular orbit. Throws
/// std::invalid_argument when the orbit is not singular.
std::vector<Scalar> orbit_relation(const Orbit& orbit, const FactorFn& factor);

/// sum_alpha coeffs[alpha] [prefix(tau^alpha i), last(tau^alpha i)]_{factor(tau^alpha i)}.
Polynomial commutator_combination(const Orbit& orbit, const std::vector<Scalar>& coeffs, const FactorFn& factor);

/// sum_alpha coeffs[alpha] tau^alpha i.
Polynomial orbital_polynomial(const Orbit& orbit, const std::vector<Scalar>& coeffs);

/// Dual cocycle condition sum_alpha (prod_{beta >= alpha} factor(tau^beta i)) C_alpha = 0.
/// Throws std::invalid_argument on a length mismatch.
bool dual_cocycle_test(const Orbit& orbit, const std::vector<Scalar>& coeffs, const FactorFn& factor);

/// Matrix of the group-algebra element P on the span of the orbit:
/// column gamma holds P(tau^gamma i) = sum_alpha C_alpha(tau^gamma i) tau^{alpha+gamma} i.
Matrix<Scalar> orbit_projector(const Orbit& orbit, const FactorFn& factor);

struct ClosedFormCounts {
  long chi = 0;
  /// chi_j for letters 1..k.
  std::vector<long> chi_j;
  long dim = 0;
};

/// (n-1)!/prod n_i!, n_i (n-2)!/prod n_i!, (n-2)!/prod n_i!. Throws
/// std::domain_error naming the offending orbit when Q or some Q_j has a short orbit.
ClosedFormCounts closed_form_counts(const Signature& q);

} // namespace qconst
