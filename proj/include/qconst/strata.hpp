#pragma once

#include "qconst/orbits.hpp"
#include "qconst/param_env.hpp"

#include <string>
#include <vector>

namespace qconst {

/// Exponents of a multiplicative expression prod q_ab^{e_ab}, indexed (a-1)k + (b-1).
using ExponentVector = std::vector<long>;

/// Exponents of the cocycle product of an orbit under the factors a.
ExponentVector orbit_exponents(const Orbit& orbit, int k);

/// Exponents of prod q_ij over all ordered pairs of distinct positions of Q,
/// the value of the cocycle product on a long orbit.
ExponentVector long_orbit_exponents(const Signature& q, int k);

/// Whether q_ab can influence anything in B_Q: both letters occur, and a = b
/// needs n_a >= 2.
bool is_relevant(const Signature& q, Letter a, Letter b);

struct StratumOptions {
  /// Free coordinates beyond this many are fixed to distinct primes.
  int max_indeterminates = 9;
  /// Value used for parameters irrelevant to Q.
  long irrelevant_value = 1;
  /// Values for the coordinates past the limit, used in turn; empty means
  /// distinct primes.
  std::vector<Scalar> specialization;
};

/// Parameters on the locus prod q^{e} = zeta_order^power. The relevant
/// parameters are written as monomials in new coordinates y_1, ..., y_m through
/// a unimodular change of variables turning the condition into y_1^g = zeta,
/// where g is the gcd of the exponents; y_1 is the root
/// zeta_{order g}^{power + order * branch}, the other y's are fresh
/// indeterminates. Throws std::invalid_argument when the exponents vanish or
/// touch an irrelevant parameter.
ParamEnv monomial_stratum(const Signature& q, int k, const ExponentVector& e, int order, long power, long branch = 0,
                          const StratumOptions& opts = {});

/// All relevant parameters free (independent indeterminates or, past the
/// limit, distinct primes); irrelevant ones fixed.
ParamEnv free_stratum(const Signature& q, int k, const StratumOptions& opts = {});

/// gcd of the entries.
long exponent_gcd(const ExponentVector& e);

/// Human-readable form such as "q11^2*q12*q21".
std::string exponent_string(const ExponentVector& e, int k);

} // namespace qconst
