#pragma once

#include "qconst/linalg.hpp"
#include "qconst/ncpoly.hpp"
#include "qconst/orbits.hpp"
#include "qconst/param_env.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qconst {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2718281828ULL;

/// Raised when two independent computations of the same quantity disagree.
class CrossCheckError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SampleOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Random evaluation points used to confirm symbolic ranks.
  int samples = 3;
};

/// Matrix of all q-derivations on B_Q: column c is the word basis[c], the row
/// block of letter j holds d_j(basis[c]) in the basis of B_{Q_j}.
struct DerivationMatrix {
  Signature signature;
  Basis columns;
  std::vector<Letter> blocks;
  std::vector<Basis> block_bases;
  std::vector<std::size_t> block_offsets;
  Matrix<Scalar> entries;

  std::size_t rows() const { return entries.size(); }
  std::size_t cols() const { return columns.size(); }
};

DerivationMatrix derivation_matrix(const Signature& q, const ParamEnv& env);

/// Exact nullspace of a scalar matrix. Random evaluations mod large primes give
/// rank lower bounds and pick a maximal independent row set; the symbolic
/// elimination runs on those rows only, and the result is checked against
/// every row. Throws CrossCheckError when samples and symbolic rank disagree.
struct ExactNullspace {
  std::vector<std::vector<Scalar>> vectors;
  std::size_t rank = 0;
  std::vector<std::size_t> sample_ranks;
};

ExactNullspace exact_nullspace(const Matrix<Scalar>& m, std::size_t cols, const ParamEnv& env, std::mt19937_64& rng,
                               int samples);

/// Rank of the matrix at one random evaluation point; a lower bound for the
/// symbolic rank that is attained with high probability.
std::size_t sampled_rank(const Matrix<Scalar>& m, std::size_t cols, const ParamEnv& env, std::mt19937_64& rng);

/// x with sum_i x_i vectors[i] = target, verified exactly; nullopt when the
/// target is outside the span.
std::optional<std::vector<Scalar>> solve_in_span(const std::vector<std::vector<Scalar>>& vectors,
                                                 const std::vector<Scalar>& target, const ParamEnv& env,
                                                 std::mt19937_64& rng);

struct KernelResult {
  Signature signature;
  /// Constants: one per non-pivot column, scaled so that the least word has
  /// coefficient 1.
  std::vector<Polynomial> basis;
  std::size_t rank = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> sample_ranks;

  std::size_t dim() const { return basis.size(); }
};

/// Constants of B_Q. Every element is re-checked against all q-derivations
/// before it is returned (CrossCheckError otherwise).
KernelResult kernel(const Signature& q, const ParamEnv& env, const SampleOptions& opts = {});

/// True when d_j c = 0 for every letter j of the environment.
bool is_constant(const Polynomial& c, const ParamEnv& env);

enum class SpanCheck { Direct, Implied, Vacuous };

const char* to_string(SpanCheck s);

struct StipulationEntry {
  Letter j = 0;
  Signature child;
  /// (b): B_{Q_j} has no constants.
  bool no_constants = true;
  std::size_t child_constants = 0;
  /// (a): the simple commutators of Q_j span B_{Q_j}.
  SpanCheck span_mode = SpanCheck::Vacuous;
  bool spans = true;
  std::string witness;

  bool passes() const { return no_constants && spans; }
};

struct StipulationReport {
  std::vector<StipulationEntry> entries;

  bool passes() const;
};

/// One entry per letter j with n_j >= 1. Part (a) is checked directly when Q_j
/// is a power of a single letter of length >= 2, is vacuous when |Q_j| <= 1
/// and is otherwise implied by (b).
StipulationReport check_stipulation(const Signature& q, const ParamEnv& env, const SampleOptions& opts = {});

struct FormulaResult {
  bool applicable = false;
  long value = 0;
  std::string diagnostic;
};

/// sum_j chi_j - chi, when the stipulation holds and n >= 2.
FormulaResult dimension_formula(const OrbitReport& orbits, const StipulationReport& stip);
FormulaResult dimension_formula(const Signature& q, const ParamEnv& env, const SampleOptions& opts = {});

struct ViaXResult {
  Letter j = 0;
  /// Singular orbits of the permutations of Q_j under b_j.
  std::size_t singular_orbits = 0;
  /// Orbit recipe: relation coefficients divided by (1 - q_{j i_2} q_{i_2 j}),
  /// assembled on X^{j i}; nonzero results only.
  std::vector<Polynomial> recipe;
  /// Whether every recipe element is annihilated by d_j.
  bool recipe_annihilated = true;
  /// Basis of the constants inside the span of the X^{j i}, obtained by
  /// solving sum C(i) d_j X^{j i} = 0 directly.
  std::vector<Polynomial> constants;

  std::size_t rank() const { return constants.size(); }
};

/// Constants inside the span of the iterated commutators starting with j.
/// Requires n >= 3, n_j >= 1 and a passing stipulation (std::invalid_argument
/// or std::domain_error otherwise).
ViaXResult constants_via_X(const Signature& q, Letter j, const ParamEnv& env, const StipulationReport& stip,
                           const SampleOptions& opts = {});

/// The monotone surjection 1..n -> 1..k with fiber sizes n_i (phi[i'-1] = i).
std::vector<Letter> natural_map(const Signature& q);

/// e_{i'} -> e_{phi(i')}.
Polynomial project_down(const Polynomial& c, const std::vector<Letter>& phi);

/// e_i -> sum of e_{i'} over the fiber of i, keeping the multilinear component,
/// scaled so that its lexicographically least word has coefficient 1. Throws
/// std::invalid_argument when the letter counts of c differ from the fiber sizes.
Polynomial lift_up(const Polynomial& c, const std::vector<Letter>& phi);

struct Certificate {
  /// 0 for the simple commutators, otherwise the first letter j of X^{j ...}.
  Letter j = 0;
  /// Nonzero coordinates, keyed by the index word of the spanning element.
  std::vector<std::pair<Word, Scalar>> coordinates;
};

struct MembershipReport {
  Certificate simple;
  std::vector<Certificate> iterated;
};

/// Exact coordinates of a constant in the span of the simple commutators of Q
/// and in the span of the X^{j i} for each letter j of Q. Throws
/// std::invalid_argument on a non-constant or inhomogeneous input and
/// CrossCheckError when some span does not contain it.
MembershipReport verify_membership(const Polynomial& c, const Signature& q, const ParamEnv& env,
                                   const SampleOptions& opts = {});

} // namespace qconst
