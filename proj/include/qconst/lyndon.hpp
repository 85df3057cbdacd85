#pragma once

#include "qconst/constants.hpp"
#include "qconst/ncpoly.hpp"
#include "qconst/param_env.hpp"
#include "qconst/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qconst {

/// A word cut into groups. Groups of length one print bare, longer groups in
/// parentheses, e.g. "2(12)1".
struct CompoundWord {
  std::vector<Word> groups;

  Word word() const;
  std::string to_string() const;
  bool all_groups_start_with(Letter j) const;
};

/// Left-to-right scan: the letters of a strictly descending run before its
/// minimum i_a stay bare; a group opens at i_a, absorbs the repetitions of i_a
/// that follow at once, then every letter > i_a, and closes before the first
/// letter <= i_a.
CompoundWord parenthesize(const Word& w);

/// The same scan in the letter order where `first` precedes every other letter
/// and the rest keep their natural order.
CompoundWord parenthesize(const Word& w, Letter first);

/// (i_a)^m followed by letters all strictly greater than i_a (in the order
/// that puts `first` in front; 0 keeps the natural order).
bool is_good_group(const Word& g, Letter first = 0);

/// X^{g}: the iterated commutator of the group's letters.
Polynomial word_to_commutator(const Word& g, const ParamEnv& env);

/// Product of the group values, left to right.
Polynomial compound_value(const CompoundWord& cw, const ParamEnv& env);

struct GoodBasis {
  Signature signature;
  std::vector<CompoundWord> words;
  std::vector<Polynomial> elements;
  /// Largest rank seen over the random evaluations.
  std::size_t rank = 0;
  bool full_rank() const { return rank == elements.size(); }
};

/// One compound-word polynomial per permutation of Q, in word order. With
/// require_full_rank (meant for generic parameters) a rank deficit throws
/// CrossCheckError.
GoodBasis good_basis(const Signature& q, const ParamEnv& env, const SampleOptions& opts = {},
                     bool require_full_rank = false);

struct MSubspace {
  Letter j = 0;
  std::vector<CompoundWord> words;
  std::vector<Polynomial> elements;
  /// |hat-Q_j|, the size the subspace is claimed to have.
  std::size_t expected_dim = 0;
  std::size_t dim() const { return elements.size(); }
};

/// Compound words of Q whose groups all start with j, taken from the scan in the
/// order that puts j first (in the natural order only the least letter of Q
/// would get a nonempty subspace). Each element is checked to be killed by every
/// d_i, i != j (CrossCheckError otherwise).
MSubspace m_subspace(const Signature& q, Letter j, const ParamEnv& env);

/// Coordinates of c in the span of the subspace, or nullopt.
std::optional<std::vector<Scalar>> m_coordinates(const Polynomial& c, const MSubspace& m, const ParamEnv& env,
                                                 const SampleOptions& opts = {});

} // namespace qconst
