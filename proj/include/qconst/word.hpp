#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qconst {

/// Generator index, 1-based (e_1 ... e_k).
using Letter = int;

inline constexpr int kMaxLetters = 9;

/// Monomial e_{i_1} ... e_{i_n} as a letter sequence; ordered lexicographically.
class Word {
public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);
  /// Parses a digit string such as "1122"; throws std::invalid_argument.
  static Word parse(std::string_view digits);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return static_cast<unsigned char>(letters_[i]); }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return (*this)[size() - 1]; }

  void push_back(Letter l);
  Word prefix(std::size_t len) const;
  Word suffix_from(std::size_t pos) const;
  Word without(std::size_t pos) const;
  /// i_1 i_2 ... i_n -> i_n i_1 ... i_{n-1}.
  Word rotated_right() const;
  /// i_1 i_2 ... i_n -> i_2 ... i_n i_1.
  Word rotated_left() const;

  /// Letter-count vector of length k.
  std::vector<int> counts(int k) const;
  Letter max_letter() const;
  std::vector<Letter> letters() const;

  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

  /// Digit string, e.g. "1122"; the empty word prints as "".
  std::string to_string() const;
  const std::string& raw() const { return letters_; }

private:
  std::string letters_;
};

/// Multiset Q = 1^{n_1} ... k^{n_k}.
class Signature {
public:
  Signature() = default;
  /// Throws std::invalid_argument on negative counts, all-zero counts or k > 9.
  explicit Signature(std::vector<int> multiplicities);
  /// Signature of the letters in a digit string, e.g. "1123".
  static Signature parse(std::string_view digits);
  /// The empty signature (only used as the degree-0 component).
  static Signature empty(int k);

  int k() const { return static_cast<int>(mult_.size()); }
  int n() const;
  int multiplicity(Letter j) const { return mult_.at(j - 1); }
  const std::vector<int>& multiplicities() const { return mult_; }
  bool is_empty() const { return n() == 0; }

  /// Q_j: one copy of j removed; throws when n_j = 0.
  Signature child(Letter j) const;
  /// Letters j with n_j >= 1, ascending.
  std::vector<Letter> letters() const;
  /// True when a single letter carries the whole multiset (Q = i^n).
  bool is_single_letter() const;
  /// The sorted word 1..1 2..2 ...
  Word sorted_word() const;
  /// n! / (n_1! ... n_k!).
  std::size_t component_size() const;

  friend bool operator==(const Signature& a, const Signature& b) = default;
  std::string to_string() const { return sorted_word().to_string(); }

private:
  std::vector<int> mult_;
};

/// Distinct permutations of a signature, sorted lexicographically, with lookup.
class Basis {
public:
  explicit Basis(const Signature& q);

  const Signature& signature() const { return sig_; }
  std::size_t size() const { return words_.size(); }
  const Word& operator[](std::size_t i) const { return words_[i]; }
  const std::vector<Word>& words() const { return words_; }
  /// Index of w, or -1 when w is not a permutation of the signature.
  long index_of(const Word& w) const;

private:
  Signature sig_;
  std::vector<Word> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// All distinct permutations of Q in lexicographic order.
Basis enumerate_component(const Signature& q);

long factorial(int n);

} // namespace qconst

template <>
struct std::hash<qconst::Word> {
  std::size_t operator()(const qconst::Word& w) const noexcept { return std::hash<std::string>{}(w.raw()); }
};
