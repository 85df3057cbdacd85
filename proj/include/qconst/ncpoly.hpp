#pragma once

#include "qconst/scalar.hpp"
#include "qconst/word.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qconst {

class Basis;

/// Element of the free unital algebra: a finite map word -> scalar with no
/// zero coefficients.
class Polynomial {
public:
  using Terms = std::map<Word, Scalar>;

  Polynomial() = default;
  static Polynomial unit() { return monomial(Word(), Scalar(1)); }
  static Polynomial letter(Letter i) { return monomial(Word({i}), Scalar(1)); }
  static Polynomial monomial(const Word& w, const Scalar& c);
  /// Inverse of coordinates(): sum of c[i] * basis[i].
  static Polynomial from_coordinates(const Basis& basis, const std::vector<Scalar>& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  Scalar coefficient(const Word& w) const;

  /// Adds c * w in place.
  void add_term(const Word& w, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  /// Concatenation product.
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Scalar& c) const;

  /// Letter-count vector when every term has the same one, otherwise empty.
  std::optional<std::vector<int>> homogeneous_counts(int k) const;
  /// Coordinates in a basis; throws std::invalid_argument on a foreign word.
  std::vector<Scalar> coordinates(const Basis& basis) const;

  /// Applies a letter substitution e_i -> e_{phi(i)} (phi[i-1] = image).
  Polynomial relabeled(const std::vector<Letter>& phi) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// e.g. "e1e2 - t1*e2e1"; the unit word prints as "1".
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  Terms terms_;
};

} // namespace qconst
