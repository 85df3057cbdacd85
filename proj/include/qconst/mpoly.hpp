#pragma once

#include "qconst/cyclotomic.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qconst {

/// Commutative monomial t_{v1}^{e1} t_{v2}^{e2} ..., stored sparsely with
/// variables ascending. Variable indices are zero-based.
class Monomial {
public:
  Monomial() = default;
  static Monomial var(int index, int exponent = 1);

  bool is_one() const { return packed_.empty(); }
  int degree(int var) const;
  int total_degree() const;
  /// Lowest-index variable present, or -1.
  int first_var() const { return packed_.empty() ? -1 : static_cast<int>(packed_.front() >> 16); }
  std::size_t size() const { return packed_.size(); }
  int var_at(std::size_t i) const { return static_cast<int>(packed_[i] >> 16); }
  int exp_at(std::size_t i) const { return static_cast<int>(packed_[i] & 0xffffu); }

  bool divides(const Monomial& other) const;
  /// Componentwise minimum of exponents.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  /// The monomial with var removed.
  Monomial without(int var) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  /// Lexicographic order with t_0 most significant; returns -1, 0, 1.
  static int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.packed_ == b.packed_; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return compare(a, b) < 0; }

  std::string to_string(const std::vector<std::string>& names) const;

private:
  void push(int var, int exp);
  std::vector<std::uint32_t> packed_;
};

/// Polynomial in commuting indeterminates over the cyclotomic field. Terms are
/// kept sorted by descending lexicographic monomial order with no zero
/// coefficients, so structural equality is value equality.
class MPoly {
public:
  struct Term {
    Monomial mono;
    Cyclotomic coeff;
  };

  MPoly() = default;
  MPoly(const Cyclotomic& c);
  MPoly(long c) : MPoly(Cyclotomic(c)) {}
  static MPoly var(int index);
  static MPoly monomial(const Monomial& m, const Cyclotomic& c);
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  /// Constant value; requires is_constant().
  Cyclotomic constant_value() const;

  int degree(int var) const;
  /// Lowest-index variable occurring, or -1 for constants.
  int min_var() const;
  /// Componentwise minimum exponent over all terms.
  Monomial monomial_content() const;
  std::size_t weight() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Cyclotomic& c) const;
  MPoly shifted(const Monomial& m) const;
  MPoly pow(int e) const;

  /// Exact quotient a / b; throws std::domain_error if b does not divide a.
  static MPoly divide_exact(const MPoly& a, const MPoly& b);
  /// a / b when b divides a exactly, otherwise nullopt.
  static std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);
  /// Greatest common divisor, normalized so the leading coefficient is 1.
  static MPoly gcd(const MPoly& a, const MPoly& b);
  /// Divides by the leading coefficient.
  MPoly monic() const;

  /// Coefficients as a polynomial in var (keys are degrees in var).
  std::map<int, MPoly> coefficients_in(int var) const;
  static MPoly from_coefficients_in(int var, const std::map<int, MPoly>& coeffs);

  /// Substitutes values for every variable index; missing indices throw.
  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  /// Total order (used for canonical sorting only).
  static int compare(const MPoly& a, const MPoly& b);

  std::string to_string(const std::vector<std::string>& names) const;

private:
  std::vector<Term> terms_;
};

} // namespace qconst
