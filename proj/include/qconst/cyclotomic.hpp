#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace qconst {

using Rational = mpq_class;

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int conductor);

/// Euler's totient, i.e. the degree of the N-th cyclotomic polynomial.
int totient(int n);

/// Element of Q(zeta_N), stored as a polynomial in zeta_N of degree < phi(N)
/// reduced modulo the N-th cyclotomic polynomial.
///
/// Binary operations on elements of different conductors embed both operands
/// in the field of the least common multiple. Rationals have conductor 1.
class Cyclotomic {
public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(long v) : conductor_(1), coeffs_{Rational(v)} {}
  Cyclotomic(const Rational& v) : conductor_(1), coeffs_{v} { coeffs_[0].canonicalize(); }

  /// zeta_N^power, reduced.
  static Cyclotomic zeta(int conductor, long power = 1);
  /// Builds from an arbitrary-length polynomial in zeta_N (reduced on construction).
  static Cyclotomic from_poly(int conductor, std::vector<Rational> poly);

  int conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  const Rational& rational_part() const { return coeffs_[0]; }
  /// Number of nonzero coefficients; used as a pivot-size heuristic.
  std::size_t weight() const;

  /// Image in Q(zeta_M); requires conductor() | M.
  Cyclotomic lifted(int m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /// Throws std::domain_error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Expression in the scalar grammar, e.g. "1/2 - 3*zeta(5)^2".
  std::string to_string() const;
  /// True when to_string() needs parentheses inside a product.
  bool is_compound() const;

private:
  Cyclotomic(int conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  void reduce(std::vector<Rational> poly);
  static void align(Cyclotomic& a, Cyclotomic& b);

  int conductor_;
  std::vector<Rational> coeffs_;
};

} // namespace qconst
