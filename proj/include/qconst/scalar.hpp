#pragma once

#include "qconst/mpoly.hpp"

#include <string>
#include <vector>

namespace qconst {

/// Element of Q(zeta_N)(t_1, ..., t_m): a reduced fraction num/den.
///
/// Canonical form: gcd(num, den) = 1 and den has leading coefficient 1 in
/// lexicographic order, so two scalars are equal iff their numerators and
/// denominators coincide term by term. Zero is 0/1.
class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}
  Scalar(const Rational& v) : num_(Cyclotomic(v)), den_(1) {}
  Scalar(const Cyclotomic& v) : num_(v), den_(1) {}
  Scalar(const MPoly& p) : num_(p), den_(1) {}
  /// Throws std::domain_error when den is zero.
  Scalar(const MPoly& num, const MPoly& den);

  static Scalar var(int index) { return Scalar(MPoly::var(index)); }
  static Scalar zeta(int conductor, long power = 1) { return Scalar(Cyclotomic::zeta(conductor, power)); }

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value in the coefficient field; requires is_constant().
  Cyclotomic constant_value() const;
  /// Size heuristic for pivot selection.
  std::size_t weight() const { return num_.weight() + (den_.is_one() ? 0 : den_.weight()); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Ring-homomorphism image at a point (values indexed by indeterminate).
  /// Throws std::domain_error when the denominator vanishes there.
  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Expression in the scalar grammar; names default to t1, t2, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

private:
  struct Raw {};
  Scalar(MPoly num, MPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();
  void normalize_unit();

  MPoly num_;
  MPoly den_;
};

} // namespace qconst
