#include "qconst/scalar.hpp"

#include <stdexcept>

namespace qconst {

Scalar::Scalar(const MPoly& num, const MPoly& den) : num_(num), den_(den)
{
  if (den_.is_zero())
    throw std::domain_error("division by zero");
  normalize();
}

void Scalar::normalize()
{
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    MPoly g = MPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = MPoly::divide_exact(num_, g);
      den_ = MPoly::divide_exact(den_, g);
    }
  }
  normalize_unit();
}

void Scalar::normalize_unit()
{
  const Cyclotomic& lc = den_.leading().coeff;
  if (lc.is_one())
    return;
  const Cyclotomic inv = lc.inverse();
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
}

Cyclotomic Scalar::constant_value() const
{
  if (!is_constant())
    throw std::logic_error("scalar is not constant");
  return num_.constant_value();
}

Scalar Scalar::operator-() const
{
  return Scalar(-num_, den_, Raw{});
}

Scalar& Scalar::operator+=(const Scalar& o)
{
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_one() || num_.is_zero()) {
      if (num_.is_zero())
        den_ = MPoly(1);
      return *this;
    }
    normalize();
    return *this;
  }
  if (den_.is_one()) {
    // a + c/d = (a*d + c)/d is already reduced.
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  const MPoly g = MPoly::gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  } else {
    const MPoly b1 = MPoly::divide_exact(den_, g);
    const MPoly d1 = MPoly::divide_exact(o.den_, g);
    num_ = num_ * d1 + o.num_ * b1;
    den_ = den_ * d1;
    if (num_.is_zero()) {
      den_ = MPoly(1);
      return *this;
    }
    const MPoly h = MPoly::gcd(num_, g);
    if (!h.is_one()) {
      num_ = MPoly::divide_exact(num_, h);
      den_ = MPoly::divide_exact(den_, h);
    }
  }
  normalize_unit();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
  return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
  if (is_zero())
    return *this;
  if (o.is_zero())
    return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  const MPoly g1 = o.den_.is_one() ? MPoly(1) : MPoly::gcd(num_, o.den_);
  const MPoly g2 = den_.is_one() ? MPoly(1) : MPoly::gcd(o.num_, den_);
  const MPoly a = g1.is_one() ? num_ : MPoly::divide_exact(num_, g1);
  const MPoly c = g2.is_one() ? o.num_ : MPoly::divide_exact(o.num_, g2);
  const MPoly b = g2.is_one() ? den_ : MPoly::divide_exact(den_, g2);
  const MPoly d = g1.is_one() ? o.den_ : MPoly::divide_exact(o.den_, g1);
  num_ = a * c;
  den_ = b * d;
  normalize_unit();
  return *this;
}

Scalar Scalar::inverse() const
{
  if (is_zero())
    throw std::domain_error("inverse of zero");
  Scalar r(den_, num_, Raw{});
  r.normalize_unit();
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
  return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const
{
  if (e < 0)
    return inverse().pow(-e);
  // Powers of a reduced fraction stay reduced.
  Scalar r(num_.pow(static_cast<int>(e)), den_.pow(static_cast<int>(e)), Raw{});
  r.normalize_unit();
  return r;
}

Cyclotomic Scalar::evaluate(const std::vector<Cyclotomic>& point) const
{
  const Cyclotomic d = den_.evaluate(point);
  if (d.is_zero())
    throw std::domain_error("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string Scalar::to_string(const std::vector<std::string>& names) const
{
  if (den_.is_one())
    return num_.to_string(names);
  std::string n = num_.to_string(names);
  if (num_.size() > 1)
    n = "(" + n + ")";
  std::string d = den_.to_string(names);
  const bool bare_den = den_.is_monomial() && den_.leading().coeff.is_one() && den_.leading().mono.size() == 1;
  if (!bare_den)
    d = "(" + d + ")";
  return n + "/" + d;
}

} // namespace qconst
