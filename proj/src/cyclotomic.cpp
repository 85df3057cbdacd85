#include "qconst/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qconst {

namespace {

using IntPoly = std::vector<std::int64_t>;
using RatPoly = std::vector<Rational>;

// Exact division of monic integer polynomials.
IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0)
      continue;
    for (std::size_t k = 0; k <= dn; ++k)
      num[i - dn + k] -= c * den[k];
  }
  return quot;
}

void trim(RatPoly& p)
{
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

// Returns (q, r) with a = q*b + r; b nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
  trim(a);
  RatPoly q;
  if (a.size() < b.size())
    return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  const std::size_t shift = b.size() - 1;
  for (std::size_t i = a.size(); i > shift; --i) {
    const std::size_t top = i - 1;
    if (sgn(a[top]) == 0)
      continue;
    Rational c = a[top] / lead;
    q[top - shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k)
      a[top - shift + k] -= c * b[k];
  }
  trim(a);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b)
{
  if (a.empty() || b.empty())
    return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0)
        r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly sub(RatPoly a, const RatPoly& b)
{
  if (a.size() < b.size())
    a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] -= b[i];
  trim(a);
  return a;
}

} // namespace

int totient(int n)
{
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(int conductor)
{
  if (conductor < 1)
    throw std::invalid_argument("cyclotomic conductor must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(conductor); it != cache.end())
      return it->second;
  }
  IntPoly p(conductor + 1, 0);
  p[0] = -1;
  p[conductor] = 1;
  for (int d = 1; d < conductor; ++d)
    if (conductor % d == 0)
      p = divide_monic(p, cyclotomic_polynomial(d));
  std::lock_guard lock(mutex);
  return cache.emplace(conductor, std::move(p)).first->second;
}

Cyclotomic Cyclotomic::zeta(int conductor, long power)
{
  const long m = ((power % conductor) + conductor) % conductor;
  RatPoly poly(m + 1, Rational(0));
  poly[m] = 1;
  return from_poly(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::from_poly(int conductor, std::vector<Rational> poly)
{
  Cyclotomic c(conductor, {});
  c.reduce(std::move(poly));
  return c;
}

void Cyclotomic::reduce(std::vector<Rational> poly)
{
  const auto& phi = cyclotomic_polynomial(conductor_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0)
      continue;
    const Rational c = poly[i];
    for (std::size_t k = 0; k <= deg; ++k)
      if (phi[k] != 0)
        poly[i - deg + k] -= c * Rational(static_cast<long>(phi[k]));
  }
  poly.resize(deg, Rational(0));
  coeffs_ = std::move(poly);
}

bool Cyclotomic::is_zero() const
{
  for (const auto& c : coeffs_)
    if (sgn(c) != 0)
      return false;
  return true;
}

bool Cyclotomic::is_one() const
{
  if (coeffs_[0] != 1)
    return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0)
      return false;
  return true;
}

bool Cyclotomic::is_rational() const
{
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0)
      return false;
  return true;
}

std::size_t Cyclotomic::weight() const
{
  std::size_t w = 0;
  for (const auto& c : coeffs_)
    if (sgn(c) != 0)
      w += 1 + (mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2)) / 64;
  return w;
}

Cyclotomic Cyclotomic::lifted(int m) const
{
  if (m == conductor_)
    return *this;
  if (m % conductor_ != 0)
    throw std::invalid_argument("cannot embed Q(zeta_" + std::to_string(conductor_) +
                                ") into Q(zeta_" + std::to_string(m) + ")");
  const int step = m / conductor_;
  RatPoly poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    poly[i * step] = coeffs_[i];
  return from_poly(m, std::move(poly));
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b)
{
  if (a.conductor_ == b.conductor_)
    return;
  // Rationals embed anywhere without reduction.
  if (a.conductor_ <= 2 && a.is_rational()) {
    Rational v = a.coeffs_[0];
    a = Cyclotomic(b.conductor_, RatPoly(b.coeffs_.size(), Rational(0)));
    a.coeffs_[0] = v;
    return;
  }
  if (b.conductor_ <= 2 && b.is_rational()) {
    Rational v = b.coeffs_[0];
    b = Cyclotomic(a.conductor_, RatPoly(a.coeffs_.size(), Rational(0)));
    b.coeffs_[0] = v;
    return;
  }
  const int l = std::lcm(a.conductor_, b.conductor_);
  a = a.lifted(l);
  b = b.lifted(l);
}

Cyclotomic Cyclotomic::operator-() const
{
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o)
{
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  return *this += b;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o)
{
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  return *this -= b;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o)
{
  if (conductor_ != o.conductor_) {
    Cyclotomic b = o;
    align(*this, b);
    return *this *= b;
  }
  if (coeffs_.size() == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  if (o.is_rational()) {
    for (auto& c : coeffs_)
      c *= o.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    Rational v = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_)
      c *= v;
    return *this;
  }
  reduce(mul(coeffs_, o.coeffs_));
  return *this;
}

Cyclotomic Cyclotomic::inverse() const
{
  if (is_zero())
    throw std::domain_error("inverse of zero");
  if (is_rational()) {
    Cyclotomic r = *this;
    r.coeffs_[0] = 1 / coeffs_[0];
    return r;
  }
  // Extended Euclid: s*a + t*phi = 1, so s is the inverse.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  RatPoly r0;
  for (auto c : phi_int)
    r0.emplace_back(static_cast<long>(c));
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Rational inv = 1 / r1[0];
  for (auto& c : s1)
    c *= inv;
  return from_poly(conductor_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o)
{
  return *this *= o.inverse();
}

Cyclotomic Cyclotomic::pow(long e) const
{
  if (e < 0)
    return inverse().pow(-e);
  Cyclotomic result = Cyclotomic(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e > 0)
      base *= base;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
  if (a.conductor_ == b.conductor_)
    return a.coeffs_ == b.coeffs_;
  Cyclotomic x = a, y = b;
  Cyclotomic::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

bool Cyclotomic::is_compound() const
{
  int nonzero = 0;
  for (const auto& c : coeffs_)
    if (sgn(c) != 0)
      ++nonzero;
  if (nonzero > 1)
    return true;
  return false;
}

std::string Cyclotomic::to_string() const
{
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0)
      continue;
    Rational mag = abs(c);
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1)
      os << mag.get_str() << "*";
    os << "zeta(" << conductor_ << ")";
    if (i > 1)
      os << "^" << i;
  }
  if (first)
    return "0";
  return os.str();
}

} // namespace qconst
