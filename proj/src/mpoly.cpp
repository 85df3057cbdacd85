#include "qconst/mpoly.hpp"

#include "qconst/modfield.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <vector>
#include <sstream>
#include <stdexcept>

namespace qconst {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(int index, int exponent)
{
  Monomial m;
  if (exponent > 0)
    m.push(index, exponent);
  return m;
}

void Monomial::push(int var, int exp)
{
  if (exp > 0xffff || var > 0xffff)
    throw std::overflow_error("monomial exponent or variable index out of range");
  packed_.push_back((static_cast<std::uint32_t>(var) << 16) | static_cast<std::uint32_t>(exp));
}

int Monomial::degree(int var) const
{
  for (std::size_t i = 0; i < packed_.size(); ++i)
    if (var_at(i) == var)
      return exp_at(i);
  return 0;
}

int Monomial::total_degree() const
{
  int d = 0;
  for (std::size_t i = 0; i < packed_.size(); ++i)
    d += exp_at(i);
  return d;
}

bool Monomial::divides(const Monomial& other) const
{
  std::size_t j = 0;
  for (std::size_t i = 0; i < packed_.size(); ++i) {
    while (j < other.packed_.size() && other.var_at(j) < var_at(i))
      ++j;
    if (j == other.packed_.size() || other.var_at(j) != var_at(i) || other.exp_at(j) < exp_at(i))
      return false;
  }
  return true;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b)
{
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.packed_.size() && j < b.packed_.size()) {
    if (a.var_at(i) < b.var_at(j))
      ++i;
    else if (a.var_at(i) > b.var_at(j))
      ++j;
    else {
      r.push(a.var_at(i), std::min(a.exp_at(i), b.exp_at(j)));
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial Monomial::without(int var) const
{
  Monomial r;
  for (std::size_t i = 0; i < packed_.size(); ++i)
    if (var_at(i) != var)
      r.packed_.push_back(packed_[i]);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
  Monomial r;
  r.packed_.reserve(a.packed_.size() + b.packed_.size());
  std::size_t i = 0, j = 0;
  while (i < a.packed_.size() || j < b.packed_.size()) {
    if (j == b.packed_.size() || (i < a.packed_.size() && a.var_at(i) < b.var_at(j)))
      r.packed_.push_back(a.packed_[i++]);
    else if (i == a.packed_.size() || b.var_at(j) < a.var_at(i))
      r.packed_.push_back(b.packed_[j++]);
    else {
      r.push(a.var_at(i), a.exp_at(i) + b.exp_at(j));
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b)
{
  Monomial r;
  std::size_t j = 0;
  for (std::size_t i = 0; i < a.packed_.size(); ++i) {
    int e = a.exp_at(i);
    if (j < b.packed_.size() && b.var_at(j) == a.var_at(i))
      e -= b.exp_at(j++);
    if (e < 0)
      throw std::domain_error("monomial does not divide");
    if (e > 0)
      r.push(a.var_at(i), e);
  }
  if (j != b.packed_.size())
    throw std::domain_error("monomial does not divide");
  return r;
}

int Monomial::compare(const Monomial& a, const Monomial& b)
{
  const std::size_t n = std::min(a.packed_.size(), b.packed_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int va = a.var_at(i), vb = b.var_at(i);
    if (va != vb)
      return va < vb ? 1 : -1;
    const int ea = a.exp_at(i), eb = b.exp_at(i);
    if (ea != eb)
      return ea < eb ? -1 : 1;
  }
  if (a.packed_.size() == b.packed_.size())
    return 0;
  return a.packed_.size() < b.packed_.size() ? -1 : 1;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const
{
  std::string s;
  for (std::size_t i = 0; i < packed_.size(); ++i) {
    if (i)
      s += "*";
    const int v = var_at(i);
    s += v < static_cast<int>(names.size()) ? names[v] : "t" + std::to_string(v + 1);
    if (exp_at(i) > 1)
      s += "^" + std::to_string(exp_at(i));
  }
  return s;
}

// ---------------------------------------------------------------- MPoly

namespace {

bool term_before(const MPoly::Term& a, const MPoly::Term& b)
{
  return Monomial::compare(a.mono, b.mono) > 0;
}

} // namespace

MPoly::MPoly(const Cyclotomic& c)
{
  if (!c.is_zero())
    terms_.push_back({Monomial(), c});
}

MPoly MPoly::var(int index)
{
  return monomial(Monomial::var(index), Cyclotomic(1));
}

MPoly MPoly::monomial(const Monomial& m, const Cyclotomic& c)
{
  MPoly p;
  if (!c.is_zero())
    p.terms_.push_back({m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms)
{
  std::sort(terms.begin(), terms.end(), term_before);
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else {
      if (!p.terms_.empty() && p.terms_.back().coeff.is_zero())
        p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff.is_zero())
    p.terms_.pop_back();
  return p;
}

Cyclotomic MPoly::constant_value() const
{
  if (terms_.empty())
    return Cyclotomic(0);
  if (!is_constant())
    throw std::logic_error("polynomial is not constant");
  return terms_[0].coeff;
}

int MPoly::degree(int var) const
{
  int d = 0;
  for (const auto& t : terms_)
    d = std::max(d, t.mono.degree(var));
  return d;
}

int MPoly::min_var() const
{
  int v = -1;
  for (const auto& t : terms_) {
    const int f = t.mono.first_var();
    if (f >= 0 && (v < 0 || f < v))
      v = f;
  }
  return v;
}

Monomial MPoly::monomial_content() const
{
  if (terms_.empty())
    return Monomial();
  Monomial m = terms_[0].mono;
  for (std::size_t i = 1; i < terms_.size() && !m.is_one(); ++i)
    m = Monomial::gcd(m, terms_[i].mono);
  return m;
}

std::size_t MPoly::weight() const
{
  std::size_t w = 0;
  for (const auto& t : terms_)
    w += t.coeff.weight() + t.mono.size();
  return w;
}

MPoly MPoly::operator-() const
{
  MPoly r = *this;
  for (auto& t : r.terms_)
    t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<MPoly::Term> merge(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b, bool subtract)
{
  std::vector<MPoly::Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = -1;
    else if (j == b.size())
      c = 1;
    else
      c = Monomial::compare(a[i].mono, b[j].mono);
    if (c > 0)
      r.push_back(a[i++]);
    else if (c < 0) {
      r.push_back(b[j++]);
      if (subtract)
        r.back().coeff = -r.back().coeff;
    } else {
      Cyclotomic s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero())
        r.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

} // namespace

MPoly& MPoly::operator+=(const MPoly& o)
{
  if (o.terms_.empty())
    return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
  if (o.terms_.empty())
    return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
  if (a.terms_.empty() || b.terms_.empty())
    return MPoly();
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_one())
    return a.scaled(b.terms_[0].coeff);
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_one())
    return b.scaled(a.terms_[0].coeff);
  std::vector<MPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return MPoly::from_terms(std::move(prod));
}

MPoly MPoly::scaled(const Cyclotomic& c) const
{
  if (c.is_zero())
    return MPoly();
  MPoly r = *this;
  for (auto& t : r.terms_)
    t.coeff *= c;
  return r;
}

MPoly MPoly::shifted(const Monomial& m) const
{
  MPoly r = *this;
  for (auto& t : r.terms_)
    t.mono = t.mono * m;
  return r;
}

MPoly MPoly::pow(int e) const
{
  if (e < 0)
    throw std::domain_error("negative power of a polynomial");
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

MPoly MPoly::monic() const
{
  if (terms_.empty() || terms_[0].coeff.is_one())
    return *this;
  return scaled(terms_[0].coeff.inverse());
}

MPoly MPoly::divide_exact(const MPoly& a, const MPoly& b)
{
  if (b.is_zero())
    throw std::domain_error("division by zero polynomial");
  auto q = try_divide(a, b);
  if (!q)
    throw std::domain_error("inexact polynomial division");
  return std::move(*q);
}

std::optional<MPoly> MPoly::try_divide(const MPoly& a, const MPoly& b)
{
  if (b.is_zero())
    return std::nullopt;
  if (a.is_zero())
    return MPoly();
  if (b.is_monomial()) {
    const Cyclotomic inv = b.terms_[0].coeff.inverse();
    MPoly r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& t : a.terms_) {
      if (!b.terms_[0].mono.divides(t.mono))
        return std::nullopt;
      r.terms_.push_back({t.mono / b.terms_[0].mono, t.coeff * inv});
    }
    return r;
  }
  const Cyclotomic inv = b.terms_[0].coeff.inverse();
  std::vector<Term> quot;
  MPoly rem = a;
  while (!rem.is_zero()) {
    const Term& lr = rem.terms_[0];
    if (!b.terms_[0].mono.divides(lr.mono))
      return std::nullopt;
    Term t{lr.mono / b.terms_[0].mono, lr.coeff * inv};
    rem -= b.shifted(t.mono).scaled(t.coeff);
    quot.push_back(std::move(t));
  }
  return from_terms(std::move(quot));
}

std::map<int, MPoly> MPoly::coefficients_in(int var) const
{
  std::map<int, std::vector<Term>> buckets;
  for (const auto& t : terms_)
    buckets[t.mono.degree(var)].push_back({t.mono.without(var), t.coeff});
  std::map<int, MPoly> out;
  for (auto& [d, ts] : buckets)
    out.emplace(d, from_terms(std::move(ts)));
  return out;
}

MPoly MPoly::from_coefficients_in(int var, const std::map<int, MPoly>& coeffs)
{
  std::vector<Term> ts;
  for (const auto& [d, c] : coeffs)
    for (const auto& t : c.terms_)
      ts.push_back({t.mono * Monomial::var(var, d), t.coeff});
  return from_terms(std::move(ts));
}

namespace {

MPoly content_in(const MPoly& p, int var);
MPoly gcd_impl(const MPoly& a, const MPoly& b);

MPoly primitive_part_in(const MPoly& p, int var)
{
  const MPoly c = content_in(p, var);
  return MPoly::divide_exact(p, c).monic();
}

// Pseudo-remainder of a by b with respect to var; deg_var(b) >= 1.
MPoly pseudo_remainder(MPoly a, const MPoly& b, int var)
{
  const int db = b.degree(var);
  const auto bc = b.coefficients_in(var);
  const MPoly& lb = bc.rbegin()->second;
  while (!a.is_zero()) {
    const int da = a.degree(var);
    if (da < db)
      break;
    const MPoly la = a.coefficients_in(var).rbegin()->second;
    a = a * lb - (b * la).shifted(Monomial::var(var, da - db));
  }
  return a;
}

MPoly content_in(const MPoly& p, int var)
{
  const auto coeffs = p.coefficients_in(var);
  MPoly g;
  for (const auto& [d, c] : coeffs) {
    g = gcd_impl(g, c);
    if (g.is_constant())
      return MPoly(1);
  }
  return g;
}

const ModField& gcd_field(int conductor)
{
  static std::mutex mu;
  static std::map<int, ModField> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(conductor);
  if (it == cache.end()) {
    std::mt19937_64 rng(0x6a09e667f3bcc908ULL + static_cast<std::uint64_t>(conductor));
    it = cache.emplace(conductor, random_field(conductor, rng)).first;
  }
  return it->second;
}

int coefficient_conductor(const MPoly& p)
{
  int n = 1;
  for (const auto& t : p.terms())
    n = std::lcm(n, t.coeff.conductor());
  return n;
}

// Image of p in F_p[x_var] with every other indeterminate sent to a fixed
// pseudo-random value; nullopt when a coefficient denominator vanishes.
std::optional<std::vector<std::uint64_t>> univariate_image(const MPoly& p, int var, const ModField& f)
{
  std::vector<std::uint64_t> out(static_cast<std::size_t>(p.degree(var)) + 1, 0);
  for (const auto& t : p.terms()) {
    auto c = reduce(t.coeff, f);
    if (!c)
      return std::nullopt;
    std::uint64_t v = *c;
    int d = 0;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const int x = t.mono.var_at(i);
      if (x == var) {
        d = t.mono.exp_at(i);
        continue;
      }
      // Fixed evaluation value per variable, derived from its index.
      const std::uint64_t val = f.pow(3 + static_cast<std::uint64_t>(x) * 7919, 5) % f.p;
      v = f.mul(v, f.pow(val, static_cast<std::uint64_t>(t.mono.exp_at(i))));
    }
    out[d] = f.add(out[d], v);
  }
  return out;
}

void trim(std::vector<std::uint64_t>& a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Degree in var of the gcd of the images of a and b, an upper bound for the
// degree of their gcd; nullopt when a leading coefficient vanishes.
std::optional<int> modular_gcd_degree(const MPoly& a, const MPoly& b, int var)
{
  const ModField& f = gcd_field(std::lcm(coefficient_conductor(a), coefficient_conductor(b)));
  auto ia = univariate_image(a, var, f);
  auto ib = univariate_image(b, var, f);
  if (!ia || !ib)
    return std::nullopt;
  std::vector<std::uint64_t> x = std::move(*ia), y = std::move(*ib);
  trim(x);
  trim(y);
  if (static_cast<int>(x.size()) != a.degree(var) + 1 || static_cast<int>(y.size()) != b.degree(var) + 1)
    return std::nullopt;
  while (!y.empty()) {
    // x <- x mod y
    const std::uint64_t inv = f.inv(y.back());
    while (x.size() >= y.size()) {
      const std::uint64_t c = f.mul(x.back(), inv);
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i)
        x[shift + i] = f.sub(x[shift + i], f.mul(c, y[i]));
      trim(x);
      if (x.empty())
        break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

// gcd of primitive, monic p and q with deg_v(p) >= deg_v(q) >= 1. A modular
// image settles the coprime case and the case q | p; otherwise a primitive
// pseudo-remainder sequence runs.
MPoly primitive_gcd(MPoly p, MPoly q, int v)
{
  const std::optional<int> bound = modular_gcd_degree(p, q, v);
  if (bound && *bound == 0)
    return MPoly(1);
  if (bound && *bound == q.degree(v) && MPoly::try_divide(p, q))
    return q;
  for (;;) {
    MPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero())
      return primitive_part_in(q, v);
    if (r.degree(v) == 0)
      return MPoly(1);
    p = std::move(q);
    q = primitive_part_in(r, v);
  }
}

MPoly gcd_impl(const MPoly& a, const MPoly& b)
{
  if (a.is_zero())
    return b.monic();
  if (b.is_zero())
    return a.monic();
  if (a.is_constant() || b.is_constant())
    return MPoly(1);
  const Monomial ma = a.monomial_content(), mb = b.monomial_content();
  const MPoly mg = MPoly::monomial(Monomial::gcd(ma, mb), Cyclotomic(1));
  const MPoly a1 = ma.is_one() ? a : MPoly::divide_exact(a, MPoly::monomial(ma, Cyclotomic(1)));
  const MPoly b1 = mb.is_one() ? b : MPoly::divide_exact(b, MPoly::monomial(mb, Cyclotomic(1)));
  if (a1.is_constant() || b1.is_constant())
    return mg;
  if (a1 == b1)
    return (mg * a1).monic();
  const int va = a1.min_var(), vb = b1.min_var();
  const int v = std::min(va, vb);
  MPoly g;
  if (a1.degree(v) == 0)
    g = gcd_impl(a1, content_in(b1, v));
  else if (b1.degree(v) == 0)
    g = gcd_impl(content_in(a1, v), b1);
  else {
    const MPoly ca = content_in(a1, v), cb = content_in(b1, v);
    const MPoly c = gcd_impl(ca, cb);
    MPoly p = ca.is_one() ? a1.monic() : MPoly::divide_exact(a1, ca).monic();
    MPoly q = cb.is_one() ? b1.monic() : MPoly::divide_exact(b1, cb).monic();
    if (p.degree(v) < q.degree(v))
      std::swap(p, q);
    g = c * primitive_gcd(std::move(p), std::move(q), v);
  }
  return (mg * g).monic();
}

} // namespace

MPoly MPoly::gcd(const MPoly& a, const MPoly& b)
{
  return gcd_impl(a, b);
}

Cyclotomic MPoly::evaluate(const std::vector<Cyclotomic>& point) const
{
  Cyclotomic sum(0);
  for (const auto& t : terms_) {
    Cyclotomic v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const int var = t.mono.var_at(i);
      if (var >= static_cast<int>(point.size()))
        throw std::out_of_range("evaluation point misses indeterminate t" + std::to_string(var + 1));
      v *= point[var].pow(t.mono.exp_at(i));
    }
    sum += v;
  }
  return sum;
}

bool operator==(const MPoly& a, const MPoly& b)
{
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

int MPoly::compare(const MPoly& a, const MPoly& b)
{
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = Monomial::compare(a.terms_[i].mono, b.terms_[i].mono))
      return c;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    bool negative = false;
    std::string coeff;
    if (t.coeff.is_compound()) {
      coeff = "(" + t.coeff.to_string() + ")";
    } else {
      coeff = t.coeff.to_string();
      if (coeff.front() == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
    }
    std::string body;
    if (t.mono.is_one())
      body = coeff;
    else if (coeff == "1")
      body = t.mono.to_string(names);
    else
      body = coeff + "*" + t.mono.to_string(names);
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

} // namespace qconst
