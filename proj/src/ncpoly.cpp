#include "qconst/ncpoly.hpp"

#include <stdexcept>

namespace qconst {

Polynomial Polynomial::monomial(const Word& w, const Scalar& c)
{
  Polynomial p;
  p.add_term(w, c);
  return p;
}

Polynomial Polynomial::from_coordinates(const Basis& basis, const std::vector<Scalar>& c)
{
  Polynomial p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero())
      p.terms_.emplace(basis[i], c[i]);
  return p;
}

Scalar Polynomial::coefficient(const Word& w) const
{
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const Word& w, const Scalar& c)
{
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

Polynomial Polynomial::operator-() const
{
  Polynomial r = *this;
  for (auto& [w, c] : r.terms_)
    c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
  for (const auto& [w, c] : o.terms_)
    add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
  for (const auto& [w, c] : o.terms_)
    add_term(w, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
  Polynomial r;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_)
      r.add_term(u + v, c * d);
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
  if (c.is_zero())
    return Polynomial();
  Polynomial r = *this;
  for (auto& [w, x] : r.terms_)
    x *= c;
  return r;
}

std::optional<std::vector<int>> Polynomial::homogeneous_counts(int k) const
{
  std::optional<std::vector<int>> counts;
  for (const auto& [w, c] : terms_) {
    auto wc = w.counts(k);
    if (!counts)
      counts = std::move(wc);
    else if (*counts != wc)
      return std::nullopt;
  }
  return counts;
}

std::vector<Scalar> Polynomial::coordinates(const Basis& basis) const
{
  std::vector<Scalar> v(basis.size());
  for (const auto& [w, c] : terms_) {
    const long i = basis.index_of(w);
    if (i < 0)
      throw std::invalid_argument("word " + w.to_string() + " is outside the component " +
                                  basis.signature().to_string());
    v[i] = c;
  }
  return v;
}

Polynomial Polynomial::relabeled(const std::vector<Letter>& phi) const
{
  Polynomial r;
  for (const auto& [w, c] : terms_) {
    Word image;
    for (std::size_t i = 0; i < w.size(); ++i)
      image.push_back(phi.at(w[i] - 1));
    r.add_term(image, c);
  }
  return r;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const
{
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    std::string word;
    for (std::size_t i = 0; i < w.size(); ++i)
      word += "e" + std::to_string(w[i]);
    std::string coeff = c.to_string(names);
    bool negative = false;
    const bool simple = c.denominator().is_one() && c.numerator().size() == 1;
    if (simple && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (!simple)
      coeff = "(" + coeff + ")";
    std::string body;
    if (word.empty())
      body = coeff;
    else if (coeff == "1")
      body = word;
    else
      body = coeff + "*" + word;
    if (first)
      out += (negative ? "-" : "") + body;
    else
      out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

} // namespace qconst
