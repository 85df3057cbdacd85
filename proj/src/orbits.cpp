#include "qconst/orbits.hpp"

#include "qconst/qcalc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qconst {

std::vector<Orbit> decompose(const Signature& q)
{
  const Basis basis(q);
  std::vector<bool> seen(basis.size(), false);
  std::vector<Orbit> orbits;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (seen[i])
      continue;
    // Basis order is lexicographic, so the first unseen word is the least member.
    Orbit o{basis[i], {}};
    Word w = basis[i];
    do {
      seen[basis.index_of(w)] = true;
      o.members.push_back(w);
      w = w.rotated_right();
    } while (w != basis[i]);
    orbits.push_back(std::move(o));
  }
  return orbits;
}

FactorFn a_factors(const ParamEnv& env)
{
  return [&env](const Word& w) { return commutation_factor(w, env); };
}

FactorFn b_factors(Letter j, const ParamEnv& env)
{
  return [j, &env](const Word& w) { return twisted_factor(j, w, env); };
}

Scalar cocycle_product(const Orbit& orbit, const FactorFn& factor)
{
  Scalar p(1);
  for (const auto& w : orbit.members)
    p *= factor(w);
  return p;
}

namespace {

std::vector<OrbitStatus> classify(const Signature& q, const FactorFn& factor, int& chi)
{
  std::vector<OrbitStatus> out;
  chi = 0;
  for (auto& o : decompose(q)) {
    Scalar p = cocycle_product(o, factor);
    const bool singular = p.is_one();
    chi += singular ? 1 : 0;
    out.push_back({std::move(o), std::move(p), singular});
  }
  return out;
}

} // namespace

int OrbitReport::chi_of(Letter j) const
{
  for (const auto& c : children)
    if (c.j == j)
      return c.chi;
  return 0;
}

OrbitReport chi_counts(const Signature& q, const ParamEnv& env)
{
  OrbitReport r;
  r.signature = q;
  r.orbits = classify(q, a_factors(env), r.chi);
  if (q.n() < 2)
    return r;
  for (Letter j : q.letters()) {
    ChildOrbits c;
    c.j = j;
    c.signature = q.child(j);
    c.orbits = classify(c.signature, b_factors(j, env), c.chi);
    r.children.push_back(std::move(c));
  }
  return r;
}

std::vector<Scalar> orbit_relation(const Orbit& orbit, const FactorFn& factor)
{
  std::vector<Scalar> c;
  Scalar running(1);
  for (const auto& w : orbit.members) {
    c.push_back(running);
    running *= factor(w);
  }
  if (!running.is_one())
    throw std::invalid_argument("orbit through " + orbit.representative.to_string() + " is not singular");
  return c;
}

Polynomial commutator_combination(const Orbit& orbit, const std::vector<Scalar>& coeffs, const FactorFn& factor)
{
  if (coeffs.size() != orbit.period())
    throw std::invalid_argument("coefficient count does not match orbit period");
  Polynomial sum;
  for (std::size_t a = 0; a < orbit.period(); ++a) {
    const Word& w = orbit.members[a];
    const Polynomial head = Polynomial::monomial(w.prefix(w.size() - 1), Scalar(1));
    sum += q_commutator(head, Polynomial::letter(w.back()), factor(w)).scaled(coeffs[a]);
  }
  return sum;
}

Polynomial orbital_polynomial(const Orbit& orbit, const std::vector<Scalar>& coeffs)
{
  if (coeffs.size() != orbit.period())
    throw std::invalid_argument("coefficient count does not match orbit period");
  Polynomial u;
  for (std::size_t a = 0; a < orbit.period(); ++a)
    u.add_term(orbit.members[a], coeffs[a]);
  return u;
}

bool dual_cocycle_test(const Orbit& orbit, const std::vector<Scalar>& coeffs, const FactorFn& factor)
{
  if (coeffs.size() != orbit.period())
    throw std::invalid_argument("coefficient count does not match orbit period");
  const std::size_t l = orbit.period();
  Scalar sum;
  Scalar tail(1);
  for (std::size_t a = l; a-- > 0;) {
    tail *= factor(orbit.members[a]);
    sum += tail * coeffs[a];
  }
  return sum.is_zero();
}

Matrix<Scalar> orbit_projector(const Orbit& orbit, const FactorFn& factor)
{
  const std::size_t l = orbit.period();
  std::vector<Scalar> f;
  for (const auto& w : orbit.members)
    f.push_back(factor(w));
  Matrix<Scalar> p(l, std::vector<Scalar>(l));
  for (std::size_t g = 0; g < l; ++g) {
    Scalar c(1);
    for (std::size_t a = 0; a < l; ++a) {
      p[(a + g) % l][g] += c;
      c *= f[(a + g) % l];
    }
  }
  return p;
}

ClosedFormCounts closed_form_counts(const Signature& q)
{
  const int n = q.n();
  if (n < 2)
    throw std::domain_error("closed forms need n >= 2");
  auto check_long = [](const Signature& s) {
    for (const auto& o : decompose(s))
      if (!o.is_long())
        throw std::domain_error("short orbit through " + o.representative.to_string() + " (period " +
                                std::to_string(o.period()) + ") in " + s.to_string());
  };
  check_long(q);
  for (Letter j : q.letters())
    check_long(q.child(j));
  long denom = 1;
  for (int m : q.multiplicities())
    denom *= factorial(m);
  ClosedFormCounts c;
  c.chi = factorial(n - 1) / denom;
  c.dim = factorial(n - 2) / denom;
  for (int j = 1; j <= q.k(); ++j)
    c.chi_j.push_back(q.multiplicity(j) * factorial(n - 2) / denom);
  return c;
}

} // namespace qconst
