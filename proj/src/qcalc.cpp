#include "qconst/qcalc.hpp"

#include <stdexcept>

namespace qconst {

Scalar grading_factor(const Word& u, Letter i, const ParamEnv& env)
{
  Scalar f(1);
  for (std::size_t r = 0; r < u.size(); ++r)
    f *= env.q(i, u[r]);
  return f;
}

Scalar commutation_factor(const Word& w, const ParamEnv& env)
{
  if (w.empty())
    throw std::invalid_argument("commutation factor of the empty word");
  return grading_factor(w.prefix(w.size() - 1), w.back(), env);
}

Scalar twisted_factor(Letter j, const Word& w, const ParamEnv& env)
{
  if (w.empty())
    throw std::invalid_argument("twisted factor of the empty word");
  return env.q(j, w.back()) * commutation_factor(Word({j}) + w, env);
}

Polynomial derive(Letter i, const Polynomial& p, const ParamEnv& env)
{
  Polynomial out;
  for (const auto& [w, c] : p.terms()) {
    Scalar factor(1);
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (w[pos] == i)
        out.add_term(w.without(pos), c * factor);
      factor *= env.q(i, w[pos]);
    }
  }
  return out;
}

Polynomial q_commutator(const Polynomial& u, const Polynomial& v, const Scalar& a)
{
  return u * v - (v * u).scaled(a);
}

Polynomial simple_commutator(const Word& w, const ParamEnv& env)
{
  if (w.empty())
    throw std::invalid_argument("simple commutator of the empty word");
  const Polynomial head = Polynomial::monomial(w.prefix(w.size() - 1), Scalar(1));
  return q_commutator(head, Polynomial::letter(w.back()), commutation_factor(w, env));
}

IteratedCommutator iterated_X(const Word& index, const ParamEnv& env)
{
  if (index.empty())
    throw std::invalid_argument("iterated commutator needs a nonempty index");
  Polynomial x = Polynomial::letter(index[0]);
  for (std::size_t p = 2; p <= index.size(); ++p)
    x = q_commutator(x, Polynomial::letter(index[p - 1]), commutation_factor(index.prefix(p), env));
  return {index, std::move(x)};
}

YFamily Y_family(Letter j, const Word& index, const ParamEnv& env)
{
  if (index.empty())
    throw std::invalid_argument("Y family needs a nonempty index");
  YFamily y{j, index, Polynomial::letter(index[0]), {}};
  for (std::size_t p = 2; p <= index.size(); ++p) {
    Scalar b = twisted_factor(j, index.prefix(p), env);
    y.expansion = q_commutator(y.expansion, Polynomial::letter(index[p - 1]), b);
    y.factors.push_back(std::move(b));
  }
  return y;
}

Polynomial adjoint(const Polynomial& u, Letter i, const ParamEnv& env)
{
  if (u.is_zero())
    throw std::invalid_argument("adjoint action needs a nonzero homogeneous element");
  const auto counts = u.homogeneous_counts(env.k());
  if (!counts)
    throw std::invalid_argument("adjoint action needs a homogeneous element");
  const Word& w = u.terms().begin()->first;
  if (w.empty())
    throw std::invalid_argument("adjoint action is undefined on the unit");
  return q_commutator(u, Polynomial::letter(i), grading_factor(w, i, env));
}

} // namespace qconst
