#include "qconst/properties.hpp"

#include "qconst/orbits.hpp"
#include "qconst/qcalc.hpp"
#include "qconst/strata.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace qconst {

namespace {

constexpr int kConductor = 12;

int uniform(std::mt19937_64& rng, int lo, int hi)
{
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Scalar random_rational(std::mt19937_64& rng)
{
  int num = uniform(rng, 1, 9) * (uniform(rng, 0, 1) ? 1 : -1);
  Rational r(num, uniform(rng, 1, 9));
  r.canonicalize();
  return Scalar(r);
}

/// Nonzero, sometimes times a 12th root of unity.
Scalar random_value(std::mt19937_64& rng)
{
  Scalar v = random_rational(rng);
  if (uniform(rng, 0, 2) == 0)
    v *= Scalar::zeta(kConductor, uniform(rng, 1, kConductor - 1));
  return v;
}

ParamEnv random_env(int k, std::mt19937_64& rng)
{
  std::vector<Scalar> table;
  for (int s = 0; s < k * k; ++s)
    table.push_back(random_value(rng));
  return ParamEnv(k, ScalarHeader{kConductor, {}}, std::move(table));
}

Word random_word(int k, int len, std::mt19937_64& rng)
{
  Word w;
  for (int r = 0; r < len; ++r)
    w.push_back(uniform(rng, 1, k));
  return w;
}

Signature random_signature(int k, int min_n, int max_n, std::mt19937_64& rng)
{
  for (;;) {
    Word w = random_word(k, uniform(rng, min_n, max_n), rng);
    auto c = w.counts(k);
    if (w.size() > 0)
      return Signature(c);
  }
}

/// A few random terms of one signature.
Polynomial random_homogeneous(const Signature& q, std::mt19937_64& rng)
{
  const Basis basis(q);
  Polynomial p;
  const int terms = uniform(rng, 1, 4);
  for (int t = 0; t < terms; ++t)
    p.add_term(basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(basis.size()) - 1))],
               random_value(rng));
  return p;
}

/// A few random terms of mixed lengths, the unit word included.
Polynomial random_polynomial(int k, int max_len, std::mt19937_64& rng)
{
  Polynomial p;
  const int terms = uniform(rng, 1, 4);
  for (int t = 0; t < terms; ++t)
    p.add_term(random_word(k, uniform(rng, 0, max_len), rng), random_value(rng));
  return p;
}

Polynomial recursive_derive(Letter i, const Word& w, const ParamEnv& env)
{
  if (w.empty())
    return {};
  const Letter j = w.front();
  const Word rest = w.suffix_from(1);
  Polynomial out = Polynomial::letter(j) * recursive_derive(i, rest, env);
  out = out.scaled(env.q(i, j));
  if (i == j)
    out += Polynomial::monomial(rest, Scalar(1));
  return out;
}

class Tally {
public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void record(bool ok, std::size_t size, const std::string& description)
  {
    ++result_.trials;
    if (ok)
      return;
    ++result_.failures;
    if (result_.counterexample.empty() || size < best_) {
      best_ = size;
      result_.counterexample = description;
    }
  }

  SuiteResult result() const { return result_; }

private:
  SuiteResult result_;
  std::size_t best_ = 0;
};

/// A random signature of length >= 2 together with one of its orbits, on
/// parameters that make the orbit singular.
struct SingularCase {
  Signature q;
  Orbit orbit;
  ParamEnv env;
};

SingularCase random_singular_case(int max_n, std::mt19937_64& rng)
{
  for (;;) {
    const int k = uniform(rng, 1, 3);
    const Signature q = random_signature(k, 2, std::max(2, max_n), rng);
    const auto orbits = decompose(q);
    const Orbit& orbit = orbits[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(orbits.size()) - 1))];
    const ExponentVector e = orbit_exponents(orbit, k);
    if (exponent_gcd(e) == 0)
      continue;
    StratumOptions so;
    so.max_indeterminates = 0;
    for (int s = 0; s < 4; ++s)
      so.specialization.push_back(random_rational(rng));
    const long branch = uniform(rng, 0, static_cast<int>(exponent_gcd(e)) - 1);
    return {q, orbit, monomial_stratum(q, k, e, 1, 0, branch, so)};
  }
}

std::string describe_env(const ParamEnv& env)
{
  std::ostringstream out;
  for (Letter a = 1; a <= env.k(); ++a)
    for (Letter b = 1; b <= env.k(); ++b)
      out << (a == 1 && b == 1 ? "" : ", ") << "q" << a << b << "=" << env.to_string(a, b);
  return out.str();
}

} // namespace

SuiteResult check_derivation_recursion(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x101);
  Tally tally("derivation closed form vs recursion");
  for (int t = 0; t < opts.trials; ++t) {
    const int k = uniform(rng, 1, 3);
    const ParamEnv env = random_env(k, rng);
    const Polynomial p = random_polynomial(k, opts.max_n, rng);
    const Letter i = uniform(rng, 1, k);
    Polynomial expected;
    for (const auto& [w, c] : p.terms())
      expected += recursive_derive(i, w, env).scaled(c);
    const bool ok = derive(i, p, env) == expected;
    tally.record(ok, p.size(), "d_" + std::to_string(i) + "(" + p.to_string() + ") with " + describe_env(env));
  }
  return tally.result();
}

SuiteResult check_leibniz(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x202);
  Tally tally("graded Leibniz rule");
  for (int t = 0; t < opts.trials; ++t) {
    const int k = uniform(rng, 1, 3);
    const ParamEnv env = random_env(k, rng);
    const Signature q = random_signature(k, 1, std::max(1, opts.max_n - 1), rng);
    const Polynomial u = random_homogeneous(q, rng);
    const Polynomial v = random_polynomial(k, std::max(1, opts.max_n - q.n()), rng);
    const Letter i = uniform(rng, 1, k);
    const Scalar a = grading_factor(q.sorted_word(), i, env);
    const Polynomial lhs = derive(i, u * v, env);
    const Polynomial rhs = derive(i, u, env) * v + (u * derive(i, v, env)).scaled(a);
    tally.record(lhs == rhs, u.size() + v.size(),
                 "i=" + std::to_string(i) + ", u=" + u.to_string() + ", v=" + v.to_string() + " with " +
                     describe_env(env));
  }
  return tally.result();
}

SuiteResult check_bracket_identity(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x303);
  Tally tally("bracket identity d_j [u, e_i] = [d_j u, e_i]");
  auto bracket = [&](const Polynomial& u, const Polynomial& v, const Scalar& a) {
    return opts.corrupt_bracket ? v * u - (u * v).scaled(a) : q_commutator(u, v, a);
  };
  for (int t = 0; t < opts.trials; ++t) {
    const int k = uniform(rng, 1, 3);
    const ParamEnv env = random_env(k, rng);
    const Signature q = random_signature(k, 1, std::max(1, opts.max_n - 1), rng);
    const Polynomial u = random_homogeneous(q, rng);
    const Letter i = uniform(rng, 1, k);
    // Half of the cases take i = j.
    const Letter j = uniform(rng, 0, 1) ? i : uniform(rng, 1, k);
    const Scalar a = grading_factor(q.sorted_word(), i, env);
    const Polynomial ei = Polynomial::letter(i);
    const Polynomial lhs = derive(j, bracket(u, ei, a), env);
    const Polynomial rhs = bracket(derive(j, u, env), ei, a * env.q(j, i));
    tally.record(lhs == rhs, u.size() * 10 + static_cast<std::size_t>(q.n()),
                 "i=" + std::to_string(i) + ", j=" + std::to_string(j) + ", u=" + u.to_string() + " with " +
                     describe_env(env));
  }
  return tally.result();
}

SuiteResult check_annihilation(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x404);
  Tally tally("iterated commutators killed by d_j, j != i_1");
  for (int t = 0; t < opts.trials; ++t) {
    const int k = uniform(rng, 2, 3);
    const ParamEnv env = random_env(k, rng);
    const Word w = random_word(k, uniform(rng, 1, opts.max_n), rng);
    Letter j = uniform(rng, 1, k - 1);
    if (j >= w.front())
      ++j;
    const Polynomial x = iterated_X(w, env).expansion;
    tally.record(derive(j, x, env).is_zero(), w.size(),
                 "d_" + std::to_string(j) + " X^" + w.to_string() + " with " + describe_env(env));
  }
  return tally.result();
}

SuiteResult check_orbit_relation(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x505);
  Tally tally("relation on a singular orbit expands to zero");
  for (int t = 0; t < opts.trials; ++t) {
    const SingularCase c = random_singular_case(opts.max_n, rng);
    const FactorFn a = a_factors(c.env);
    const std::string where = "orbit of " + c.orbit.representative.to_string() + " with " + describe_env(c.env);
    if (!cocycle_product(c.orbit, a).is_one()) {
      tally.record(false, c.orbit.period(), "stratum not singular: " + where);
      continue;
    }
    const auto coeffs = orbit_relation(c.orbit, a);
    tally.record(commutator_combination(c.orbit, coeffs, a).is_zero(), c.orbit.period(), where);
  }
  return tally.result();
}

SuiteResult check_dual_cocycle(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x606);
  Tally tally("dual cocycle test vs rank membership");
  for (int t = 0; t < opts.trials; ++t) {
    const SingularCase c = random_singular_case(opts.max_n, rng);
    const FactorFn a = a_factors(c.env);
    const std::size_t l = c.orbit.period();
    // Simple commutators of other orbits have disjoint support, so membership
    // in the span of all of them is decided on the orbit's own coordinates.
    Matrix<Scalar> span;
    for (std::size_t m = 0; m < l; ++m) {
      std::vector<Scalar> unit(l);
      unit[m] = Scalar(1);
      const Polynomial comm = commutator_combination(c.orbit, unit, a);
      std::vector<Scalar> row(l);
      for (std::size_t r = 0; r < l; ++r)
        row[r] = comm.coefficient(c.orbit.members[r]);
      span.push_back(std::move(row));
    }
    std::vector<Scalar> coeffs(l);
    if (uniform(rng, 0, 1)) {
      // A member by construction: a random combination of the commutators.
      for (std::size_t m = 0; m < l; ++m) {
        const Scalar x = random_rational(rng);
        for (std::size_t r = 0; r < l; ++r)
          coeffs[r] += x * span[m][r];
      }
    } else {
      for (auto& x : coeffs)
        x = uniform(rng, 0, 3) ? random_value(rng) : Scalar();
    }
    Matrix<Scalar> extended = span;
    extended.push_back(coeffs);
    const bool by_rank = rank_of(extended, l) == rank_of(span, l);
    const bool by_dual = dual_cocycle_test(c.orbit, coeffs, a);
    tally.record(by_rank == by_dual, l,
                 "orbit of " + c.orbit.representative.to_string() + ", u=" +
                     orbital_polynomial(c.orbit, coeffs).to_string() + " with " + describe_env(c.env));
  }
  return tally.result();
}

SuiteResult check_bridge(const PropertyOptions& opts)
{
  std::mt19937_64 rng(opts.seed ^ 0x707);
  Tally tally("b_j over Q_j vs a over Q");
  for (int t = 0; t < opts.trials; ++t) {
    const int k = uniform(rng, 1, 3);
    const ParamEnv env = uniform(rng, 0, 1) ? ParamEnv::generic(k) : random_env(k, rng);
    const Signature q = random_signature(k, 2, std::max(2, opts.max_n), rng);
    const Word w = Basis(q)[0];
    Scalar pairs(1);
    for (std::size_t r = 0; r < w.size(); ++r)
      for (std::size_t s = 0; s < w.size(); ++s)
        if (r != s)
          pairs *= env.q(w[r], w[s]);
    const FactorFn a = a_factors(env);
    const auto letters = q.letters();
    const Letter j = letters[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(letters.size()) - 1))];
    const Basis child(q.child(j));
    const Word i = child[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(child.size()) - 1))];
    const FactorFn b = b_factors(j, env);
    // Products over the whole cyclic groups, repetitions included.
    Scalar over_b(1), over_a(1);
    Word s = i;
    for (std::size_t r = 0; r < i.size(); ++r, s = s.rotated_right())
      over_b *= b(s);
    Word ji = Word({j}) + i;
    s = ji;
    for (std::size_t r = 0; r < ji.size(); ++r, s = s.rotated_right())
      over_a *= a(s);
    // Distinct members only, raised to the number of repetitions.
    bool roots_ok = true;
    for (const auto& orbit : decompose(q.child(j)))
      if (std::find(orbit.members.begin(), orbit.members.end(), i) != orbit.members.end())
        roots_ok = roots_ok && cocycle_product(orbit, b).pow(static_cast<long>(i.size() / orbit.period())) == over_b;
    for (const auto& orbit : decompose(q))
      if (std::find(orbit.members.begin(), orbit.members.end(), ji) != orbit.members.end())
        roots_ok = roots_ok && cocycle_product(orbit, a).pow(static_cast<long>(ji.size() / orbit.period())) == over_a;
    const bool ok = over_b == pairs && over_a == pairs && roots_ok;
    tally.record(ok, ji.size(), "j=" + std::to_string(j) + ", i=" + i.to_string() + " with " + describe_env(env));
  }
  return tally.result();
}

std::vector<SuiteResult> run_all_properties(const PropertyOptions& opts)
{
  return {check_derivation_recursion(opts), check_leibniz(opts),      check_bracket_identity(opts),
          check_annihilation(opts),         check_orbit_relation(opts), check_dual_cocycle(opts),
          check_bridge(opts)};
}

} // namespace qconst
