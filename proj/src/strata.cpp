#include "qconst/strata.hpp"

#include "qconst/qcalc.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace qconst {

namespace {

std::size_t slot(Letter a, Letter b, int k)
{
  return static_cast<std::size_t>((a - 1) * k + (b - 1));
}

// a(w) = prod_{r < p} q_{w_p w_r}; add its exponents.
void add_commutation_exponents(const Word& w, int k, ExponentVector& e)
{
  const Letter last = w.back();
  for (std::size_t r = 0; r + 1 < w.size(); ++r)
    ++e[slot(last, w[r], k)];
}

const long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

std::vector<std::string> default_names(int m)
{
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i)
    names.push_back("t" + std::to_string(i));
  return names;
}

} // namespace

ExponentVector orbit_exponents(const Orbit& orbit, int k)
{
  ExponentVector e(static_cast<std::size_t>(k * k), 0);
  for (const auto& w : orbit.members)
    add_commutation_exponents(w, k, e);
  return e;
}

ExponentVector long_orbit_exponents(const Signature& q, int k)
{
  ExponentVector e(static_cast<std::size_t>(k * k), 0);
  for (Letter a = 1; a <= q.k(); ++a)
    for (Letter b = 1; b <= q.k(); ++b) {
      const long na = q.multiplicity(a), nb = q.multiplicity(b);
      e[slot(a, b, k)] = a == b ? na * (na - 1) : na * nb;
    }
  return e;
}

bool is_relevant(const Signature& q, Letter a, Letter b)
{
  if (a > q.k() || b > q.k())
    return false;
  const int na = q.multiplicity(a), nb = q.multiplicity(b);
  if (a == b)
    return na >= 2;
  return na >= 1 && nb >= 1;
}

long exponent_gcd(const ExponentVector& e)
{
  long g = 0;
  for (long x : e)
    g = std::gcd(g, std::labs(x));
  return g;
}

std::string exponent_string(const ExponentVector& e, int k)
{
  std::string s;
  for (Letter a = 1; a <= k; ++a)
    for (Letter b = 1; b <= k; ++b) {
      const long x = e[slot(a, b, k)];
      if (x == 0)
        continue;
      if (!s.empty())
        s += "*";
      s += "q" + std::to_string(a) + std::to_string(b);
      if (x != 1)
        s += "^" + (x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x));
    }
  return s.empty() ? "1" : s;
}

namespace {

Scalar specialized(const StratumOptions& opts, int index)
{
  if (opts.specialization.empty())
    return Scalar(kPrimes[index % 25]);
  return opts.specialization[static_cast<std::size_t>(index) % opts.specialization.size()];
}

} // namespace

ParamEnv free_stratum(const Signature& q, int k, const StratumOptions& opts)
{
  std::vector<Scalar> table(static_cast<std::size_t>(k * k), Scalar(opts.irrelevant_value));
  int used = 0, primes = 0;
  for (Letter a = 1; a <= k; ++a)
    for (Letter b = 1; b <= k; ++b) {
      if (!is_relevant(q, a, b))
        continue;
      if (used < opts.max_indeterminates)
        table[slot(a, b, k)] = Scalar::var(used++);
      else
        table[slot(a, b, k)] = specialized(opts, primes++);
    }
  return ParamEnv(k, ScalarHeader{1, default_names(used)}, std::move(table));
}

ParamEnv monomial_stratum(const Signature& q, int k, const ExponentVector& e, int order, long power, long branch,
                          const StratumOptions& opts)
{
  if (static_cast<int>(e.size()) != k * k)
    throw std::invalid_argument("exponent vector has the wrong length");
  if (order < 1)
    throw std::invalid_argument("root order must be positive");
  std::vector<std::size_t> rel;
  for (Letter a = 1; a <= k; ++a)
    for (Letter b = 1; b <= k; ++b) {
      const std::size_t s = slot(a, b, k);
      if (is_relevant(q, a, b))
        rel.push_back(s);
      else if (e[s] != 0)
        throw std::invalid_argument("condition involves q" + std::to_string(a) + std::to_string(b) +
                                    ", which is irrelevant to " + q.to_string());
    }
  const std::size_t m = rel.size();
  std::vector<long> row(m);
  for (std::size_t i = 0; i < m; ++i)
    row[i] = e[rel[i]];
  // Column operations on the identity: row * V ends up as (g, 0, ..., 0).
  std::vector<std::vector<long>> v(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    v[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, long f) {
    row[dst] -= f * row[src];
    for (std::size_t r = 0; r < m; ++r)
      v[r][dst] -= f * v[r][src];
  };
  for (;;) {
    std::size_t piv = m;
    for (std::size_t i = 0; i < m; ++i)
      if (row[i] != 0 && (piv == m || std::labs(row[i]) < std::labs(row[piv])))
        piv = i;
    if (piv == m)
      throw std::invalid_argument("condition is trivial (all exponents vanish)");
    bool done = true;
    for (std::size_t i = 0; i < m; ++i)
      if (i != piv && row[i] != 0) {
        col_axpy(i, piv, row[i] / row[piv]);
        done = false;
      }
    if (done) {
      if (piv != 0) {
        std::swap(row[0], row[piv]);
        for (std::size_t r = 0; r < m; ++r)
          std::swap(v[r][0], v[r][piv]);
      }
      if (row[0] < 0) {
        row[0] = -row[0];
        for (std::size_t r = 0; r < m; ++r)
          v[r][0] = -v[r][0];
      }
      break;
    }
  }
  const long g = row[0];
  const int conductor = static_cast<int>(order * g);
  // y_1 solves y_1^g = zeta_order^power.
  const long r = ((power + order * branch) % conductor + conductor) % conductor;
  std::vector<Scalar> y{Scalar::zeta(conductor, r)};
  int used = 0, primes = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (used < opts.max_indeterminates)
      y.push_back(Scalar::var(used++));
    else
      y.push_back(specialized(opts, primes++));
  }
  std::vector<Scalar> table(static_cast<std::size_t>(k * k), Scalar(opts.irrelevant_value));
  for (std::size_t i = 0; i < m; ++i) {
    Scalar x(1);
    for (std::size_t c = 0; c < m; ++c)
      if (v[i][c] != 0)
        x *= y[c].pow(v[i][c]);
    table[rel[i]] = x;
  }
  return ParamEnv(k, ScalarHeader{conductor, default_names(used)}, std::move(table));
}

} // namespace qconst
