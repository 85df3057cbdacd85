#include "qconst/multimodular.hpp"

#include "qconst/modfield.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace qconst {

namespace {

struct IntRow {
  std::vector<std::size_t> cols;
  std::vector<mpz_class> vals;
};

/// Rows scaled by the lcm of their denominators.
std::optional<std::vector<IntRow>> integer_rows(const Matrix<Scalar>& m, std::size_t cols)
{
  std::vector<IntRow> out;
  for (const auto& row : m) {
    mpz_class l = 1;
    std::vector<std::pair<std::size_t, mpq_class>> entries;
    for (std::size_t j = 0; j < cols; ++j) {
      if (row[j].is_zero())
        continue;
      if (!row[j].is_constant())
        return std::nullopt;
      const Cyclotomic c = row[j].constant_value();
      if (!c.is_rational())
        return std::nullopt;
      entries.emplace_back(j, c.rational_part());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), entries.back().second.get_den_mpz_t());
    }
    IntRow r;
    for (auto& [j, q] : entries) {
      r.cols.push_back(j);
      r.vals.push_back(q.get_num() * (l / q.get_den()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

/// Next prime below p (p itself excluded).
std::uint64_t prime_below(std::uint64_t p)
{
  mpz_class z(static_cast<unsigned long>(p - 1));
  while (mpz_probab_prime_p(z.get_mpz_t(), 30) == 0)
    --z;
  return z.get_ui();
}

struct ModRref {
  std::vector<std::size_t> pivots;
  /// rows[i][f]: entry of pivot row i in the f-th free column.
  std::vector<std::vector<std::uint64_t>> free_part;
};

ModRref mod_rref(const std::vector<IntRow>& rows, std::size_t cols, const ModField& f)
{
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(cols, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t t = 0; t < rows[i].cols.size(); ++t)
      a[i][rows[i].cols[t]] = mpz_fdiv_ui(rows[i].vals[t].get_mpz_t(), f.p);
  ModRref out;
  std::size_t pr = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < cols && pr < a.size(); ++c) {
    std::size_t i = pr;
    while (i < a.size() && a[i][c] == 0)
      ++i;
    if (i == a.size())
      continue;
    std::swap(a[i], a[pr]);
    const std::uint64_t inv = f.inv(a[pr][c]);
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (a[pr][j] != 0) {
        a[pr][j] = f.mul(a[pr][j], inv);
        support.push_back(j);
      }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == pr || a[r][c] == 0)
        continue;
      const std::uint64_t k = a[r][c];
      for (std::size_t j : support)
        a[r][j] = f.sub(a[r][j], f.mul(k, a[pr][j]));
    }
    out.pivots.push_back(c);
    ++pr;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : out.pivots)
    is_pivot[c] = true;
  for (std::size_t i = 0; i < out.pivots.size(); ++i) {
    std::vector<std::uint64_t> fp;
    for (std::size_t j = 0; j < cols; ++j)
      if (!is_pivot[j])
        fp.push_back(a[i][j]);
    out.free_part.push_back(std::move(fp));
  }
  return out;
}

/// n/d with |n|, d <= sqrt(m/2) and n = d x mod m.
std::optional<mpq_class> reconstruct(const mpz_class& x, const mpz_class& m, const mpz_class& bound)
{
  mpz_class r0 = m, r1 = x, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (abs(t1) > bound || t1 == 0)
    return std::nullopt;
  mpq_class v(r1, t1);
  v.canonicalize();
  return v;
}

bool annihilates(const std::vector<IntRow>& rows, const std::vector<mpq_class>& v)
{
  mpz_class l = 1;
  for (const auto& x : v)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    w[j] = v[j].get_num() * (l / v[j].get_den());
  for (const auto& row : rows) {
    mpz_class s = 0;
    for (std::size_t t = 0; t < row.cols.size(); ++t)
      s += row.vals[t] * w[row.cols[t]];
    if (s != 0)
      return false;
  }
  return true;
}

} // namespace

std::optional<std::vector<std::vector<Scalar>>> rational_nullspace(const Matrix<Scalar>& m, std::size_t cols,
                                                                   std::size_t max_primes)
{
  const auto rows = integer_rows(m, cols);
  if (!rows)
    return std::nullopt;

  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free_cols;
  std::vector<std::vector<mpz_class>> acc;
  mpz_class modulus = 1;
  bool started = false;
  std::uint64_t p = std::uint64_t{1} << 61;

  for (std::size_t used = 0; used < max_primes; ++used) {
    p = prime_below(p);
    const ModField f{p, 1, 1};
    ModRref e = mod_rref(*rows, cols, f);
    // Bad primes lose rank or push a pivot to the right; the reduced form over
    // Q has the largest rank and, among those, the lexicographically least pivots.
    const bool better = !started || e.pivots.size() > pivots.size() ||
                        (e.pivots.size() == pivots.size() && e.pivots < pivots);
    if (started && !better && e.pivots != pivots)
      continue;
    if (better) {
      pivots = e.pivots;
      free_cols.clear();
      std::vector<bool> is_pivot(cols, false);
      for (std::size_t c : pivots)
        is_pivot[c] = true;
      for (std::size_t j = 0; j < cols; ++j)
        if (!is_pivot[j])
          free_cols.push_back(j);
      acc.assign(pivots.size(), std::vector<mpz_class>(free_cols.size()));
      for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t k = 0; k < free_cols.size(); ++k)
          acc[i][k] = static_cast<unsigned long>(e.free_part[i][k]);
      modulus = static_cast<unsigned long>(p);
      started = true;
    } else {
      // Incremental CRT: x + M t with t = (a - x) / M mod p.
      const std::uint64_t minv = f.inv(mpz_fdiv_ui(modulus.get_mpz_t(), p));
      for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t k = 0; k < free_cols.size(); ++k) {
          const std::uint64_t x = mpz_fdiv_ui(acc[i][k].get_mpz_t(), p);
          const std::uint64_t t = f.mul(f.sub(e.free_part[i][k], x), minv);
          acc[i][k] += modulus * static_cast<unsigned long>(t);
        }
      modulus *= static_cast<unsigned long>(p);
    }
    if (free_cols.empty())
      return std::vector<std::vector<Scalar>>{};

    // Vector k: 1 at free_cols[k], minus the pivot-row entries at the pivots.
    const mpz_class bound = sqrt(mpz_class(modulus / 2));
    std::vector<std::vector<mpq_class>> vecs(free_cols.size(), std::vector<mpq_class>(cols));
    bool ok = true;
    for (std::size_t k = 0; k < free_cols.size() && ok; ++k) {
      vecs[k][free_cols[k]] = 1;
      for (std::size_t i = 0; i < pivots.size() && ok; ++i) {
        if (acc[i][k] == 0)
          continue;
        const auto v = reconstruct(acc[i][k], modulus, bound);
        if (!v)
          ok = false;
        else
          vecs[k][pivots[i]] = -*v;
      }
    }
    if (!ok)
      continue;
    if (!std::all_of(vecs.begin(), vecs.end(), [&](const auto& v) { return annihilates(*rows, v); }))
      continue;
    std::vector<std::vector<Scalar>> out;
    for (const auto& v : vecs) {
      std::vector<Scalar> s(cols);
      for (std::size_t j = 0; j < cols; ++j)
        if (v[j] != 0)
          s[j] = Scalar(Rational(v[j]));
      out.push_back(std::move(s));
    }
    return out;
  }
  return std::nullopt;
}

} // namespace qconst
