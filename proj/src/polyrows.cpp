#include "qconst/polyrows.hpp"

#include <algorithm>

namespace qconst {

namespace {

using PolyRow = std::vector<MPoly>;

MPoly lcm(const MPoly& a, const MPoly& b)
{
  if (a.is_one())
    return b.monic();
  const MPoly g = MPoly::gcd(a, b);
  return (a * MPoly::divide_exact(b, g)).monic();
}

// Scales the row so that every rational coefficient is an integer and the
// integers have no common factor, with a positive leading coefficient.
void clear_rational_content(PolyRow& row)
{
  mpz_class den = 1, num = 0;
  const Rational* lead = nullptr;
  for (const auto& x : row)
    for (const auto& t : x.terms())
      for (const auto& c : t.coeff.coeffs()) {
        if (c == 0)
          continue;
        if (!lead)
          lead = &c;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
      }
  if (!lead)
    return;
  Rational f(den, num);
  f.canonicalize();
  if (*lead < 0)
    f = -f;
  if (f == 1)
    return;
  const Cyclotomic scale(f);
  for (auto& x : row)
    if (!x.is_zero())
      x = x.scaled(scale);
}

void make_primitive(PolyRow& row)
{
  // Smallest entries first: the running gcd shrinks fastest that way.
  std::vector<const MPoly*> order;
  for (const auto& x : row)
    if (!x.is_zero())
      order.push_back(&x);
  std::sort(order.begin(), order.end(), [](const MPoly* a, const MPoly* b) { return a->size() < b->size(); });
  MPoly g;
  for (const MPoly* x : order) {
    g = g.is_zero() ? x->monic() : MPoly::gcd(g, *x);
    if (g.is_constant())
      break;
  }
  if (g.is_zero())
    return;
  if (!g.is_constant())
    for (auto& x : row)
      if (!x.is_zero())
        x = MPoly::divide_exact(x, g);
  clear_rational_content(row);
}

std::size_t row_weight(const PolyRow& row)
{
  std::size_t w = 0;
  for (const auto& x : row)
    w += x.weight();
  return w;
}

} // namespace

PolyNullspace polynomial_nullspace(const Matrix<Scalar>& m, std::size_t cols)
{
  std::vector<PolyRow> rows;
  for (const auto& srow : m) {
    MPoly l(1);
    for (const auto& x : srow)
      if (!x.is_zero() && !x.denominator().is_one())
        l = lcm(l, x.denominator());
    PolyRow row(cols);
    bool nonzero = false;
    for (std::size_t j = 0; j < cols; ++j) {
      if (srow[j].is_zero())
        continue;
      nonzero = true;
      row[j] = l.is_one() ? srow[j].numerator()
                          : srow[j].numerator() * MPoly::divide_exact(l, srow[j].denominator());
    }
    if (!nonzero)
      continue;
    make_primitive(row);
    rows.push_back(std::move(row));
  }

  std::vector<PolyRow> echelon;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && !rows.empty(); ++c) {
    std::size_t best = rows.size();
    std::size_t best_w = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r][c].is_zero())
        continue;
      const std::size_t w = rows[r][c].weight() * 4 + row_weight(rows[r]);
      if (best == rows.size() || w < best_w) {
        best = r;
        best_w = w;
      }
    }
    if (best == rows.size())
      continue;
    PolyRow piv = std::move(rows[best]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(best));
    const MPoly& lp = piv[c];
    for (auto& row : rows) {
      if (row[c].is_zero())
        continue;
      const MPoly g = MPoly::gcd(lp, row[c]);
      const MPoly fp = MPoly::divide_exact(lp, g);
      const MPoly fr = MPoly::divide_exact(row[c], g);
      for (std::size_t j = c; j < cols; ++j) {
        if (row[j].is_zero() && piv[j].is_zero())
          continue;
        MPoly v = row[j].is_zero() ? MPoly() : row[j] * fp;
        if (!piv[j].is_zero())
          v -= piv[j] * fr;
        row[j] = std::move(v);
      }
      make_primitive(row);
    }
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const PolyRow& r) {
                                return std::all_of(r.begin(), r.end(), [](const MPoly& x) { return x.is_zero(); });
                              }),
               rows.end());
    echelon.push_back(std::move(piv));
    pivots.push_back(c);
  }

  PolyNullspace out;
  out.rank = pivots.size();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots)
    is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<Scalar> x(cols);
    x[f] = Scalar(1);
    for (std::size_t i = echelon.size(); i-- > 0;) {
      const std::size_t p = pivots[i];
      Scalar s;
      for (std::size_t j = p + 1; j < cols; ++j)
        if (!echelon[i][j].is_zero() && !x[j].is_zero())
          s += Scalar(echelon[i][j]) * x[j];
      if (!s.is_zero())
        x[p] = -s / Scalar(echelon[i][p]);
    }
    out.vectors.push_back(std::move(x));
  }
  return out;
}

} // namespace qconst
