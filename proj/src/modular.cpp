#include "qconst/modular.hpp"

#include <stdexcept>

namespace qconst {

ModPoint random_point(int conductor, int num_indeterminates, std::mt19937_64& rng)
{
  ModPoint pt{random_field(conductor, rng), {}};
  std::uniform_int_distribution<std::uint64_t> elem(1, pt.field.p - 1);
  for (int i = 0; i < num_indeterminates; ++i)
    pt.values.push_back(elem(rng));
  return pt;
}

std::optional<std::uint64_t> reduce(const MPoly& poly, const ModPoint& pt)
{
  const ModField& f = pt.field;
  std::uint64_t acc = 0;
  for (const auto& t : poly.terms()) {
    auto c = reduce(t.coeff, f);
    if (!c)
      return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const int var = t.mono.var_at(i);
      if (var >= static_cast<int>(pt.values.size()))
        throw std::invalid_argument("evaluation point misses an indeterminate");
      v = f.mul(v, f.pow(pt.values[var], static_cast<std::uint64_t>(t.mono.exp_at(i))));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

std::optional<std::uint64_t> reduce(const Scalar& s, const ModPoint& pt)
{
  auto den = reduce(s.denominator(), pt);
  if (!den || *den == 0)
    return std::nullopt;
  auto num = reduce(s.numerator(), pt);
  if (!num)
    return std::nullopt;
  return pt.field.mul(*num, pt.field.inv(*den));
}

std::optional<ModMatrix> reduce(const Matrix<Scalar>& m, std::size_t cols, const ModPoint& pt)
{
  ModMatrix out(m.size(), std::vector<std::uint64_t>(cols, 0));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (m[r][c].is_zero())
        continue;
      auto v = reduce(m[r][c], pt);
      if (!v)
        return std::nullopt;
      out[r][c] = *v;
    }
  return out;
}

ModEchelon mod_echelon(const ModMatrix& m, std::size_t cols, const ModField& f)
{
  ModEchelon e;
  // Kept rows are normalized with a leading 1 at their pivot column.
  std::vector<std::vector<std::uint64_t>> kept;
  for (std::size_t r = 0; r < m.size() && e.rank < cols; ++r) {
    std::vector<std::uint64_t> v = m[r];
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const std::uint64_t c = v[e.pivot_cols[k]];
      if (c == 0)
        continue;
      const auto& row = kept[k];
      for (std::size_t j = e.pivot_cols[k]; j < cols; ++j)
        if (row[j])
          v[j] = f.sub(v[j], f.mul(c, row[j]));
    }
    std::size_t pc = 0;
    while (pc < cols && v[pc] == 0)
      ++pc;
    if (pc == cols)
      continue;
    const std::uint64_t inv = f.inv(v[pc]);
    for (std::size_t j = pc; j < cols; ++j)
      v[j] = f.mul(v[j], inv);
    kept.push_back(std::move(v));
    e.pivot_cols.push_back(pc);
    e.independent_rows.push_back(r);
    ++e.rank;
  }
  return e;
}

} // namespace qconst
