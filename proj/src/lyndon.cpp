#include "qconst/lyndon.hpp"

#include "qconst/qcalc.hpp"

#include <random>

namespace qconst {

Word CompoundWord::word() const
{
  Word w;
  for (const auto& g : groups)
    w = w + g;
  return w;
}

std::string CompoundWord::to_string() const
{
  std::string out;
  for (const auto& g : groups)
    out += g.size() == 1 ? g.to_string() : "(" + g.to_string() + ")";
  return out;
}

bool CompoundWord::all_groups_start_with(Letter j) const
{
  for (const auto& g : groups)
    if (g.front() != j)
      return false;
  return true;
}

namespace {

int rank_in_order(Letter l, Letter first)
{
  return l == first ? 0 : l;
}

} // namespace

CompoundWord parenthesize(const Word& w)
{
  return parenthesize(w, 0);
}

CompoundWord parenthesize(const Word& w, Letter first)
{
  auto key = [&](std::size_t i) { return rank_in_order(w[i], first); };
  CompoundWord cw;
  std::size_t pos = 0;
  while (pos < w.size()) {
    std::size_t low = pos;
    while (low + 1 < w.size() && key(low + 1) < key(low))
      ++low;
    for (; pos < low; ++pos)
      cw.groups.push_back(Word({w[pos]}));
    std::size_t end = low + 1;
    while (end < w.size() && w[end] == w[low])
      ++end;
    while (end < w.size() && key(end) > key(low))
      ++end;
    Word g;
    for (std::size_t r = low; r < end; ++r)
      g.push_back(w[r]);
    cw.groups.push_back(g);
    pos = end;
  }
  return cw;
}

bool is_good_group(const Word& g, Letter first)
{
  if (g.empty())
    return false;
  std::size_t r = 1;
  while (r < g.size() && g[r] == g[0])
    ++r;
  for (; r < g.size(); ++r)
    if (rank_in_order(g[r], first) <= rank_in_order(g[0], first))
      return false;
  return true;
}

Polynomial word_to_commutator(const Word& g, const ParamEnv& env)
{
  return iterated_X(g, env).expansion;
}

Polynomial compound_value(const CompoundWord& cw, const ParamEnv& env)
{
  Polynomial out = Polynomial::unit();
  for (const auto& g : cw.groups)
    out = out * word_to_commutator(g, env);
  return out;
}

GoodBasis good_basis(const Signature& q, const ParamEnv& env, const SampleOptions& opts, bool require_full_rank)
{
  const Basis basis(q);
  GoodBasis gb{q, {}, {}, 0};
  Matrix<Scalar> coords;
  for (const auto& w : basis.words()) {
    gb.words.push_back(parenthesize(w));
    gb.elements.push_back(compound_value(gb.words.back(), env));
    coords.push_back(gb.elements.back().coordinates(basis));
  }
  std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int s = 0; s < std::max(1, opts.samples) && !gb.full_rank(); ++s)
    gb.rank = std::max(gb.rank, sampled_rank(coords, basis.size(), env, rng));
  if (require_full_rank && !gb.full_rank())
    throw CrossCheckError("good words of " + q.to_string() + " have rank " + std::to_string(gb.rank) + " < " +
                          std::to_string(basis.size()));
  return gb;
}

MSubspace m_subspace(const Signature& q, Letter j, const ParamEnv& env)
{
  if (j < 1 || j > q.k() || q.multiplicity(j) < 1)
    throw std::invalid_argument("letter " + std::to_string(j) + " does not occur in " + q.to_string());
  MSubspace m;
  m.j = j;
  m.expected_dim = q.child(j).component_size();
  const Basis basis(q);
  for (const auto& w : basis.words()) {
    if (w.front() != j)
      continue;
    CompoundWord cw = parenthesize(w, j);
    if (!cw.all_groups_start_with(j))
      continue;
    Polynomial p = compound_value(cw, env);
    for (Letter i = 1; i <= env.k(); ++i)
      if (i != j && !derive(i, p, env).is_zero())
        throw CrossCheckError("d_" + std::to_string(i) + " does not kill " + cw.to_string());
    m.words.push_back(std::move(cw));
    m.elements.push_back(std::move(p));
  }
  return m;
}

std::optional<std::vector<Scalar>> m_coordinates(const Polynomial& c, const MSubspace& m, const ParamEnv& env,
                                                 const SampleOptions& opts)
{
  const auto counts = c.homogeneous_counts(env.k());
  if (!counts)
    throw std::invalid_argument("element is not homogeneous");
  const Basis basis{Signature(*counts)};
  std::vector<std::vector<Scalar>> vectors;
  for (const auto& e : m.elements)
    vectors.push_back(e.coordinates(basis));
  std::mt19937_64 rng(opts.seed ^ static_cast<std::uint64_t>(m.j));
  return solve_in_span(vectors, c.coordinates(basis), env, rng);
}

} // namespace qconst
