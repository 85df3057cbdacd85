#include "qconst/constants.hpp"

#include "qconst/modular.hpp"
#include "qconst/multimodular.hpp"
#include "qconst/polyrows.hpp"
#include "qconst/qcalc.hpp"

#include <algorithm>
#include <map>

namespace qconst {

DerivationMatrix derivation_matrix(const Signature& q, const ParamEnv& env)
{
  if (q.k() > env.k())
    throw std::invalid_argument("signature uses more letters than the parameter table");
  DerivationMatrix dm{q, Basis(q), {}, {}, {}, {}};
  std::size_t offset = 0;
  for (Letter j : q.letters()) {
    dm.blocks.push_back(j);
    dm.block_offsets.push_back(offset);
    dm.block_bases.emplace_back(q.child(j));
    offset += dm.block_bases.back().size();
  }
  dm.entries.assign(offset, std::vector<Scalar>(dm.columns.size()));
  for (std::size_t c = 0; c < dm.columns.size(); ++c) {
    const Word& w = dm.columns[c];
    for (std::size_t b = 0; b < dm.blocks.size(); ++b) {
      const Letter j = dm.blocks[b];
      Scalar factor(1);
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        if (w[pos] == j) {
          const auto row = dm.block_offsets[b] + static_cast<std::size_t>(dm.block_bases[b].index_of(w.without(pos)));
          dm.entries[row][c] += factor;
        }
        factor *= env.q(j, w[pos]);
      }
    }
  }
  return dm;
}

namespace {

ModPoint admissible_point(const std::vector<const Matrix<Scalar>*>& ms, std::size_t cols, const ParamEnv& env,
                          std::mt19937_64& rng, std::vector<ModMatrix>& images)
{
  for (int attempt = 0; attempt < 64; ++attempt) {
    ModPoint pt = random_point(env.conductor(), env.num_indeterminates(), rng);
    images.clear();
    bool ok = true;
    for (const auto* m : ms) {
      auto img = reduce(*m, cols, pt);
      if (!img) {
        ok = false;
        break;
      }
      images.push_back(std::move(*img));
    }
    if (ok)
      return pt;
  }
  throw CrossCheckError("no evaluation point avoids the denominators");
}

bool all_constant(const Matrix<Scalar>& m)
{
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_constant())
        return false;
  return true;
}

/// Row reduction done in the coefficient field when nothing depends on an indeterminate.
Echelon<Scalar> reduce_rows(Matrix<Scalar> m, std::size_t cols)
{
  if (!all_constant(m))
    return row_reduce(std::move(m), cols);
  Matrix<Cyclotomic> c(m.size(), std::vector<Cyclotomic>(cols));
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t j = 0; j < cols; ++j)
      if (!m[r][j].is_zero())
        c[r][j] = m[r][j].constant_value();
  Echelon<Cyclotomic> ec = row_reduce(std::move(c), cols);
  Echelon<Scalar> e;
  e.cols = cols;
  e.pivots = ec.pivots;
  for (const auto& row : ec.rows) {
    std::vector<Scalar> s(cols);
    for (std::size_t j = 0; j < cols; ++j)
      if (!row[j].is_zero())
        s[j] = Scalar(row[j]);
    e.rows.push_back(std::move(s));
  }
  return e;
}

Scalar dot(const std::vector<Scalar>& row, const std::vector<Scalar>& v)
{
  Scalar s;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (!row[j].is_zero() && !v[j].is_zero())
      s += row[j] * v[j];
  return s;
}

} // namespace

ExactNullspace exact_nullspace(const Matrix<Scalar>& m, std::size_t cols, const ParamEnv& env, std::mt19937_64& rng,
                               int samples)
{
  ExactNullspace out;
  if (cols == 0)
    return out;
  samples = std::max(samples, 1);
  std::vector<ModEchelon> echelons;
  for (int s = 0; s < samples; ++s) {
    std::vector<ModMatrix> images;
    const ModPoint pt = admissible_point({&m}, cols, env, rng, images);
    echelons.push_back(mod_echelon(images[0], cols, pt.field));
    out.sample_ranks.push_back(echelons.back().rank);
  }
  const std::size_t r = echelons[0].rank;
  if (r < cols) {
    Matrix<Scalar> sub;
    for (std::size_t i : echelons[0].independent_rows)
      sub.push_back(m[i]);
    std::size_t symbolic_rank = 0;
    if (auto rat = rational_nullspace(sub, cols)) {
      symbolic_rank = cols - rat->size();
      out.vectors = std::move(*rat);
    } else if (all_constant(sub)) {
      const Echelon<Scalar> e = reduce_rows(std::move(sub), cols);
      symbolic_rank = e.rank();
      out.vectors = nullspace_from(e);
    } else {
      PolyNullspace pn = polynomial_nullspace(sub, cols);
      symbolic_rank = pn.rank;
      out.vectors = std::move(pn.vectors);
    }
    if (symbolic_rank != r)
      throw CrossCheckError("symbolic rank " + std::to_string(symbolic_rank) + " differs from sampled rank " +
                            std::to_string(r));
    for (const auto& v : out.vectors)
      for (const auto& row : m)
        if (!dot(row, v).is_zero())
          throw CrossCheckError("nullspace vector fails an unused row; sampled rank was too small");
  }
  out.rank = r;
  for (std::size_t sr : out.sample_ranks)
    if (sr != r)
      throw CrossCheckError("evaluation ranks disagree: " + std::to_string(sr) + " vs " + std::to_string(r));
  return out;
}

std::size_t sampled_rank(const Matrix<Scalar>& m, std::size_t cols, const ParamEnv& env, std::mt19937_64& rng)
{
  std::vector<ModMatrix> images;
  const ModPoint pt = admissible_point({&m}, cols, env, rng, images);
  return mod_echelon(images[0], cols, pt.field).rank;
}

std::optional<std::vector<Scalar>> solve_in_span(const std::vector<std::vector<Scalar>>& vectors,
                                                 const std::vector<Scalar>& target, const ParamEnv& env,
                                                 std::mt19937_64& rng)
{
  const std::size_t len = target.size();
  const std::size_t n = vectors.size();
  auto is_solution = [&](const std::vector<Scalar>& x) {
    for (std::size_t r = 0; r < len; ++r) {
      Scalar s;
      for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero() && !vectors[i][r].is_zero())
          s += x[i] * vectors[i][r];
      if (s != target[r])
        return false;
    }
    return true;
  };
  if (n == 0) {
    for (const auto& t : target)
      if (!t.is_zero())
        return std::nullopt;
    return std::vector<Scalar>{};
  }
  Matrix<Scalar> target_row{target};
  std::vector<ModMatrix> images;
  const ModPoint pt = admissible_point({&vectors, &target_row}, len, env, rng, images);
  const ModEchelon by_vector = mod_echelon(images[0], len, pt.field);
  const auto& chosen = by_vector.independent_rows;
  ModMatrix coords(len, std::vector<std::uint64_t>(chosen.size()));
  for (std::size_t r = 0; r < len; ++r)
    for (std::size_t b = 0; b < chosen.size(); ++b)
      coords[r][b] = images[0][chosen[b]][r];
  const ModEchelon by_row = mod_echelon(coords, chosen.size(), pt.field);
  const std::size_t rk = chosen.size();
  Matrix<Scalar> sys(rk, std::vector<Scalar>(rk + 1));
  for (std::size_t a = 0; a < rk; ++a) {
    const std::size_t row = by_row.independent_rows[a];
    for (std::size_t b = 0; b < rk; ++b)
      sys[a][b] = vectors[chosen[b]][row];
    sys[a][rk] = target[row];
  }
  std::vector<Scalar> x(n);
  const Echelon<Scalar> e = reduce_rows(std::move(sys), rk + 1);
  bool consistent = true;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == rk) {
      consistent = false;
      break;
    }
    x[chosen[e.pivots[i]]] = e.rows[i][rk];
  }
  if (consistent && is_solution(x))
    return x;
  // The sample may have hidden a dependency; settle it with the full system.
  auto full = solve_combination(vectors, target);
  if (full && is_solution(*full))
    return full;
  return std::nullopt;
}

bool is_constant(const Polynomial& c, const ParamEnv& env)
{
  for (Letter j = 1; j <= env.k(); ++j)
    if (!derive(j, c, env).is_zero())
      return false;
  return true;
}

KernelResult kernel(const Signature& q, const ParamEnv& env, const SampleOptions& opts)
{
  std::mt19937_64 rng(opts.seed);
  const DerivationMatrix dm = derivation_matrix(q, env);
  KernelResult res;
  res.signature = q;
  res.rows = dm.rows();
  res.cols = dm.cols();
  const ExactNullspace ns = exact_nullspace(dm.entries, dm.cols(), env, rng, opts.samples);
  res.rank = ns.rank;
  res.sample_ranks = ns.sample_ranks;
  for (const auto& v : ns.vectors) {
    Polynomial c = Polynomial::from_coordinates(dm.columns, v);
    if (!c.is_zero())
      c = c.scaled(c.terms().begin()->second.inverse());
    if (!is_constant(c, env))
      throw CrossCheckError("kernel element " + c.to_string(env.names()) + " is not annihilated by every derivation");
    res.basis.push_back(std::move(c));
  }
  return res;
}

const char* to_string(SpanCheck s)
{
  switch (s) {
  case SpanCheck::Direct:
    return "direct";
  case SpanCheck::Implied:
    return "implied";
  case SpanCheck::Vacuous:
    return "vacuous";
  }
  return "?";
}

bool StipulationReport::passes() const
{
  return std::all_of(entries.begin(), entries.end(), [](const StipulationEntry& e) { return e.passes(); });
}

StipulationReport check_stipulation(const Signature& q, const ParamEnv& env, const SampleOptions& opts)
{
  StipulationReport rep;
  for (Letter j : q.letters()) {
    StipulationEntry e;
    e.j = j;
    e.child = q.child(j);
    const int m = e.child.n();
    if (m == 0) {
      rep.entries.push_back(std::move(e));
      continue;
    }
    const KernelResult kr = kernel(e.child, env, opts);
    e.child_constants = kr.dim();
    e.no_constants = kr.dim() == 0;
    if (!e.no_constants)
      e.witness = "constant in B_" + e.child.to_string() + ": " + kr.basis.front().to_string(env.names());
    if (m == 1) {
      e.span_mode = SpanCheck::Vacuous;
    } else if (e.child.is_single_letter()) {
      e.span_mode = SpanCheck::Direct;
      const Basis basis(e.child);
      std::vector<std::vector<Scalar>> coords;
      for (const auto& w : basis.words())
        coords.push_back(simple_commutator(w, env).coordinates(basis));
      const std::size_t r = rank_of_vectors(coords);
      e.spans = r == basis.size();
      if (!e.spans) {
        if (!e.witness.empty())
          e.witness += "; ";
        e.witness += "simple commutators of " + e.child.to_string() + " span " + std::to_string(r) + " of " +
                     std::to_string(basis.size()) + " dimensions";
      }
    } else {
      e.span_mode = SpanCheck::Implied;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

FormulaResult dimension_formula(const OrbitReport& orbits, const StipulationReport& stip)
{
  FormulaResult f;
  if (orbits.signature.n() < 2) {
    f.diagnostic = "formula needs n >= 2";
    return f;
  }
  if (!stip.passes()) {
    for (const auto& e : stip.entries)
      if (!e.passes()) {
        f.diagnostic = "formula not applicable: stipulation fails for j = " + std::to_string(e.j) + " (" + e.witness + ")";
        break;
      }
    return f;
  }
  long sum = 0;
  for (const auto& c : orbits.children)
    sum += c.chi;
  f.applicable = true;
  f.value = sum - orbits.chi;
  return f;
}

FormulaResult dimension_formula(const Signature& q, const ParamEnv& env, const SampleOptions& opts)
{
  return dimension_formula(chi_counts(q, env), check_stipulation(q, env, opts));
}

ViaXResult constants_via_X(const Signature& q, Letter j, const ParamEnv& env, const StipulationReport& stip,
                           const SampleOptions& opts)
{
  if (q.n() < 3)
    throw std::invalid_argument("components with n < 3 use the direct kernel");
  if (j < 1 || j > q.k() || q.multiplicity(j) == 0)
    throw std::invalid_argument("letter " + std::to_string(j) + " does not occur in " + q.to_string());
  if (!stip.passes())
    throw std::domain_error("stipulation fails for " + q.to_string());
  std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(j)));
  const Signature child = q.child(j);
  const Basis child_basis(child);
  const Basis basis(q);
  const Word head({j});

  ViaXResult res;
  res.j = j;
  const FactorFn b = b_factors(j, env);
  for (const auto& o : decompose(child)) {
    if (!cocycle_product(o, b).is_one())
      continue;
    ++res.singular_orbits;
    const std::vector<Scalar> coeffs = orbit_relation(o, b);
    Polynomial c;
    for (std::size_t a = 0; a < o.period(); ++a) {
      const Word& i = o.members[a];
      const Scalar denom = Scalar(1) - env.q(j, i.front()) * env.q(i.front(), j);
      if (denom.is_zero()) {
        res.recipe_annihilated = false;
        continue;
      }
      c += iterated_X(head + i, env).expansion.scaled(coeffs[a] / denom);
    }
    if (c.is_zero())
      continue;
    if (!derive(j, c, env).is_zero())
      res.recipe_annihilated = false;
    res.recipe.push_back(std::move(c));
  }

  // Direct solve: sum_i C(i) d_j X^{j i} = 0.
  std::vector<Polynomial> xs;
  Matrix<Scalar> m(child_basis.size(), std::vector<Scalar>(child_basis.size()));
  for (std::size_t c = 0; c < child_basis.size(); ++c) {
    xs.push_back(iterated_X(head + child_basis[c], env).expansion);
    const std::vector<Scalar> col = derive(j, xs.back(), env).coordinates(child_basis);
    for (std::size_t r = 0; r < col.size(); ++r)
      m[r][c] = col[r];
  }
  const ExactNullspace ns = exact_nullspace(m, child_basis.size(), env, rng, opts.samples);
  std::vector<Polynomial> candidates;
  for (const auto& v : ns.vectors) {
    Polynomial c;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero())
        c += xs[i].scaled(v[i]);
    if (!c.is_zero())
      candidates.push_back(std::move(c));
  }
  // Keep a maximal independent subset (relations among the X^{j i} give zero or repeated elements).
  if (!candidates.empty()) {
    Matrix<Scalar> coords;
    for (const auto& c : candidates)
      coords.push_back(c.coordinates(basis));
    const ExactNullspace dep = exact_nullspace(coords, basis.size(), env, rng, 1);
    std::vector<ModMatrix> images;
    const ModPoint pt = admissible_point({&coords}, basis.size(), env, rng, images);
    const ModEchelon ech = mod_echelon(images[0], basis.size(), pt.field);
    if (ech.rank != dep.rank)
      throw CrossCheckError("independent subset of the X-constants is unstable");
    for (std::size_t i : ech.independent_rows)
      res.constants.push_back(candidates[i]);
  }
  for (const auto& c : res.constants)
    if (!is_constant(c, env))
      throw CrossCheckError("element of the X-span fails a derivation: " + c.to_string(env.names()));
  return res;
}

std::vector<Letter> natural_map(const Signature& q)
{
  std::vector<Letter> phi;
  for (int i = 1; i <= q.k(); ++i)
    for (int r = 0; r < q.multiplicity(i); ++r)
      phi.push_back(i);
  return phi;
}

Polynomial project_down(const Polynomial& c, const std::vector<Letter>& phi)
{
  return c.relabeled(phi);
}

Polynomial lift_up(const Polynomial& c, const std::vector<Letter>& phi)
{
  std::map<Letter, std::vector<Letter>> fiber;
  for (std::size_t i = 0; i < phi.size(); ++i)
    fiber[phi[i]].push_back(static_cast<Letter>(i + 1));
  Polynomial out;
  for (const auto& [w, coeff] : c.terms()) {
    std::map<Letter, std::vector<std::size_t>> positions;
    for (std::size_t p = 0; p < w.size(); ++p)
      positions[w[p]].push_back(p);
    for (const auto& [letter, pos] : positions)
      if (fiber[letter].size() != pos.size())
        throw std::invalid_argument("letter counts of " + w.to_string() + " do not match the fibers of the map");
    if (positions.size() != fiber.size())
      throw std::invalid_argument("word " + w.to_string() + " misses a fiber of the map");
    // Every way of assigning the fiber of each letter bijectively to its positions.
    std::vector<std::pair<Letter, std::vector<Letter>>> perms;
    for (const auto& [letter, f] : fiber)
      perms.emplace_back(letter, f);
    std::vector<Letter> out_word(w.size());
    auto recurse = [&](auto&& self, std::size_t idx) -> void {
      if (idx == perms.size()) {
        out.add_term(Word(out_word), coeff);
        return;
      }
      auto& [letter, f] = perms[idx];
      std::sort(f.begin(), f.end());
      do {
        const auto& pos = positions[letter];
        for (std::size_t r = 0; r < pos.size(); ++r)
          out_word[pos[r]] = f[r];
        self(self, idx + 1);
      } while (std::next_permutation(f.begin(), f.end()));
    };
    recurse(recurse, 0);
  }
  if (out.is_zero())
    return out;
  const Scalar lead = out.terms().begin()->second;
  return out.scaled(lead.inverse());
}

MembershipReport verify_membership(const Polynomial& c, const Signature& q, const ParamEnv& env,
                                   const SampleOptions& opts)
{
  if (!c.is_zero()) {
    const auto counts = c.homogeneous_counts(q.k());
    if (!counts || *counts != q.multiplicities())
      throw std::invalid_argument("element is not in the component " + q.to_string());
  }
  if (!is_constant(c, env))
    throw std::invalid_argument("element is not a constant");
  std::mt19937_64 rng(opts.seed);
  const Basis basis(q);
  const std::vector<Scalar> target = c.coordinates(basis);

  auto certify = [&](Letter j, const std::vector<Word>& index, const std::vector<Polynomial>& span) {
    std::vector<std::vector<Scalar>> vecs;
    for (const auto& p : span)
      vecs.push_back(p.coordinates(basis));
    auto x = solve_in_span(vecs, target, env, rng);
    if (!x)
      throw CrossCheckError("constant " + c.to_string(env.names()) + " is outside the span of " +
                            (j == 0 ? std::string("the simple commutators") : "X^{" + std::to_string(j) + "...}"));
    Certificate cert;
    cert.j = j;
    for (std::size_t i = 0; i < x->size(); ++i)
      if (!(*x)[i].is_zero())
        cert.coordinates.emplace_back(index[i], (*x)[i]);
    return cert;
  };

  MembershipReport rep;
  {
    std::vector<Polynomial> span;
    for (const auto& w : basis.words())
      span.push_back(simple_commutator(w, env));
    rep.simple = certify(0, basis.words(), span);
  }
  for (Letter j : q.letters()) {
    const Basis child(q.child(j));
    std::vector<Word> index;
    std::vector<Polynomial> span;
    for (const auto& i : child.words()) {
      index.push_back(Word({j}) + i);
      span.push_back(iterated_X(index.back(), env).expansion);
    }
    rep.iterated.push_back(certify(j, index, span));
  }
  return rep;
}

} // namespace qconst
