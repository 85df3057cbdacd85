#include "qconst/constants.hpp"
#include "qconst/multimodular.hpp"
#include "qconst/qcalc.hpp"
#include "qconst/strata.hpp"

#include <gtest/gtest.h>

using namespace qconst;

namespace {

Polynomial mono(const std::string& w, const Scalar& c = Scalar(1))
{
  return Polynomial::monomial(Word::parse(w), c);
}

ParamEnv sigma_one(const Signature& q)
{
  return monomial_stratum(q, q.k(), long_orbit_exponents(q, q.k()), 1, 0);
}

ParamEnv one_letter(int order, long power)
{
  return monomial_stratum(Signature(std::vector<int>{2}), 1, {1}, order, power);
}

/// Serre-type example with a fixed diagonal entry: q11 q12 q21 = 1 on 112.
ParamEnv serre_112()
{
  return ParamEnv::from_expressions(2, ScalarHeader{1, {"t1", "t2"}},
                                    {{{1, 1}, "t1"}, {{1, 2}, "t2"}, {{2, 1}, "1/(t1*t2)"}, {{2, 2}, "5"}});
}

} // namespace

TEST(Kernel, TwoLetters)
{
  const Signature q = Signature::parse("12");
  EXPECT_EQ(kernel(q, free_stratum(q, 2)).dim(), 0u);
  const ParamEnv env = sigma_one(q);
  const KernelResult r = kernel(q, env);
  ASSERT_EQ(r.dim(), 1u);
  EXPECT_EQ(r.basis[0], mono("12") - mono("21", env.q(2, 1)));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.sample_ranks.size(), 3u);
  for (auto s : r.sample_ranks)
    EXPECT_EQ(s, r.rank);
}

TEST(Kernel, SquareOfALetter)
{
  const Signature q(std::vector<int>{2});
  const KernelResult r = kernel(q, one_letter(2, 1));
  ASSERT_EQ(r.dim(), 1u);
  EXPECT_EQ(r.basis[0], mono("11"));
  EXPECT_EQ(kernel(q, one_letter(1, 0)).dim(), 0u);
}

TEST(Kernel, EveryElementIsConstant)
{
  for (const char* s : {"123", "1123", "1234"}) {
    const Signature q = Signature::parse(s);
    const ParamEnv env = sigma_one(q);
    for (const auto& c : kernel(q, env).basis) {
      EXPECT_TRUE(is_constant(c, env)) << s;
      EXPECT_EQ(c.coefficient(c.terms().begin()->first), Scalar(1));
    }
  }
  EXPECT_FALSE(is_constant(mono("12"), ParamEnv::generic(2)));
}

TEST(Kernel, DeterministicUnderSeed)
{
  const Signature q = Signature::parse("1123");
  const ParamEnv env = sigma_one(q);
  SampleOptions a, b;
  b.seed = 99;
  const KernelResult x = kernel(q, env, a), y = kernel(q, env, a), z = kernel(q, env, b);
  EXPECT_EQ(x.basis, y.basis);
  EXPECT_EQ(x.sample_ranks, y.sample_ranks);
  // The kernel itself does not depend on the seed.
  EXPECT_EQ(x.basis, z.basis);
}

TEST(Kernel, GenericIsEmptyUpToFive)
{
  for (const char* s : {"1", "12", "11", "112", "123", "1122", "1123", "1234", "11122", "11223", "12345", "11111"}) {
    const Signature q = Signature::parse(s);
    EXPECT_EQ(kernel(q, free_stratum(q, q.k())).dim(), 0u) << s;
  }
}

TEST(Stipulation, Examples)
{
  const Signature q = Signature::parse("123");
  const StipulationReport generic = check_stipulation(q, free_stratum(q, 3));
  EXPECT_TRUE(generic.passes());
  ASSERT_EQ(generic.entries.size(), 3u);

  // q12 q21 = 1 gives the child 12 of letter 3 a constant.
  const StipulationReport broken = check_stipulation(q, monomial_stratum(q, 3, {0, 1, 0, 1, 0, 0, 0, 0, 0}, 1, 0));
  EXPECT_FALSE(broken.passes());
  EXPECT_TRUE(broken.entries[0].passes());
  EXPECT_TRUE(broken.entries[1].passes());
  EXPECT_FALSE(broken.entries[2].no_constants);
  EXPECT_EQ(broken.entries[2].child_constants, 1u);

  // q11 = 1 on 1^n: the simple commutators of 1^{n-1} vanish.
  for (int n = 3; n <= 5; ++n) {
    const Signature p(std::vector<int>{n});
    const StipulationReport r = check_stipulation(p, one_letter(1, 0));
    ASSERT_EQ(r.entries.size(), 1u);
    EXPECT_EQ(r.entries[0].span_mode, SpanCheck::Direct);
    EXPECT_FALSE(r.entries[0].spans) << n;
    EXPECT_FALSE(r.entries[0].witness.empty());
    EXPECT_FALSE(r.passes());
  }
  EXPECT_EQ(check_stipulation(Signature::parse("12"), free_stratum(Signature::parse("12"), 2)).entries[0].span_mode,
            SpanCheck::Vacuous);
  EXPECT_STREQ(to_string(SpanCheck::Implied), "implied");
}

TEST(Formula, Examples)
{
  const Signature q123 = Signature::parse("123");
  const FormulaResult f = dimension_formula(q123, sigma_one(q123));
  ASSERT_TRUE(f.applicable);
  EXPECT_EQ(f.value, 1);
  const Signature q1123 = Signature::parse("1123");
  EXPECT_EQ(dimension_formula(q1123, sigma_one(q1123)).value, 1);
  const FormulaResult na = dimension_formula(Signature::parse("111"), one_letter(1, 0));
  EXPECT_FALSE(na.applicable);
  EXPECT_FALSE(na.diagnostic.empty());
  EXPECT_FALSE(dimension_formula(Signature::parse("1"), ParamEnv::generic(1)).applicable);
}

TEST(Formula, MatchesKernelOnOrbitStrata)
{
  int compared = 0;
  for (const char* s : {"112", "123", "1112", "1122", "1123", "1234", "11112", "11122", "11123", "11223", "12345"}) {
    const Signature q = Signature::parse(s);
    for (const auto& o : decompose(q)) {
      StratumOptions opts;
      opts.max_indeterminates = 1;
      ParamEnv env = free_stratum(q, q.k());
      try {
        env = monomial_stratum(q, q.k(), orbit_exponents(o, q.k()), 1, 0, 0, opts);
      } catch (const std::invalid_argument&) {
        continue;
      }
      const FormulaResult f = dimension_formula(q, env);
      if (!f.applicable)
        continue;
      EXPECT_EQ(static_cast<long>(kernel(q, env).dim()), f.value) << s << " " << o.representative.to_string();
      ++compared;
    }
  }
  EXPECT_GT(compared, 20);
}

TEST(ViaX, Serre)
{
  const Signature q = Signature::parse("112");
  const ParamEnv env = serre_112();
  const KernelResult k = kernel(q, env);
  ASSERT_EQ(k.dim(), 1u);
  const StipulationReport stip = check_stipulation(q, env);
  ASSERT_TRUE(stip.passes());
  EXPECT_EQ(dimension_formula(q, env).value, 1);
  for (Letter j = 1; j <= 2; ++j) {
    const ViaXResult v = constants_via_X(q, j, env, stip);
    EXPECT_EQ(v.rank(), k.dim()) << j;
    EXPECT_TRUE(v.recipe_annihilated);
    for (const auto& c : v.constants)
      EXPECT_TRUE(is_constant(c, env));
  }
}

TEST(ViaX, EveryLetterOf123)
{
  const Signature q = Signature::parse("123");
  const ParamEnv env = sigma_one(q);
  const StipulationReport stip = check_stipulation(q, env);
  ASSERT_TRUE(stip.passes());
  for (Letter j = 1; j <= 3; ++j) {
    const ViaXResult v = constants_via_X(q, j, env, stip);
    EXPECT_EQ(v.singular_orbits, 1u);
    EXPECT_EQ(v.rank(), 1u);
    EXPECT_EQ(v.recipe.size(), 1u);
    EXPECT_TRUE(v.recipe_annihilated);
  }
  EXPECT_THROW(constants_via_X(Signature::parse("12"), 1, sigma_one(Signature::parse("12")), stip),
               std::invalid_argument);
}

TEST(ViaX, IncreasingWordsWithTrivialProduct)
{
  // Q = 12..n with every long orbit singular: dimension (n-2)!.
  const long expected[] = {1, 2, 6};
  for (int n = 3; n <= 5; ++n) {
    const Signature q(std::vector<int>(static_cast<std::size_t>(n), 1));
    StratumOptions opts;
    opts.max_indeterminates = n == 5 ? 1 : 3;
    const ParamEnv env = monomial_stratum(q, n, long_orbit_exponents(q, n), 1, 0, 0, opts);
    const KernelResult k = kernel(q, env);
    EXPECT_EQ(static_cast<long>(k.dim()), expected[n - 3]);
    const StipulationReport stip = check_stipulation(q, env);
    ASSERT_TRUE(stip.passes());
    EXPECT_EQ(dimension_formula(chi_counts(q, env), stip).value, expected[n - 3]);
    for (Letter j = 1; j <= n; ++j)
      EXPECT_EQ(static_cast<long>(constants_via_X(q, j, env, stip).rank()), expected[n - 3]);
  }
}

TEST(LiftProject, RoundTrip1122)
{
  const Signature q = Signature::parse("1122");
  const ParamEnv env = monomial_stratum(q, 2, {1, 2, 2, 1}, 2, 1);
  const KernelResult k = kernel(q, env);
  ASSERT_EQ(k.dim(), 1u);
  const auto phi = natural_map(q);
  EXPECT_EQ(phi, (std::vector<Letter>{1, 1, 2, 2}));
  const Polynomial lifted = lift_up(k.basis[0], phi);
  EXPECT_TRUE(lifted.homogeneous_counts(4).has_value());
  EXPECT_EQ(lifted.size(), 24u);
  EXPECT_TRUE(is_constant(lifted, env.pulled_back(phi)));
  // Each word of 1122 has 2! 2! preimages.
  EXPECT_EQ(project_down(lifted, phi), k.basis[0].scaled(Scalar(4)));
  EXPECT_THROW(lift_up(mono("12"), phi), std::invalid_argument);
}

TEST(LiftProject, IdentityMap)
{
  const Signature q = Signature::parse("123");
  const ParamEnv env = sigma_one(q);
  const Polynomial c = kernel(q, env).basis.at(0);
  const auto id = natural_map(q);
  EXPECT_EQ(id, (std::vector<Letter>{1, 2, 3}));
  EXPECT_EQ(lift_up(c, id), c);
  EXPECT_EQ(project_down(c, id), c);
}

TEST(Membership, CertificatesFor123And1234)
{
  for (const char* s : {"123", "1234"}) {
    const Signature q = Signature::parse(s);
    const ParamEnv env = sigma_one(q);
    for (const auto& c : kernel(q, env).basis) {
      const MembershipReport m = verify_membership(c, q, env);
      EXPECT_EQ(m.simple.j, 0);
      EXPECT_FALSE(m.simple.coordinates.empty());
      EXPECT_EQ(m.iterated.size(), static_cast<std::size_t>(q.k()));
      // Oracle: rebuild c from the simple-commutator coordinates.
      Polynomial rebuilt;
      for (const auto& [w, x] : m.simple.coordinates)
        rebuilt += simple_commutator(w, env).scaled(x);
      EXPECT_EQ(rebuilt, c) << s;
      for (const auto& cert : m.iterated) {
        Polynomial viaX;
        for (const auto& [w, x] : cert.coordinates)
          viaX += iterated_X(w, env).expansion.scaled(x);
        EXPECT_EQ(viaX, c) << s << " j=" << cert.j;
      }
    }
  }
}

TEST(Membership, ZeroAndNonConstants)
{
  const Signature q = Signature::parse("123");
  const ParamEnv env = sigma_one(q);
  const MembershipReport zero = verify_membership(Polynomial(), q, env);
  EXPECT_TRUE(zero.simple.coordinates.empty());
  EXPECT_THROW(verify_membership(mono("123"), q, env), std::invalid_argument);
  EXPECT_THROW(verify_membership(mono("12"), q, env), std::invalid_argument);
}

TEST(RationalNullspace, MatchesGaussJordan)
{
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> val(-6, 6), size(1, 9), sparse(0, 2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = static_cast<std::size_t>(size(rng)), cols = static_cast<std::size_t>(size(rng));
    Matrix<Scalar> m(rows, std::vector<Scalar>(cols));
    for (auto& row : m)
      for (auto& x : row)
        if (sparse(rng) == 0) {
          Rational r(val(rng), 1 + std::abs(val(rng)));
          r.canonicalize();
          x = Scalar(r);
        }
    // Duplicate a row now and then so the rank drops.
    if (rows > 1 && t % 3 == 0)
      m[1] = m[0];
    const auto fast = rational_nullspace(m, cols);
    ASSERT_TRUE(fast.has_value());
    EXPECT_EQ(*fast, nullspace(m, cols)) << t;
  }
  Matrix<Scalar> symbolic{{Scalar::var(0), Scalar(1)}};
  EXPECT_FALSE(rational_nullspace(symbolic, 2).has_value());
  Matrix<Scalar> cyclotomic{{Scalar::zeta(3), Scalar(1)}};
  EXPECT_FALSE(rational_nullspace(cyclotomic, 2).has_value());
}
