#include "qconst/lyndon.hpp"
#include "qconst/qcalc.hpp"
#include "qconst/strata.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace qconst;

namespace {

std::string scan(const std::string& w)
{
  return parenthesize(Word::parse(w)).to_string();
}

std::vector<Signature> signatures_up_to(int max_n, int max_k)
{
  std::vector<Signature> out;
  std::vector<int> m;
  std::function<void(int)> rec = [&](int left) {
    if (!m.empty() && left < max_n)
      out.emplace_back(m);
    if (static_cast<int>(m.size()) == max_k)
      return;
    for (int x = 1; x <= left; ++x) {
      m.push_back(x);
      rec(left - x);
      m.pop_back();
    }
  };
  rec(max_n);
  return out;
}

} // namespace

TEST(Parenthesize, Examples)
{
  EXPECT_EQ(scan("1122"), "(1122)");
  EXPECT_EQ(scan("1212"), "(12)(12)");
  EXPECT_EQ(scan("1221"), "(122)1");
  EXPECT_EQ(scan("2112"), "2(112)");
  EXPECT_EQ(scan("2121"), "2(12)1");
  EXPECT_EQ(scan("2211"), "(22)(11)");
  EXPECT_EQ(scan("312"), "3(12)");
  EXPECT_EQ(scan("1"), "1");
  EXPECT_EQ(scan("21"), "21");
  // With 2 in front, 21 becomes one group.
  EXPECT_EQ(parenthesize(Word::parse("21"), 2).to_string(), "(21)");
  EXPECT_EQ(parenthesize(Word::parse("2121"), 2).to_string(), "(21)(21)");
}

TEST(Parenthesize, GroupsAreGoodAndConcatenateBack)
{
  for (const auto& q : signatures_up_to(6, 3)) {
    const Basis basis(q);
    for (const auto& w : basis.words()) {
      const CompoundWord cw = parenthesize(w);
      ASSERT_EQ(cw.word(), w);
      for (const auto& g : cw.groups)
        ASSERT_TRUE(is_good_group(g)) << w.to_string() << " " << g.to_string();
      for (Letter first : q.letters()) {
        const CompoundWord cj = parenthesize(w, first);
        ASSERT_EQ(cj.word(), w);
        for (const auto& g : cj.groups)
          ASSERT_TRUE(is_good_group(g, first)) << w.to_string() << " " << first;
      }
    }
  }
}

TEST(GoodGroup, Shape)
{
  EXPECT_TRUE(is_good_group(Word::parse("1")));
  EXPECT_TRUE(is_good_group(Word::parse("1123")));
  EXPECT_TRUE(is_good_group(Word::parse("1132")));
  EXPECT_FALSE(is_good_group(Word::parse("121")));
  EXPECT_FALSE(is_good_group(Word::parse("21")));
  EXPECT_TRUE(is_good_group(Word::parse("21"), 2));
  EXPECT_FALSE(is_good_group(Word::parse("12"), 2));
}

TEST(WordToCommutator, Examples)
{
  const ParamEnv env = ParamEnv::generic(3);
  EXPECT_EQ(word_to_commutator(Word::parse("1"), env), Polynomial::letter(1));
  EXPECT_EQ(word_to_commutator(Word::parse("12"), env),
            Polynomial::monomial(Word::parse("12"), Scalar(1)) -
                Polynomial::monomial(Word::parse("21"), env.q(2, 1)));
  EXPECT_EQ(word_to_commutator(Word::parse("1123"), env), iterated_X(Word::parse("1123"), env).expansion);
  const CompoundWord cw = parenthesize(Word::parse("2112"));
  EXPECT_EQ(compound_value(cw, env), Polynomial::letter(2) * iterated_X(Word::parse("112"), env).expansion);
}

TEST(GoodBasis, SmallCases)
{
  const ParamEnv env = ParamEnv::generic(3);
  const GoodBasis one = good_basis(Signature::parse("1"), env);
  ASSERT_EQ(one.elements.size(), 1u);
  EXPECT_EQ(one.elements[0], Polynomial::letter(1));
  const GoodBasis two = good_basis(Signature::parse("12"), env);
  ASSERT_EQ(two.words.size(), 2u);
  EXPECT_EQ(two.words[0].to_string(), "(12)");
  EXPECT_EQ(two.words[1].to_string(), "21");
  EXPECT_TRUE(two.full_rank());
  const GoodBasis b1122 = good_basis(Signature::parse("1122"), env, {}, true);
  EXPECT_EQ(b1122.rank, 6u);
  EXPECT_TRUE(good_basis(Signature::parse("1123"), env, {}, true).full_rank());
}

TEST(GoodBasis, FullRankForGenericParametersUpToFive)
{
  const ParamEnv env = ParamEnv::generic(3);
  for (const auto& q : signatures_up_to(5, 3))
    EXPECT_TRUE(good_basis(q, env).full_rank()) << q.to_string();
}

TEST(MSubspace, TwoLetters)
{
  const ParamEnv env = ParamEnv::generic(2);
  const Signature q = Signature::parse("12");
  const MSubspace m1 = m_subspace(q, 1, env);
  ASSERT_EQ(m1.dim(), 1u);
  EXPECT_EQ(m1.words[0].to_string(), "(12)");
  EXPECT_EQ(m1.expected_dim, 1u);
  const MSubspace m2 = m_subspace(q, 2, env);
  ASSERT_EQ(m2.dim(), 1u);
  EXPECT_EQ(m2.words[0].to_string(), "(21)");
  EXPECT_THROW(m_subspace(q, 3, env), std::invalid_argument);
}

TEST(MSubspace, NaturalOrderMissesLargerLetters)
{
  // In the natural order no compound word of 12 has every group starting
  // with 2, although hat-Q_2 has one element.
  int count = 0;
  const Basis basis(Signature::parse("12"));
  for (const auto& w : basis.words())
    count += parenthesize(w).all_groups_start_with(2) ? 1 : 0;
  EXPECT_EQ(count, 0);
}

TEST(MSubspace, DimensionMatchesChildUpToSix)
{
  const ParamEnv env = ParamEnv::generic(3);
  int pairs = 0;
  for (const auto& q : signatures_up_to(6, 3)) {
    for (Letter j : q.letters()) {
      // m_subspace itself checks that every d_i, i != j, kills the elements.
      const MSubspace m = m_subspace(q, j, env);
      ASSERT_EQ(m.expected_dim, q.child(j).component_size());
      ASSERT_EQ(m.dim(), m.expected_dim) << q.to_string() << " j=" << j;
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 96);
}

TEST(MSubspace, ElementsAreIndependent)
{
  const ParamEnv env = ParamEnv::generic(3);
  std::mt19937_64 rng(kDefaultSeed);
  for (const auto& q : signatures_up_to(5, 3)) {
    if (q.n() < 2)
      continue;
    const Basis basis(q);
    for (Letter j : q.letters()) {
      const MSubspace m = m_subspace(q, j, env);
      Matrix<Scalar> rows;
      for (const auto& e : m.elements)
        rows.push_back(e.coordinates(basis));
      EXPECT_EQ(sampled_rank(rows, basis.size(), env, rng), m.dim()) << q.to_string() << " j=" << j;
    }
  }
}

TEST(MSubspace, ConstantsLieInEverySubspace)
{
  struct Case {
    const char* q;
    ParamEnv env;
  };
  const Signature s123 = Signature::parse("123"), s1123 = Signature::parse("1123"), s1122 = Signature::parse("1122");
  const std::vector<Case> cases{
      {"123", monomial_stratum(s123, 3, long_orbit_exponents(s123, 3), 1, 0)},
      {"1123", monomial_stratum(s1123, 3, long_orbit_exponents(s1123, 3), 1, 0)},
      {"1122", monomial_stratum(s1122, 2, {1, 2, 2, 1}, 2, 1)},
  };
  for (const auto& c : cases) {
    const Signature q = Signature::parse(c.q);
    const KernelResult k = kernel(q, c.env);
    ASSERT_GE(k.dim(), 1u) << c.q;
    for (Letter j : q.letters()) {
      const MSubspace m = m_subspace(q, j, c.env);
      for (const auto& x : k.basis)
        EXPECT_TRUE(m_coordinates(x, m, c.env).has_value()) << c.q << " j=" << j;
    }
  }
}
