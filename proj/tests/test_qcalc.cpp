#include "qconst/properties.hpp"
#include "qconst/qcalc.hpp"

#include <gtest/gtest.h>

using namespace qconst;

namespace {

Polynomial mono(const std::string& w, const Scalar& c = Scalar(1))
{
  return Polynomial::monomial(Word::parse(w), c);
}

const ParamEnv& env2()
{
  static const ParamEnv env = ParamEnv::generic(2);
  return env;
}

Scalar q(Letter i, Letter j)
{
  return env2().q(i, j);
}

} // namespace

TEST(Derive, Examples)
{
  EXPECT_EQ(derive(1, mono("12"), env2()), mono("2"));
  EXPECT_EQ(derive(2, mono("12"), env2()), mono("1", q(2, 1)));
  EXPECT_EQ(derive(1, mono("211"), env2()), mono("21", q(1, 2) * (Scalar(1) + q(1, 1))));
  EXPECT_TRUE(derive(1, Polynomial::unit(), env2()).is_zero());
  EXPECT_TRUE(derive(2, mono("111"), env2()).is_zero());
}

TEST(Commutator, Examples)
{
  const Polynomial x12 = q_commutator(Polynomial::letter(1), Polynomial::letter(2), q(2, 1));
  EXPECT_EQ(x12, mono("12") - mono("21", q(2, 1)));
  const Polynomial u = mono("12") + mono("2", Scalar(3));
  EXPECT_TRUE(q_commutator(u, u, Scalar(1)).is_zero());
  EXPECT_EQ(derive(1, x12, env2()), mono("2", Scalar(1) - q(1, 2) * q(2, 1)));
  EXPECT_EQ(simple_commutator(Word::parse("12"), env2()), x12);
}

TEST(IteratedX, Examples)
{
  EXPECT_EQ(iterated_X(Word::parse("1"), env2()).expansion, mono("1"));
  EXPECT_EQ(iterated_X(Word::parse("12"), env2()).expansion, mono("12") - mono("21", q(2, 1)));
  const Polynomial x211 = mono("211") - mono("121", q(1, 2) * (Scalar(1) + q(1, 1))) +
                          mono("112", q(1, 1) * q(1, 2).pow(2));
  EXPECT_EQ(iterated_X(Word::parse("211"), env2()).expansion, x211);
  const auto counts = iterated_X(Word::parse("2112"), env2()).expansion.homogeneous_counts(2);
  ASSERT_TRUE(counts.has_value());
  EXPECT_EQ(*counts, (std::vector<int>{2, 2}));
}

TEST(YFamily, LadderIdentity)
{
  const ParamEnv env = ParamEnv::generic(3);
  EXPECT_EQ(Y_family(1, Word::parse("2"), env).expansion, mono("2"));
  EXPECT_EQ(derive(1, iterated_X(Word::parse("12"), env).expansion, env),
            Y_family(1, Word::parse("2"), env).expansion.scaled(Scalar(1) - env.q(1, 2) * env.q(2, 1)));
  for (const char* rest : {"23", "32", "213", "2331", "1223"}) {
    const Word i = Word::parse(rest);
    const Letter j = 1;
    const YFamily y = Y_family(j, i, env);
    const Polynomial lhs = derive(j, iterated_X(Word({j}) + i, env).expansion, env);
    const Scalar f = Scalar(1) - env.q(j, i[0]) * env.q(i[0], j);
    EXPECT_EQ(lhs, y.expansion.scaled(f)) << rest;
    // The last ladder factor is b_j of the whole index.
    if (!y.factors.empty()) {
      EXPECT_EQ(y.factors.back(), env.q(j, i.back()) * commutation_factor(Word({j}) + i, env)) << rest;
    }
    EXPECT_EQ(twisted_factor(j, i, env), env.q(j, i.back()) * commutation_factor(Word({j}) + i, env));
  }
}

TEST(Adjoint, Examples)
{
  EXPECT_EQ(adjoint(Polynomial::letter(1), 2, env2()), iterated_X(Word::parse("12"), env2()).expansion);
  EXPECT_EQ(adjoint(iterated_X(Word::parse("21"), env2()).expansion, 1, env2()),
            iterated_X(Word::parse("211"), env2()).expansion);
  EXPECT_THROW(adjoint(Polynomial::unit(), 1, env2()), std::invalid_argument);
  EXPECT_THROW(adjoint(Polynomial(), 1, env2()), std::invalid_argument);
  EXPECT_THROW(adjoint(mono("1") + mono("2"), 1, env2()), std::invalid_argument);
}

TEST(Annihilation, AllIndexWordsUpToSix)
{
  const ParamEnv env = ParamEnv::generic(3);
  for (int len = 1; len <= 6; ++len) {
    std::vector<Letter> letters(static_cast<std::size_t>(len), 1);
    for (;;) {
      const Word w(letters);
      // Two letters suffice past length 4 to keep the run short.
      if (len <= 4 || w.max_letter() <= 2) {
        const Polynomial x = iterated_X(w, env).expansion;
        for (Letter j = 1; j <= 3; ++j)
          if (j != w.front()) {
            ASSERT_TRUE(derive(j, x, env).is_zero()) << w.to_string() << " j=" << j;
          }
      }
      std::size_t p = 0;
      while (p < letters.size() && letters[p] == 3)
        letters[p++] = 1;
      if (p == letters.size())
        break;
      ++letters[p];
    }
  }
}

class PropertySuites : public ::testing::Test {
protected:
  static PropertyOptions options()
  {
    PropertyOptions o;
    o.trials = 1000;
    o.max_n = 6;
    return o;
  }
};

TEST_F(PropertySuites, RecursionMatchesClosedForm)
{
  PropertyOptions o = options();
  o.max_n = 7;
  const SuiteResult r = check_derivation_recursion(o);
  EXPECT_EQ(r.trials, 1000);
  EXPECT_TRUE(r.passed()) << r.counterexample;
}

TEST_F(PropertySuites, Leibniz)
{
  const SuiteResult r = check_leibniz(options());
  EXPECT_TRUE(r.passed()) << r.counterexample;
}

TEST_F(PropertySuites, BracketIdentityIncludingEqualLetters)
{
  const SuiteResult r = check_bracket_identity(options());
  EXPECT_TRUE(r.passed()) << r.counterexample;
}

TEST_F(PropertySuites, Annihilation)
{
  const SuiteResult r = check_annihilation(options());
  EXPECT_TRUE(r.passed()) << r.counterexample;
}

TEST_F(PropertySuites, CorruptedBracketIsCaught)
{
  PropertyOptions o = options();
  o.corrupt_bracket = true;
  const SuiteResult r = check_bracket_identity(o);
  EXPECT_GT(r.failures, 0);
  EXPECT_FALSE(r.counterexample.empty());
  // The hook touches nothing else.
  EXPECT_TRUE(check_annihilation(o).passed());
}

TEST_F(PropertySuites, SeededRunsAreIdentical)
{
  PropertyOptions o = options();
  o.trials = 100;
  o.corrupt_bracket = true;
  const auto a = run_all_properties(o);
  const auto b = run_all_properties(o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].failures, b[i].failures);
    EXPECT_EQ(a[i].counterexample, b[i].counterexample);
  }
}
