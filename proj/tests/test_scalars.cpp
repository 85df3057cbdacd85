#include "qconst/cyclotomic.hpp"
#include "qconst/parse.hpp"
#include "qconst/param_env.hpp"
#include "qconst/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qconst;

namespace {

const ScalarHeader kHeader{12, {"t1", "t2"}};

Scalar parse(const std::string& s, const ScalarHeader& h = kHeader)
{
  return parse_scalar(s, h);
}

Rational frac(long a, long b)
{
  Rational r(a, b);
  r.canonicalize();
  return r;
}

/// Small random scalar: a ratio of short polynomials in t1, t2 with
/// coefficients in Q(zeta_12).
Scalar random_scalar(std::mt19937_64& rng)
{
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2), pick(0, 3);
  auto poly = [&] {
    Scalar p;
    for (int t = 0; t < 3; ++t) {
      Scalar term(frac(coef(rng), 1 + expo(rng)));
      if (pick(rng) == 0)
        term *= Scalar::zeta(12, expo(rng) + 1);
      term *= Scalar::var(0).pow(expo(rng)) * Scalar::var(1).pow(expo(rng));
      p += term;
    }
    return p;
  };
  Scalar den = poly();
  while (den.is_zero())
    den = poly();
  return poly() / den;
}

} // namespace

TEST(Cyclotomic, ZetaPowers)
{
  EXPECT_TRUE(Cyclotomic::zeta(6).pow(6).is_one());
  EXPECT_EQ(Cyclotomic::zeta(6).pow(3), Cyclotomic(-1));
  for (int n : {2, 3, 4, 5, 6, 7, 8, 9, 12})
    for (int p = 1; p < n; ++p)
      EXPECT_FALSE(Cyclotomic::zeta(n, p).is_one()) << n << " " << p;
}

TEST(Cyclotomic, CanonicalAcrossConductors)
{
  // zeta_4 embedded in conductor 12 equals zeta_12^3.
  EXPECT_EQ(Cyclotomic::zeta(4).lifted(12), Cyclotomic::zeta(12, 3));
  EXPECT_EQ(Cyclotomic::zeta(4) * Cyclotomic::zeta(3), Cyclotomic::zeta(12, 7));
  EXPECT_EQ(Cyclotomic(frac(2, 4)), Cyclotomic(frac(1, 2)));
  EXPECT_TRUE((Cyclotomic::zeta(5) - Cyclotomic::zeta(5)).is_zero());
  Cyclotomic sum;
  for (int p = 0; p < 5; ++p)
    sum += Cyclotomic::zeta(5, p);
  EXPECT_TRUE(sum.is_zero());
}

TEST(Cyclotomic, InverseOfZeroThrows)
{
  EXPECT_THROW(Cyclotomic().inverse(), std::domain_error);
  const Cyclotomic x = Cyclotomic(3) + Cyclotomic::zeta(7, 2);
  EXPECT_TRUE((x * x.inverse()).is_one());
}

TEST(Parse, Examples)
{
  EXPECT_EQ(parse("1/2"), Scalar(frac(1, 2)));
  const ScalarHeader four{4, {}};
  EXPECT_EQ(parse("zeta(4)^2", four), Scalar(-1));
  const Scalar s = parse("t1^2 * zeta(3) / (1 - t2)");
  EXPECT_EQ(s, Scalar::var(0).pow(2) * Scalar::zeta(3) / (Scalar(1) - Scalar::var(1)));
  EXPECT_EQ(parse(s.to_string(kHeader.indeterminates)), s);
  EXPECT_EQ(parse("-t1 + 2*-t2"), -Scalar::var(0) - Scalar(2) * Scalar::var(1));
  EXPECT_EQ(parse("t1^-2"), Scalar::var(0).pow(-2));
}

TEST(Parse, Errors)
{
  try {
    parse("1 + * 2");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("1/0"), ParseError);
  EXPECT_THROW(parse("1/(t1 - t1)"), ParseError);
  EXPECT_THROW(parse("zeta(5)"), ParseError);
  EXPECT_THROW(parse("t3"), ParseError);
  EXPECT_THROW(parse("(1 + t1"), ParseError);
}

TEST(Parse, RoundTripRandom)
{
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Scalar s = random_scalar(rng);
    EXPECT_EQ(parse(s.to_string(kHeader.indeterminates)), s) << s.to_string(kHeader.indeterminates);
  }
}

TEST(Scalar, Evaluate)
{
  const std::vector<Cyclotomic> p2{Cyclotomic(2), Cyclotomic(0)};
  EXPECT_EQ(parse("t1 + 1").evaluate(p2), Cyclotomic(3));
  EXPECT_EQ(parse("zeta(4)").evaluate({}), Cyclotomic::zeta(4));
  const Scalar r = parse("(t1^2 - 1)/(t1 - 1)");
  EXPECT_EQ(r, parse("t1 + 1"));
  const std::vector<Cyclotomic> p3{Cyclotomic(3), Cyclotomic(5)};
  // Oracle: numerator and denominator substituted separately.
  EXPECT_EQ(r.evaluate(p3), Cyclotomic(4));
  EXPECT_EQ(Cyclotomic(3 * 3 - 1) / Cyclotomic(3 - 1), Cyclotomic(4));
  EXPECT_THROW(parse("1/(t1 - 2)").evaluate(p2), std::domain_error);
}

TEST(Scalar, Arithmetic)
{
  const Scalar q = parse("t1/(1+t2)");
  EXPECT_TRUE(q.pow(0).is_one());
  EXPECT_TRUE((q * q.inverse()).is_one());
  EXPECT_EQ(Scalar::zeta(6).pow(6), Scalar(1));
  EXPECT_EQ(Scalar::zeta(6).pow(3), Scalar(-1));
  EXPECT_THROW(Scalar().inverse(), std::domain_error);
  EXPECT_EQ(q.pow(-2), q.inverse() * q.inverse());
}

TEST(Scalar, FieldAxiomsRandom)
{
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(a - a, Scalar());
    if (!a.is_zero())
      ASSERT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Scalar, EvaluateIsHomomorphism)
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> val(-20, 20);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    const std::vector<Cyclotomic> pt{Cyclotomic(val(rng)) + Cyclotomic::zeta(12, 1), Cyclotomic(val(rng))};
    try {
      const Cyclotomic lhs = (a * b + c).evaluate(pt);
      ASSERT_EQ(lhs, a.evaluate(pt) * b.evaluate(pt) + c.evaluate(pt));
      ++checked;
    } catch (const std::domain_error&) {
      // A denominator vanished at this point; resample.
    }
  }
  EXPECT_GT(checked, 250);
}

TEST(ParamEnv, RejectsZeroAndWrongShape)
{
  EXPECT_THROW(ParamEnv(2, ScalarHeader{}, {Scalar(1), Scalar(2), Scalar(3)}), std::invalid_argument);
  EXPECT_THROW(ParamEnv(1, ScalarHeader{}, {Scalar()}), std::invalid_argument);
  const ParamEnv g = ParamEnv::generic(2);
  EXPECT_EQ(g.num_indeterminates(), 4);
  EXPECT_NE(g.q(1, 2), g.q(2, 1));
  const ParamEnv e = ParamEnv::from_expressions(
      2, ScalarHeader{4, {"t1"}}, {{{1, 1}, "zeta(4)"}, {{1, 2}, "t1"}, {{2, 1}, "1/t1"}, {{2, 2}, "-1"}});
  EXPECT_TRUE((e.q(1, 2) * e.q(2, 1)).is_one());
  EXPECT_EQ(e.q(1, 1).pow(2), Scalar(-1));
}
