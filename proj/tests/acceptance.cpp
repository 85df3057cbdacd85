// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "qconst/constants.hpp"
#include "qconst/lyndon.hpp"
#include "qconst/properties.hpp"
#include "qconst/qcalc.hpp"
#include "qconst/report.hpp"
#include "qconst/strata.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace qconst;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why)
  {
    if (ok)
      detail << "first failure: " << why << "; ";
    ok = false;
  }
};

/// Every signature with 1 <= n <= max_n over at most max_k letters, each used.
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

long factorial(int n)
{
  long f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

/// Free indeterminates kept on a stratum; the rest are fixed to primes.
StratumOptions stratum_options(const Signature& q)
{
  StratumOptions o;
  o.max_indeterminates = q.n() <= 4 ? 2 : 1;
  return o;
}

struct Tested {
  Signature q;
  std::string label;
  ParamEnv env;
  KernelResult kernel;
};

/// Strata used by criteria 3 and 7: the free one, and for each distinct orbit
/// condition the loci where the orbit product is 1 and -1.
std::vector<std::pair<std::string, ParamEnv>> strata_for(const Signature& q)
{
  std::vector<std::pair<std::string, ParamEnv>> out;
  const StratumOptions opts = stratum_options(q);
  out.emplace_back("free", free_stratum(q, q.k(), opts));
  std::set<ExponentVector> seen;
  for (const auto& o : decompose(q)) {
    const ExponentVector e = orbit_exponents(o, q.k());
    if (!seen.insert(e).second)
      continue;
    for (int order : {1, 2}) {
      try {
        out.emplace_back(exponent_string(e, q.k()) + (order == 1 ? " = 1" : " = -1"),
                         monomial_stratum(q, q.k(), e, order, order - 1, 0, opts));
      } catch (const std::invalid_argument&) {
        // Vanishing exponents: no condition to impose.
      }
    }
  }
  return out;
}

Outcome criterion1()
{
  Outcome r;
  const auto t0 = Clock::now();
  const auto rows = run_appendix();
  for (const auto& row : rows)
    if (!row.matches())
      r.fail(row.family + " " + row.signature + " " + row.condition + ": expected " + std::to_string(row.expected) +
             ", computed " + std::to_string(row.computed));
  const double s = seconds_since(t0);
  if (s >= 30)
    r.fail("runtime " + std::to_string(s) + " s");
  r.detail << rows.size() << " appendix instances, " << s << " s";
  return r;
}

Outcome criterion2()
{
  Outcome r;
  const long expected[] = {1, 2, 6};
  for (int n = 3; n <= 5; ++n) {
    const auto t0 = Clock::now();
    const Signature q(std::vector<int>(static_cast<std::size_t>(n), 1));
    StratumOptions opts;
    opts.max_indeterminates = n == 5 ? 1 : 3;
    const ParamEnv env = monomial_stratum(q, n, long_orbit_exponents(q, n), 1, 0, 0, opts);
    const KernelResult k = kernel(q, env);
    if (static_cast<long>(k.dim()) != expected[n - 3])
      r.fail(q.to_string() + " dim " + std::to_string(k.dim()));
    for (const auto& c : k.basis) {
      try {
        const MembershipReport m = verify_membership(c, q, env);
        if (m.simple.coordinates.empty() || m.iterated.size() != static_cast<std::size_t>(n))
          r.fail(q.to_string() + " incomplete certificate");
        for (const auto& cert : m.iterated)
          if (cert.coordinates.empty())
            r.fail(q.to_string() + " empty certificate for j = " + std::to_string(cert.j));
      } catch (const std::exception& e) {
        r.fail(q.to_string() + ": " + e.what());
      }
    }
    const double s = seconds_since(t0);
    if (n == 5 && s >= 120)
      r.fail("n = 5 took " + std::to_string(s) + " s");
    r.detail << (n > 3 ? ", " : "") << "n=" << n << " dim " << k.dim() << " (" << s << " s)";
  }
  return r;
}

Outcome criterion3(std::vector<Tested>& tested)
{
  Outcome r;
  int compared = 0, skipped = 0;
  for (const auto& q : signatures_up_to(6, 3)) {
    if (q.n() < 2)
      continue;
    for (auto& [label, env] : strata_for(q)) {
      try {
        const FormulaResult f = dimension_formula(q, env);
        KernelResult k = kernel(q, env);
        for (auto s : k.sample_ranks)
          if (s != k.rank)
            r.fail(q.to_string() + " [" + label + "] sample rank " + std::to_string(s));
        if (!f.applicable) {
          ++skipped;
        } else {
          ++compared;
          if (f.value != static_cast<long>(k.dim()))
            r.fail(q.to_string() + " [" + label + "] formula " + std::to_string(f.value) + " vs kernel " +
                   std::to_string(k.dim()));
        }
        if (k.dim() > 0)
          tested.push_back({q, label, env, std::move(k)});
      } catch (const std::exception& e) {
        r.fail(q.to_string() + " [" + label + "]: " + e.what());
      }
    }
  }
  r.detail << compared << " strata compared, " << skipped << " with a failing stipulation";
  return r;
}

Outcome criterion4()
{
  Outcome r;
  int checked = 0;
  for (const auto& q : signatures_up_to(6, 6)) {
    if (q.n() < 2)
      continue;
    ClosedFormCounts c;
    try {
      c = closed_form_counts(q);
    } catch (const std::domain_error&) {
      continue;
    }
    long denom = 1;
    for (int m : q.multiplicities())
      denom *= factorial(m);
    // Independent arithmetic for the three closed forms.
    if (c.chi != factorial(q.n() - 1) / denom || c.dim != factorial(q.n() - 2) / denom)
      r.fail(q.to_string() + " closed-form arithmetic");
    // At n = 6 every free coordinate is a prime; see stratum_options.
    StratumOptions opts;
    opts.max_indeterminates = q.n() <= 4 ? 2 : q.n() == 5 ? 1 : 0;
    const ParamEnv env = monomial_stratum(q, q.k(), long_orbit_exponents(q, q.k()), 1, 0, 0, opts);
    const OrbitReport o = chi_counts(q, env);
    if (o.chi != c.chi)
      r.fail(q.to_string() + " chi " + std::to_string(o.chi));
    for (Letter j = 1; j <= q.k(); ++j)
      if (o.chi_of(j) != c.chi_j[static_cast<std::size_t>(j - 1)] ||
          c.chi_j[static_cast<std::size_t>(j - 1)] != q.multiplicity(j) * factorial(q.n() - 2) / denom)
        r.fail(q.to_string() + " chi_" + std::to_string(j));
    const long dim = static_cast<long>(kernel(q, env).dim());
    if (dim != c.dim)
      r.fail(q.to_string() + " #(Q) " + std::to_string(dim) + " vs " + std::to_string(c.dim));
    ++checked;
  }
  r.detail << checked << " signatures without short orbits";
  return r;
}

Outcome criterion5()
{
  Outcome r;
  PropertyOptions o;
  o.trials = 1000;
  o.max_n = 6;
  const char* sep = "";
  for (const auto& s : run_all_properties(o)) {
    if (s.trials != 1000)
      r.fail(s.name + " ran " + std::to_string(s.trials) + " cases");
    if (!s.passed())
      r.fail(s.name + ": " + s.counterexample);
    r.detail << sep << s.name << " " << s.failures << "/" << s.trials;
    sep = ", ";
  }
  return r;
}

Outcome criterion6()
{
  Outcome r;
  const Signature q = Signature::parse("1122");
  const ParamEnv env = monomial_stratum(q, 2, {1, 2, 2, 1}, 2, 1);
  const KernelResult k = kernel(q, env);
  if (k.dim() != 1) {
    r.fail("1122 dim " + std::to_string(k.dim()));
    return r;
  }
  const auto phi = natural_map(q);
  const ParamEnv up = env.pulled_back(phi);
  const Polynomial c = k.basis[0];
  const Polynomial lifted = lift_up(c, phi);
  if (!is_constant(lifted, up))
    r.fail("lift is not a constant of B_1234");
  // DOWN(UP(c)) = 2! 2! c.
  if (project_down(lifted, phi) != c.scaled(Scalar(4)))
    r.fail("DOWN(UP(c)) is not 4 c");
  const Signature s1234 = Signature::parse("1234");
  const KernelResult k4 = kernel(s1234, up);
  for (const auto& x : k4.basis) {
    const Polynomial down = project_down(x, phi);
    if (!down.is_zero() && !is_constant(down, env))
      r.fail("DOWN of a 1234 constant is not a constant");
  }
  std::vector<std::vector<Scalar>> span;
  const Basis b4(s1234);
  for (const auto& x : k4.basis)
    span.push_back(x.coordinates(b4));
  std::mt19937_64 rng(kDefaultSeed);
  if (!solve_in_span(span, lifted.coordinates(b4), up, rng))
    r.fail("lift outside the 1234 kernel");
  r.detail << "1122 dim 1, 1234 dim " << k4.dim() << ", DOWN o UP = 4 x identity";
  return r;
}

Outcome criterion7(const std::vector<Tested>& tested)
{
  Outcome r;
  const std::vector<std::pair<std::string, std::string>> six{
      {"1122", "(1122)"}, {"1212", "(12)(12)"}, {"1221", "(122)1"},
      {"2112", "2(112)"}, {"2121", "2(12)1"},   {"2211", "(22)(11)"}};
  for (const auto& [w, expected] : six) {
    const std::string got = parenthesize(Word::parse(w)).to_string();
    if (got != expected)
      r.fail(w + " -> " + got);
  }
  int bases = 0;
  for (const auto& q : signatures_up_to(6, 6)) {
    const ParamEnv env = ParamEnv::generic(q.k());
    if (!good_basis(q, env).full_rank())
      r.fail("good basis of " + q.to_string() + " is rank deficient");
    ++bases;
  }
  int memberships = 0;
  for (const auto& t : tested) {
    for (Letter j : t.q.letters()) {
      const MSubspace m = m_subspace(t.q, j, t.env);
      for (const auto& c : t.kernel.basis) {
        if (!m_coordinates(c, m, t.env))
          r.fail(t.q.to_string() + " [" + t.label + "] constant outside M_" + std::to_string(j));
        ++memberships;
      }
    }
  }
  r.detail << "6 parenthesizations, " << bases << " good bases full rank, " << memberships
           << " memberships on " << tested.size() << " strata";
  return r;
}

Outcome criterion8()
{
  Outcome r;
  int checked = 0;
  for (const auto& q : signatures_up_to(6, 6)) {
    const KernelResult k = kernel(q, ParamEnv::generic(q.k()));
    if (k.dim() != 0)
      r.fail(q.to_string() + " has " + std::to_string(k.dim()) + " generic constants");
    ++checked;
  }
  r.detail << checked << " signatures, fresh indeterminates";
  return r;
}

} // namespace

int main()
{
  std::vector<Tested> tested;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"appendix regression", criterion1},
      {"12..n has (n-2)! constants with certificates", criterion2},
      {"dimension formula equals kernel dimension", [&] { return criterion3(tested); }},
      {"closed forms without short orbits", criterion4},
      {"identity suites", criterion5},
      {"1122 <-> 1234 round trip", criterion6},
      {"compound words and M_j", [&] { return criterion7(tested); }},
      {"no constants in general position", criterion8},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << index++ << ": " << name << " (" << o.detail.str()
              << "; " << seconds_since(t0) << " s)" << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
