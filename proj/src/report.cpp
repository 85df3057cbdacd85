#include "qconst/report.hpp"

#include "qconst/strata.hpp"

#include <chrono>
#include <sstream>

namespace qconst {

const char* to_string(Mode m)
{
  return m == Mode::Generic ? "generic" : "explicit";
}

Mode parse_mode(std::string_view text)
{
  if (text == "generic")
    return Mode::Generic;
  if (text == "explicit")
    return Mode::Explicit;
  throw SpecError("mode must be generic or explicit, got '" + std::string(text) + "'");
}

namespace {

std::pair<int, int> parse_pair(const std::string& key, int k)
{
  int i = 0, j = 0;
  char comma = 0, extra = 0;
  std::istringstream in(key);
  if (!(in >> i >> comma >> j) || comma != ',' || (in >> extra))
    throw SpecError("parameter key '" + key + "' is not of the form \"i,j\"");
  if (i < 1 || i > k || j < 1 || j > k)
    throw SpecError("parameter key '" + key + "' is outside 1.." + std::to_string(k));
  return {i, j};
}

Signature signature_of(const Json& item, int k)
{
  std::vector<int> counts;
  if (item.is_string()) {
    const Word w = Word::parse(item.get<std::string>());
    if (w.max_letter() > k)
      throw SpecError("signature " + w.to_string() + " uses a letter beyond k = " + std::to_string(k));
    counts = w.counts(k);
  } else if (item.is_array()) {
    counts = item.get<std::vector<int>>();
    if (static_cast<int>(counts.size()) != k)
      throw SpecError("multiplicity list must have k = " + std::to_string(k) + " entries");
  } else {
    throw SpecError("a signature is a digit string or a multiplicity array");
  }
  return Signature(counts);
}

Json coordinates_json(const Certificate& c, const ParamEnv& env)
{
  Json out = Json::object();
  for (const auto& [w, x] : c.coordinates)
    out[w.to_string()] = x.to_string(env.names());
  return out;
}

Json orbit_list(const std::vector<OrbitStatus>& orbits, const ParamEnv& env)
{
  Json out = Json::array();
  for (const auto& s : orbits) {
    Json members = Json::array();
    for (const auto& w : s.orbit.members)
      members.push_back(w.to_string());
    out.push_back(Json{{"representative", s.orbit.representative.to_string()},
                       {"period", s.orbit.period()},
                       {"members", members},
                       {"product", s.product.to_string(env.names())},
                       {"singular", s.singular}});
  }
  return out;
}

} // namespace

ProblemSpec parse_problem_spec(std::string_view json_text)
{
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object())
    throw SpecError("problem spec must be a JSON object");
  ProblemSpec spec;
  try {
    if (!doc.contains("k"))
      throw SpecError("missing field 'k'");
    spec.k = doc.at("k").get<int>();
    if (spec.k < 1 || spec.k > kMaxLetters)
      throw SpecError("k must lie in 1.." + std::to_string(kMaxLetters));
    if (doc.contains("multiplicities"))
      spec.multiplicities = doc.at("multiplicities").get<std::vector<int>>();
    spec.conductor = doc.value("conductor", 1);
    if (spec.conductor < 1)
      throw SpecError("conductor must be positive");
    if (doc.contains("indeterminates"))
      spec.indeterminates = doc.at("indeterminates").get<std::vector<std::string>>();
    if (doc.contains("q")) {
      if (!doc.at("q").is_object())
        throw SpecError("'q' must map \"i,j\" to expression strings");
      for (const auto& [key, value] : doc.at("q").items()) {
        if (!value.is_string())
          throw SpecError("parameter " + key + " must be an expression string");
        spec.q[parse_pair(key, spec.k)] = value.get<std::string>();
      }
    }
    spec.mode = doc.contains("mode") ? parse_mode(doc.at("mode").get<std::string>())
                                     : (doc.contains("q") ? Mode::Explicit : Mode::Generic);
    if (doc.contains("signatures")) {
      if (!doc.at("signatures").is_array())
        throw SpecError("'signatures' must be an array");
      for (const auto& item : doc.at("signatures"))
        spec.signatures.push_back(signature_of(item, spec.k));
    }
    if (spec.signatures.empty()) {
      if (spec.multiplicities.empty())
        throw SpecError("missing field 'multiplicities'");
      spec.signatures.push_back(signature_of(Json(spec.multiplicities), spec.k));
    } else if (!spec.multiplicities.empty()) {
      signature_of(Json(spec.multiplicities), spec.k);
    }
  } catch (const Json::exception& e) {
    throw SpecError(std::string("bad field type: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  return spec;
}

ParamEnv build_env(const ProblemSpec& spec)
{
  ScalarHeader header{spec.conductor, spec.indeterminates};
  std::map<std::pair<int, int>, std::string> table = spec.q;
  for (int i = 1; i <= spec.k; ++i)
    for (int j = 1; j <= spec.k; ++j) {
      if (table.count({i, j}))
        continue;
      if (spec.mode == Mode::Explicit)
        throw SpecError("explicit mode needs q \"" + std::to_string(i) + "," + std::to_string(j) + "\"");
      const std::string name = "q" + std::to_string(i) + std::to_string(j);
      for (const auto& existing : header.indeterminates)
        if (existing == name)
          throw SpecError("indeterminate " + name + " clashes with an auto-filled parameter");
      header.indeterminates.push_back(name);
      table[{i, j}] = name;
    }
  try {
    return ParamEnv::from_expressions(spec.k, header, table);
  } catch (const ParseError& e) {
    throw SpecError(std::string("parameter expression: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  } catch (const std::domain_error& e) {
    throw SpecError(e.what());
  }
}

std::vector<Signature> spec_signatures(const ProblemSpec& spec)
{
  return spec.signatures;
}

Json orbits_json(const OrbitReport& report, const ParamEnv& env)
{
  Json chi_j = Json::array();
  for (Letter j = 1; j <= report.signature.k(); ++j)
    chi_j.push_back(report.chi_of(j));
  Json children = Json::array();
  for (const auto& c : report.children)
    children.push_back(Json{{"j", c.j},
                            {"signature", c.signature.to_string()},
                            {"orbits", orbit_list(c.orbits, env)},
                            {"chi", c.chi}});
  return Json{{"signature", report.signature.to_string()},
              {"orbits", orbit_list(report.orbits, env)},
              {"chi", report.chi},
              {"chi_j", chi_j},
              {"children", children}};
}

Json polynomial_json(const Polynomial& p, const ParamEnv& env)
{
  Json out = Json::object();
  for (const auto& [w, c] : p.terms())
    out[w.to_string()] = c.to_string(env.names());
  return out;
}

Json constants_json(const Signature& q, const ParamEnv& env, const SampleOptions& opts)
{
  const auto start = std::chrono::steady_clock::now();
  const OrbitReport orbits = chi_counts(q, env);
  Json r = orbits_json(orbits, env);

  const StipulationReport stip = check_stipulation(q, env, opts);
  Json stip_json = Json::array();
  for (const auto& e : stip.entries)
    stip_json.push_back(Json{{"j", e.j},
                             {"child", e.child.to_string()},
                             {"no_constants", e.no_constants},
                             {"child_constants", e.child_constants},
                             {"span_check", to_string(e.span_mode)},
                             {"spans", e.spans},
                             {"passes", e.passes()},
                             {"witness", e.witness}});
  r["stipulation"] = stip_json;
  r["stipulation_passes"] = stip.passes();

  const KernelResult ker = kernel(q, env, opts);
  Json constants = Json::array();
  for (const auto& c : ker.basis)
    constants.push_back(polynomial_json(c, env));
  r["constants"] = constants;
  r["dim"] = ker.dim();
  Json ranks = Json::array();
  for (auto s : ker.sample_ranks)
    ranks.push_back(s);
  r["rank"] = ker.rank;
  r["sample_ranks"] = ranks;

  const FormulaResult formula = dimension_formula(orbits, stip);
  r["formula_dim"] = formula.applicable ? Json(formula.value) : Json(nullptr);
  r["formula_note"] = formula.diagnostic;
  if (formula.applicable && formula.value != static_cast<long>(ker.dim()))
    throw CrossCheckError("dimension formula gives " + std::to_string(formula.value) + " but the kernel of " +
                          q.to_string() + " has dimension " + std::to_string(ker.dim()));

  Json via = Json::array();
  if (q.n() >= 3 && stip.passes()) {
    for (Letter j : q.letters()) {
      const ViaXResult v = constants_via_X(q, j, env, stip, opts);
      via.push_back(Json{{"j", j},
                         {"singular_orbits", v.singular_orbits},
                         {"rank", v.rank()},
                         {"recipe_annihilated", v.recipe_annihilated}});
      if (v.rank() != ker.dim())
        throw CrossCheckError("constants inside the span of X^{" + std::to_string(j) + "...} have dimension " +
                              std::to_string(v.rank()) + ", kernel has " + std::to_string(ker.dim()));
    }
  }
  r["via_x"] = via;

  Json certs = Json::array();
  if (stip.passes() && q.n() >= 2) {
    for (const auto& c : ker.basis) {
      const MembershipReport m = verify_membership(c, q, env, opts);
      Json iterated = Json::object();
      for (const auto& cert : m.iterated)
        iterated[std::to_string(cert.j)] = coordinates_json(cert, env);
      certs.push_back(Json{{"simple", coordinates_json(m.simple, env)}, {"iterated", iterated}});
    }
  }
  r["certificates"] = certs;
  r["timing_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

namespace {

std::string scalar_text(const Json& v)
{
  if (v.is_string())
    return v.get<std::string>();
  if (v.is_null())
    return "n/a";
  return v.dump();
}

bool is_flat(const Json& v)
{
  if (!v.is_array())
    return false;
  for (const auto& x : v)
    if (x.is_structured())
      return false;
  return true;
}

void render(const Json& v, const std::string& indent, std::ostringstream& out)
{
  for (const auto& [key, value] : v.items()) {
    const std::string label = v.is_array() ? "-" : key + ":";
    if (!value.is_structured()) {
      out << indent << label << " " << scalar_text(value) << "\n";
    } else if (is_flat(value)) {
      out << indent << label;
      for (const auto& x : value)
        out << " " << scalar_text(x);
      if (value.empty())
        out << " (none)";
      out << "\n";
    } else if (value.empty()) {
      out << indent << label << " (none)\n";
    } else {
      out << indent << label << "\n";
      render(value, indent + "  ", out);
    }
  }
}

} // namespace

std::string render_text(const Json& report)
{
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

namespace {

ExponentVector exponents(int k, std::initializer_list<std::tuple<int, int, long>> entries)
{
  ExponentVector e(static_cast<std::size_t>(k * k), 0);
  for (const auto& [a, b, x] : entries)
    e[static_cast<std::size_t>((a - 1) * k + (b - 1))] += x;
  return e;
}

ParamEnv single_letter(int conductor, long power)
{
  return ParamEnv(1, ScalarHeader{conductor, {}}, {Scalar::zeta(conductor, power)});
}

} // namespace

std::vector<AppendixRow> run_appendix(const SampleOptions& opts)
{
  struct Case {
    std::string family;
    Signature q;
    std::string condition;
    long expected;
    ParamEnv env;
  };
  std::vector<Case> cases;
  const Signature s12 = Signature::parse("12");
  cases.push_back({"{12}", s12, "sigma12 = 1", 1, monomial_stratum(s12, 2, exponents(2, {{1, 2, 1}, {2, 1, 1}}), 1, 0)});
  cases.push_back({"{12}", s12, "generic", 0, free_stratum(s12, 2)});
  for (int n = 2; n <= 4; ++n) {
    const Signature q(std::vector<int>{n});
    cases.push_back({"1^n", q, "q11 = zeta(" + std::to_string(n) + ")", 1, single_letter(n, 1)});
    cases.push_back({"1^n", q, "q11 = 1", 0, single_letter(1, 0)});
  }
  for (int m = 1; m <= 2; ++m) {
    const Signature q(std::vector<int>{m + 1, 1});
    const ExponentVector e = exponents(2, {{1, 1, m}, {1, 2, 1}, {2, 1, 1}});
    const std::string lhs = "q11^" + std::to_string(m) + " sigma12";
    cases.push_back({"1^{m+1}2 (a)", q, lhs + " = 1", 1, monomial_stratum(q, 2, e, 1, 0)});
    cases.push_back({"1^{m+1}2 (b)", q, lhs + " = zeta(" + std::to_string(m + 1) + ")", 0,
                     monomial_stratum(q, 2, e, m + 1, 1)});
  }
  const Signature s123 = Signature::parse("123");
  cases.push_back({"{123}", s123, "sigma12 sigma23 sigma31 = 1", 1,
                   monomial_stratum(s123, 3,
                                    exponents(3, {{1, 2, 1}, {2, 1, 1}, {2, 3, 1}, {3, 2, 1}, {3, 1, 1}, {1, 3, 1}}),
                                    1, 0)});
  const Signature s1122 = Signature::parse("1122");
  const ExponentVector e1122 = exponents(2, {{1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}});
  cases.push_back({"{1122}", s1122, "q11 q22 sigma12^2 = 1", 0, monomial_stratum(s1122, 2, e1122, 1, 0)});
  cases.push_back({"{1122}", s1122, "q11 q22 sigma12^2 = -1", 1, monomial_stratum(s1122, 2, e1122, 2, 1)});
  const Signature s1123 = Signature::parse("1123");
  cases.push_back({"{1123}", s1123, "long orbits singular", 1,
                   monomial_stratum(s1123, 3, long_orbit_exponents(s1123, 3), 1, 0)});
  const Signature s11122 = Signature::parse("11122");
  const ExponentVector e11122 = exponents(2, {{1, 1, 3}, {2, 2, 1}, {1, 2, 3}, {2, 1, 3}});
  cases.push_back({"1^{2m+1}22, m=1", s11122, "q11^3 q22 sigma12^3 = 1", 1, monomial_stratum(s11122, 2, e11122, 1, 0)});
  cases.push_back(
      {"1^{2m+1}22, m=1", s11122, "q11^3 q22 sigma12^3 = -1", 0, monomial_stratum(s11122, 2, e11122, 2, 1)});
  cases.push_back({"1^{2m}22, m=1", s1122, "q11 q22 sigma12^2 = -1", 1, monomial_stratum(s1122, 2, e1122, 2, 1)});

  std::vector<AppendixRow> rows;
  for (const auto& c : cases) {
    const OrbitReport orbits = chi_counts(c.q, c.env);
    AppendixRow row{c.family, c.q.to_string(), c.condition, c.expected, 0, orbits.chi, {}};
    for (Letter j = 1; j <= c.q.k(); ++j)
      row.chi_j.push_back(orbits.chi_of(j));
    row.computed = static_cast<long>(kernel(c.q, c.env, opts).dim());
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace qconst
