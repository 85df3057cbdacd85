#include "qconst/properties.hpp"
#include "qconst/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace qconst;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitCrossCheck = 3;

struct Options {
  std::string spec_path;
  std::uint64_t seed = kDefaultSeed;
  std::string json_path;
  std::string mode;
  int max_n = 7;
  int trials = 1000;
  bool corrupt_bracket = false;
};

std::string read_input(const std::string& path)
{
  if (path.empty() || path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  std::ifstream in(path);
  if (!in)
    throw SpecError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ProblemSpec load_spec(const Options& o)
{
  ProblemSpec spec = parse_problem_spec(read_input(o.spec_path));
  if (!o.mode.empty())
    spec.mode = parse_mode(o.mode);
  for (const auto& q : spec.signatures)
    if (q.n() > o.max_n)
      throw SpecError("signature " + q.to_string() + " has n = " + std::to_string(q.n()) + " > --max-n " +
                      std::to_string(o.max_n));
  return spec;
}

void write_json(const Options& o, const Json& doc)
{
  if (o.json_path.empty())
    return;
  std::ofstream out(o.json_path);
  if (!out)
    throw SpecError("cannot write " + o.json_path);
  out << doc.dump(2) << "\n";
}

/// One report per signature, computed concurrently and kept in input order.
template <class F>
Json batch(const ProblemSpec& spec, F make_report)
{
  std::vector<std::future<Json>> jobs;
  for (const auto& q : spec.signatures)
    jobs.push_back(std::async(std::launch::async, make_report, q));
  Json out = Json::array();
  for (auto& job : jobs)
    out.push_back(job.get());
  return out;
}

int emit(const Options& o, const Json& reports)
{
  for (std::size_t r = 0; r < reports.size(); ++r) {
    if (r > 0)
      std::cout << "\n";
    std::cout << render_text(reports[r]);
  }
  write_json(o, reports.size() == 1 ? reports[0] : reports);
  return 0;
}

int cmd_orbits(const Options& o)
{
  const ProblemSpec spec = load_spec(o);
  const ParamEnv env = build_env(spec);
  return emit(o, batch(spec, [&](const Signature& q) { return orbits_json(chi_counts(q, env), env); }));
}

int cmd_constants(const Options& o)
{
  const ProblemSpec spec = load_spec(o);
  const ParamEnv env = build_env(spec);
  SampleOptions so;
  so.seed = o.seed;
  return emit(o, batch(spec, [&](const Signature& q) { return constants_json(q, env, so); }));
}

int cmd_verify(const Options& o)
{
  PropertyOptions po;
  po.seed = o.seed;
  po.trials = o.trials;
  po.corrupt_bracket = o.corrupt_bracket;
  if (!o.spec_path.empty())
    load_spec(o);
  Json doc = Json::array();
  bool ok = true;
  std::cout << "seed " << o.seed << ", " << o.trials << " trials per suite\n";
  for (const auto& r : run_all_properties(po)) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.failures << "/" << r.trials
              << " failed)\n";
    if (!r.passed())
      std::cout << "  smallest counterexample: " << r.counterexample << "\n";
    ok = ok && r.passed();
    doc.push_back(Json{{"suite", r.name}, {"trials", r.trials}, {"failures", r.failures},
                       {"counterexample", r.counterexample}});
  }
  write_json(o, doc);
  return ok ? 0 : kExitFailure;
}

int cmd_appendix(const Options& o)
{
  SampleOptions so;
  so.seed = o.seed;
  Json doc = Json::array();
  bool ok = true;
  std::cout << "family               Q       condition                           expected computed chi chi_j\n";
  for (const auto& row : run_appendix(so)) {
    std::string chi_j;
    for (int c : row.chi_j)
      chi_j += (chi_j.empty() ? "" : ",") + std::to_string(c);
    std::ostringstream line;
    line << row.family;
    line << std::string(row.family.size() < 21 ? 21 - row.family.size() : 1, ' ') << row.signature;
    line << std::string(row.signature.size() < 8 ? 8 - row.signature.size() : 1, ' ') << row.condition;
    line << std::string(row.condition.size() < 36 ? 36 - row.condition.size() : 1, ' ') << row.expected
         << "        " << row.computed << "        " << row.chi << "   " << chi_j
         << (row.matches() ? "" : "   MISMATCH");
    std::cout << line.str() << "\n";
    ok = ok && row.matches();
    doc.push_back(Json{{"family", row.family},
                       {"signature", row.signature},
                       {"condition", row.condition},
                       {"expected", row.expected},
                       {"computed", row.computed},
                       {"chi", row.chi},
                       {"chi_j", row.chi_j}});
  }
  write_json(o, doc);
  return ok ? 0 : kExitFailure;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Constants of free q-differential algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--spec", o.spec_path, "Problem spec JSON (stdin when omitted)");
  app.add_option("--seed", o.seed, "Seed for every randomized step");
  app.add_option("--json", o.json_path, "Write the report as JSON");
  app.add_option("--mode", o.mode, "Override the mode given in the input")->check(CLI::IsMember({"generic", "explicit"}));
  app.add_option("--max-n", o.max_n, "Refuse signatures longer than this")->capture_default_str();
  app.add_option("--trials", o.trials, "Cases per property suite (verify)")->capture_default_str();
  app.add_flag("--corrupt-bracket", o.corrupt_bracket, "Test hook: flip the bracket orientation")->group("");

  auto* orbits = app.add_subcommand("orbits", "Orbit table, cocycle products, chi and chi_j");
  auto* constants = app.add_subcommand("constants", "Constants with certificates and the dimension formula");
  auto* verify = app.add_subcommand("verify", "Randomized identity suites");
  auto* appendix = app.add_subcommand("appendix", "Recompute the appendix examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (orbits->parsed())
      return cmd_orbits(o);
    if (constants->parsed())
      return cmd_constants(o);
    if (verify->parsed())
      return cmd_verify(o);
    if (appendix->parsed())
      return cmd_appendix(o);
  } catch (const SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check mismatch: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCrossCheck;
  }
  return kExitInput;
}
