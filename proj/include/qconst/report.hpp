#pragma once

#include "qconst/constants.hpp"
#include "qconst/orbits.hpp"
#include "qconst/param_env.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qconst {

using Json = nlohmann::ordered_json;

/// Malformed problem input (bad JSON, missing or inconsistent fields).
class SpecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Mode { Generic, Explicit };

const char* to_string(Mode m);
/// "generic" or "explicit"; SpecError otherwise.
Mode parse_mode(std::string_view text);

struct ProblemSpec {
  int k = 0;
  std::vector<int> multiplicities;
  int conductor = 1;
  std::vector<std::string> indeterminates;
  /// "i,j" -> expression, keyed by (i, j).
  std::map<std::pair<int, int>, std::string> q;
  Mode mode = Mode::Explicit;
  /// Batch; empty means the single signature given by the multiplicities.
  std::vector<Signature> signatures;
};

/// Reads a ProblemSpec document. Without a "mode" field the mode is generic
/// when "q" is absent and explicit otherwise.
ProblemSpec parse_problem_spec(std::string_view json_text);

/// Explicit mode needs all k^2 entries; generic mode fills each missing entry
/// with a fresh indeterminate named qij. Expression errors become SpecError.
ParamEnv build_env(const ProblemSpec& spec);

std::vector<Signature> spec_signatures(const ProblemSpec& spec);

/// Orbits of Q and of every Q_j with cocycle products, chi and chi_j.
Json orbits_json(const OrbitReport& report, const ParamEnv& env);

/// {word: coefficient} for every term.
Json polynomial_json(const Polynomial& p, const ParamEnv& env);

/// Full pipeline for one signature: orbits, stipulation, kernel, constants
/// inside each span of X^{j ...}, membership certificates and the dimension
/// formula. Throws CrossCheckError when the formula or a span disagrees with
/// the kernel while the stipulation holds.
Json constants_json(const Signature& q, const ParamEnv& env, const SampleOptions& opts = {});

/// Plain-text rendering of a report object, one line per field.
std::string render_text(const Json& report);

struct AppendixRow {
  std::string family;
  std::string signature;
  std::string condition;
  long expected = 0;
  long computed = 0;
  int chi = 0;
  std::vector<int> chi_j;
  bool matches() const { return expected == computed; }
};

/// The appendix families at desk-scale instances with their published
/// dimensions, recomputed from the kernel.
std::vector<AppendixRow> run_appendix(const SampleOptions& opts = {});

} // namespace qconst
