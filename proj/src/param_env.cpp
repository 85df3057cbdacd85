#include "qconst/param_env.hpp"

#include <stdexcept>

namespace qconst {

ParamEnv::ParamEnv(int k, ScalarHeader header, std::vector<Scalar> table)
    : k_(k), header_(std::move(header)), table_(std::move(table))
{
  if (k < 1 || k > kMaxLetters)
    throw std::invalid_argument("k must be in 1..9");
  if (table_.size() != static_cast<std::size_t>(k * k))
    throw std::invalid_argument("parameter table must have k*k entries");
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (q(i, j).is_zero())
        throw std::invalid_argument("parameter q_" + std::to_string(i) + std::to_string(j) + " is zero");
}

ParamEnv ParamEnv::generic(int k)
{
  ScalarHeader header;
  std::vector<Scalar> table;
  for (int i = 0; i < k * k; ++i) {
    header.indeterminates.push_back("t" + std::to_string(i + 1));
    table.push_back(Scalar::var(i));
  }
  return ParamEnv(k, std::move(header), std::move(table));
}

ParamEnv ParamEnv::from_expressions(int k, ScalarHeader header, const std::map<std::pair<int, int>, std::string>& q)
{
  std::vector<Scalar> table;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j) {
      auto it = q.find({i, j});
      if (it == q.end())
        throw std::invalid_argument("missing parameter q_" + std::to_string(i) + "," + std::to_string(j));
      table.push_back(parse_scalar(it->second, header));
    }
  return ParamEnv(k, std::move(header), std::move(table));
}

ParamEnv ParamEnv::pulled_back(const std::vector<Letter>& phi) const
{
  const int kk = static_cast<int>(phi.size());
  std::vector<Scalar> table;
  for (int a = 0; a < kk; ++a)
    for (int b = 0; b < kk; ++b)
      table.push_back(q(phi[a], phi[b]));
  return ParamEnv(kk, header_, std::move(table));
}

ParamEnv ParamEnv::evaluated(const std::vector<Cyclotomic>& point) const
{
  std::vector<Scalar> table;
  for (const auto& s : table_)
    table.emplace_back(s.evaluate(point));
  ScalarHeader h;
  h.conductor = header_.conductor;
  return ParamEnv(k_, std::move(h), std::move(table));
}

} // namespace qconst
