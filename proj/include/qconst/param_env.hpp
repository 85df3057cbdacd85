#pragma once

#include "qconst/parse.hpp"
#include "qconst/scalar.hpp"
#include "qconst/word.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qconst {

/// The parameter function (i, j) -> q_ij for letters 1..k, together with the
/// field header (conductor and indeterminates) every value lives in.
class ParamEnv {
public:
  /// Throws std::invalid_argument if the table is not k x k or has a zero entry.
  ParamEnv(int k, ScalarHeader header, std::vector<Scalar> table);

  /// One fresh indeterminate per ordered pair: q_ij = t_{(i-1)k+j}.
  static ParamEnv generic(int k);
  /// Parses every "i,j" entry of an expression table against the header.
  static ParamEnv from_expressions(int k, ScalarHeader header, const std::map<std::pair<int, int>, std::string>& q);

  int k() const { return k_; }
  const ScalarHeader& header() const { return header_; }
  int conductor() const { return header_.conductor; }
  const std::vector<std::string>& names() const { return header_.indeterminates; }
  int num_indeterminates() const { return static_cast<int>(header_.indeterminates.size()); }

  const Scalar& q(Letter i, Letter j) const { return table_[(i - 1) * k_ + (j - 1)]; }

  /// Parameters pulled back along a letter map: q'_{ab} = q_{phi(a) phi(b)}.
  /// phi[a-1] is the image of letter a.
  ParamEnv pulled_back(const std::vector<Letter>& phi) const;
  /// Same header and k with a replacement table.
  ParamEnv with_values(std::vector<Scalar> table) const { return ParamEnv(k_, header_, std::move(table)); }
  /// Every q_ij evaluated at a point of the indeterminates (conductor kept).
  ParamEnv evaluated(const std::vector<Cyclotomic>& point) const;

  std::string to_string(Letter i, Letter j) const { return q(i, j).to_string(names()); }

private:
  int k_;
  ScalarHeader header_;
  std::vector<Scalar> table_;
};

} // namespace qconst
