#pragma once

#include "qconst/ncpoly.hpp"
#include "qconst/param_env.hpp"

#include <vector>

namespace qconst {

/// prod_r q_{i, u_r}: the factor picked up when a q-derivation in direction i
/// moves past the monomial u (1 for the empty word).
Scalar grading_factor(const Word& u, Letter i, const ParamEnv& env);

/// Commutation factor a(i_1 ... i_p) = q_{i_p i_1} ... q_{i_p i_{p-1}}; a(i) = 1.
Scalar commutation_factor(const Word& w, const ParamEnv& env);

/// b_j(i_2 ... i_p) = q_{j i_p} a(j i_2 ... i_p).
Scalar twisted_factor(Letter j, const Word& w, const ParamEnv& env);

/// q-derivation: for a monomial j_1 ... j_n, the sum over positions p with
/// j_p = i of (prod_{r<p} q_{i j_r}) times the word with position p removed.
Polynomial derive(Letter i, const Polynomial& p, const ParamEnv& env);

/// [u, v]_a = u v - a v u.
Polynomial q_commutator(const Polynomial& u, const Polynomial& v, const Scalar& a);

/// [e_{i_1} ... e_{i_{n-1}}, e_{i_n}]_{a(i)}, the simple commutator of a word.
Polynomial simple_commutator(const Word& w, const ParamEnv& env);

struct IteratedCommutator {
  Word index;
  Polynomial expansion;
};

/// X^{i_1} = e_{i_1}, X^{i_1..i_p} = [X^{i_1..i_{p-1}}, e_{i_p}]_{a(i_1..i_p)}.
IteratedCommutator iterated_X(const Word& index, const ParamEnv& env);

struct YFamily {
  Letter j;
  Word index;
  Polynomial expansion;
  /// b_j(i_2 .. i_p) for p = 3 .. n, in ladder order.
  std::vector<Scalar> factors;
};

/// Y_j^{i_2} = e_{i_2}, Y_j^{i_2..i_p} = [Y_j^{i_2..i_{p-1}}, e_{i_p}]_{b_j(i_2..i_p)},
/// so that d_j X^{j i_2..i_n} = (1 - q_{j i_2} q_{i_2 j}) Y_j^{i_2..i_n}.
YFamily Y_family(Letter j, const Word& index, const ParamEnv& env);

/// u -> [u, e_i]_{a(u,i)} on homogeneous u of positive degree; throws
/// std::invalid_argument on the unit, zero or mixed-signature input.
Polynomial adjoint(const Polynomial& u, Letter i, const ParamEnv& env);

} // namespace qconst
