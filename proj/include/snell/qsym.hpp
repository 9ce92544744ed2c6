#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "snell/hecke.hpp"
#include "snell/poset.hpp"

namespace snell {

// Subsets S of [n-1] are bitmasks: bit i-1 set iff i is in S.
std::string subset_to_string(uint32_t mask, int n);

// Flag f-vector: alpha[S] counts chains 0 < t_1 < ... < t_k < 1 whose rank set
// is exactly S.  Indexed by mask, size 2^(n-1) (size 1 when n <= 1).
std::vector<long long> flag_f(const Poset& p, const GradingCertificate& cert);

// Flag h-vector by inclusion-exclusion: beta[S] = sum_{T<=S} (-1)^|S\T| alpha[T].
std::vector<long long> flag_h(const std::vector<long long>& alpha);

// Inverse transform (sanity partner of flag_h): alpha[S] = sum_{T<=S} beta[T].
std::vector<long long> alpha_from_beta(const std::vector<long long>& beta);

// A quasisymmetric function of degree n written in the fundamental basis:
// coeffs[S] is the coefficient of the fundamental element L_{S,n}.
struct QSymL {
  int n = 0;
  std::vector<long long> coeffs;  // size 2^(n-1), or 1 when n <= 1

  friend bool operator==(const QSymL& a, const QSymL& b) {
    return a.n == b.n && a.coeffs == b.coeffs;
  }
  friend bool operator!=(const QSymL& a, const QSymL& b) { return !(a == b); }
};

std::string to_string(const QSymL& f);

// Ehrenborg's poset quasisymmetric function: coefficients are the flag
// h-vector, F_P = sum_S beta(S) L_{S,n}.
QSymL f_p(const Poset& p, const GradingCertificate& cert);

// Polynomial in x_1..x_vars with integer coefficients; exponent vectors are
// the keys (length = vars).
struct Polynomial {
  int vars = 0;
  std::map<std::vector<int>, long long> terms;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars == b.vars && a.terms == b.terms;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
};

std::string to_string(const Polynomial& poly);

// Expansion of one fundamental element L_{S,n} in m variables: the sum of
// x_{i_1}...x_{i_n} over weakly increasing sequences i_1 <= ... <= i_n in [m]
// rising strictly at each position of S.
Polynomial fundamental_expansion(int n, uint32_t s_mask, int m);

// Expansion of f in m >= 1 variables.
Polynomial evaluate(const QSymL& f, int m);

// Direct evaluation of F_P from its definition: sum over multichains
// 0 = t_0 <= t_1 <= ... <= t_k = 1 (k <= m, top occurring exactly once) of
// prod_j x_j^{rank(t_j) - rank(t_{j-1})}.  Oracle partner of evaluate(f_p(..)).
Polynomial f_p_multichain(const Poset& p, const GradingCertificate& cert, int m);

// The involution L_{S,n} -> L_{complement(S),n}, extended linearly.
QSymL omega_involution(const QSymL& f);

// Series of the action's one-dimensional classes: each maximal chain m
// contributes L_{S,n} where S is the set of operators fixing m, i.e. the
// complement of descents(m).  For an action built from a labeling this
// equals omega_involution(f_p(..)).
QSymL ch_of_action(const ChainAction& a);

// Whether f, expanded in m variables, is a symmetric polynomial.
// Requires m >= n (IndexOutOfRange otherwise).
bool is_symmetric(const QSymL& f, int m);

}  // namespace snell
