#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snell/labeling.hpp"
#include "snell/perm.hpp"
#include "snell/poset.hpp"

namespace snell {

// A family of operators U_1..U_{n-1} acting on the full set of maximal chains
// of a graded bounded poset, given as a total lookup table.  The intended
// algebra: each U_i is idempotent, only moves a chain at rank i (locality),
// far-apart operators commute, and adjacent ones satisfy the braid relation
// U_i U_{i+1} U_i = U_{i+1} U_i U_{i+1}; verify_hecke() checks all four.
class ChainAction {
 public:
  // `table[i-1][c]` is the index of U_i(chains[c]).  Throws ActionTableInvalid
  // on wrong dimensions or out-of-range entries, UnknownChain if `chains` is
  // not exactly the set of maximal chains of p.
  ChainAction(Poset p, GradingCertificate cert, std::vector<Chain> chains,
              std::vector<std::vector<int>> table);

  const Poset& poset() const { return poset_; }
  const GradingCertificate& grading() const { return cert_; }

  int n() const { return cert_.n; }
  int num_chains() const { return (int)chains_.size(); }
  const std::vector<Chain>& chains() const { return chains_; }
  const Chain& chain(int idx) const { return chains_[idx]; }

  // Index of a chain given as an element sequence; throws UnknownChain.
  int chain_index(const Chain& c) const;

  int apply(int i, int chain_idx) const;  // U_i, i in [1, n-1]

  // U_{w[0]} U_{w[1]} ... U_{w[r-1]} applied right-to-left.
  int apply_word(const Word& w, int chain_idx) const;

  const std::vector<std::vector<int>>& table() const { return table_; }
  std::vector<std::vector<int>>& mutable_table() { return table_; }  // for mutation tests

 private:
  Poset poset_;
  GradingCertificate cert_;
  std::vector<Chain> chains_;
  std::vector<std::vector<int>> table_;
};

// The canonical action attached to a labeling that passes verify_snelling:
// if chain m has no descent at i it is fixed by U_i, otherwise U_i(m) is the
// unique chain agreeing with m outside rank i whose word has no descent at i.
// Throws SnellingInvalid if the labeling fails verification and
// AmbiguousSibling if uniqueness ever fails (impossible for verified input).
ChainAction action_from_snelling(const Poset& p, const GradingCertificate& cert,
                                 const EdgeLabeling& lab);

struct HeckeWitness {
  std::string relation;  // "locality" | "idempotency" | "commutation" | "braid"
  int chain = -1;
  int i = -1, j = -1;
};

struct HeckeVerdict {
  bool ok = true;
  std::optional<HeckeWitness> witness;
};

HeckeVerdict verify_hecke(const ChainAction& a);

// {i : U_i(m) != m} as a bitmask (bit i-1).
uint32_t descent_set_of_chain(const ChainAction& a, int chain_idx);

// The unique chain fixed by every U_i; throws NoSink / MultipleSinks.
int find_sink_chain(const ChainAction& a);

// Greedy word driving chain_idx to the sink: repeatedly apply U_i for the
// smallest (or largest) descent i until no descent remains.  Returned in
// written order (last letter acts first).  Every application moves the chain,
// so the word is restless by construction.  Throws NonTerminating if more than
// num_chains * n steps happen (cannot occur when verify_hecke passes).
Word restless_word(const ChainAction& a, int chain_idx, bool largest_first = false);

// The permutation w with U_w(m) = sink, computed from smallest-descent-first
// words and audited: the largest-descent-first word and every single-step
// alternative U_i(m), i a descent, must give the same permutation.  Throws
// AmbiguousPermutation (carrying two conflicting words) when the audit fails,
// i.e. when the permutation attached to m is not well defined.
Perm omega_of_chain(const ChainAction& a, int chain_idx);

// omega_of_chain for every chain at once (single audit pass).
std::vector<Perm> omega_all(const ChainAction& a);

class AmbiguousPermutationError : public Error {
 public:
  AmbiguousPermutationError(int chain, Word word_a, Word word_b, const Perm& perm_a,
                            const Perm& perm_b);
  int chain;
  Word word_a, word_b;
  std::vector<int> perm_a, perm_b;  // one-line forms
};

// Rank-selected chain counts compared against the action's descent statistics:
// the action is "good" when for every S subset of [n-1] the number of chains
// with descent set inside S equals the flag f-vector entry alpha(S).
struct GoodVerdict {
  bool ok = true;
  uint32_t failing_mask = 0;
  long long alpha = 0;
  long long chain_count = 0;
};

GoodVerdict verify_good(const ChainAction& a);

// Labeling recovery from a good action: label the k-th edge of chain m with
// omega_m(k).  Requires verify_hecke (HeckeViolated) and verify_good
// (NotGoodAction); throws AmbiguousPermutation / EdgeConflict when chains
// disagree, SnellingInvalid if the assembled labeling fails verification.
EdgeLabeling reconstruct_labeling(const ChainAction& a);

// Number of chains fixed by U_{w[0]}...U_{w[r-1]} (the trace of the 0/1 action
// matrix of the word).
long long character_value(const ChainAction& a, const Word& w);

// Value at U_w of the length-n irreducible-character attached to S: 1 if every
// letter of w lies in S, else 0.  Letters validated against [1, n-1].
int irreducible_character(uint32_t s_mask, const Word& w, int n);

}  // namespace snell
