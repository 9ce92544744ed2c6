#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snell/perm.hpp"
#include "snell/poset.hpp"

namespace snell {

// An integer label per cover edge, aligned with Poset::covers().  May be
// partial while being built; label() throws UnlabeledEdge on missing entries.
class EdgeLabeling {
 public:
  static constexpr int kUnlabeled = INT32_MIN;

  EdgeLabeling() = default;
  explicit EdgeLabeling(const Poset& p) : labels_(p.covers().size(), kUnlabeled) {}
  EdgeLabeling(const Poset& p, std::vector<int> labels_by_cover);

  int size() const { return (int)labels_.size(); }
  bool has_label(int cover) const { return labels_[cover] != kUnlabeled; }
  bool total() const;

  int label(int cover) const;
  int label(const Poset& p, int lower, int upper) const;

  void set_label(int cover, int value) { labels_[cover] = value; }

  const std::vector<int>& raw() const { return labels_; }

  friend bool operator==(const EdgeLabeling& a, const EdgeLabeling& b) {
    return a.labels_ == b.labels_;
  }
  friend bool operator!=(const EdgeLabeling& a, const EdgeLabeling& b) { return !(a == b); }

 private:
  std::vector<int> labels_;
};

// Edge labels along a saturated chain, bottom to top.
std::vector<int> chain_word(const Poset& p, const EdgeLabeling& lab, const Chain& chain);

// Verdict for the edge-labeling checks.  On failure, `lower`/`upper` identify
// the offending interval and chain_a/chain_b the offending chains (chain_b may
// be empty when a single chain suffices as a witness).
struct LabelVerdict {
  bool ok = true;
  std::string reason;
  int lower = -1, upper = -1;
  Chain chain_a, chain_b;
};

// EL check: every interval [s,t] has exactly one weakly-increasing maximal
// chain, and that chain's word is lexicographically strictly smallest in the
// interval.  Requires a total labeling (UnlabeledEdge otherwise).
LabelVerdict verify_el(const Poset& p, const GradingCertificate& cert, const EdgeLabeling& lab);

// EL check plus: the word of every maximal chain of P is a permutation of [n].
// (Given that, the lexicographic condition cannot fail; it is still checked.)
LabelVerdict verify_snelling(const Poset& p, const GradingCertificate& cert,
                             const EdgeLabeling& lab);

// Exhaustive backtracking search for a labeling passing verify_snelling.
// Deterministic: candidate bottom-to-top chains are tried in lexicographic
// order as the unique increasing chain (its word is forced to 1..n), remaining
// edges are assigned in (rank, cover index) order with values tried ascending.
// Pruning is exact: duplicate labels on a maximal chain, and any completed
// interval with an increasing-chain count != 1, kill a branch.
std::optional<EdgeLabeling> find_snelling(const Poset& p, const GradingCertificate& cert);

// {i : word[i] > word[i+1]} for a word that is a permutation of [n]
// (NotAPermutation otherwise), 1-based positions.
std::vector<int> descent_set_of_word(const std::vector<int>& word);

int inversions_of_word(const std::vector<int>& word);

}  // namespace snell
