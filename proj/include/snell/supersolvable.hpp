#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snell/hecke.hpp"
#include "snell/labeling.hpp"
#include "snell/perm.hpp"
#include "snell/poset.hpp"

namespace snell {

// Certificate: a maximal chain that generates a distributive sublattice with
// every other maximal chain.
struct MChainWitness {
  Chain other_chain;               // the chain whose closure fails
  std::array<int, 3> triple{};     // distributivity counterexample inside it
};

struct SupersolvableCheck {
  bool supersolvable = false;
  Chain m_chain;                   // valid when supersolvable
  int checked_chains = 0;
  std::optional<MChainWitness> witness;  // failure detail for the first candidate
};

// Tests every maximal chain as a candidate, in lexicographic chain order, and
// returns the first that works.  Throws NotALattice (with the offending pair)
// when the poset is not a lattice.
SupersolvableCheck is_supersolvable_direct(const Poset& p, const GradingCertificate& cert);

// Closure of one maximal chain under all U_i of a labeling-derived action,
// with the per-element label sets used by the comparison map below.
struct UClosure {
  std::vector<int> chain_indices;       // orbit of chain_idx under the U_i, sorted
  std::vector<int> elements;            // union of their elements, ambient indices, sorted
  std::map<int, uint32_t> label_sets;   // element -> labels below it (bit v-1 = value v)
  Poset induced;                        // subposet on `elements`
};

UClosure u_closure(const ChainAction& a, const EdgeLabeling& lab, int chain_idx);

// The poset on [n] with i <= j iff i = j or (i, j) is *not* an inversion of w
// and i < j; its order ideals model the closure above.
Poset perm_order_poset(const Perm& w);

struct IsoVerdict {
  bool ok = true;
  std::string detail;
};

// Checks that u -> label_sets[u] is an order isomorphism from the closure's
// elements onto the order ideals of perm_order_poset(w).
IsoVerdict verify_closure_isomorphism(const UClosure& c, const Perm& w);

// Checks that the closure's element set equals the meet/join closure of
// chain(chain_idx) together with the sink chain, and is itself closed under
// meet and join (a sublattice).
IsoVerdict verify_sublattice_equality(const Poset& p, const MeetJoinTable& t,
                                      const ChainAction& a, const EdgeLabeling& lab,
                                      int chain_idx);

// Supersolvability via the labeling search: a graded bounded lattice is
// supersolvable iff find_snelling succeeds.  Throws NotALattice first.
bool is_supersolvable_via_snelling(const Poset& p, const GradingCertificate& cert);

}  // namespace snell
