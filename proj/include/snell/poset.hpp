#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "snell/bitset.hpp"
#include "snell/errors.hpp"

namespace snell {

// A saturated chain, bottom to top, as element indices.
using Chain = std::vector<int>;

// Finite poset given by its Hasse diagram.  Elements are dense ints internally;
// string names appear only at the construction/serialization boundary.  The
// order relation is precomputed as up/down-set bitsets, so leq() is O(1).
class Poset {
 public:
  // Builds from named cover pairs (lower, upper).  Cover pairs implied by
  // transitivity of the others are dropped (recorded in warnings()), duplicates
  // likewise.  Throws DuplicateElement / UnknownElement / CycleDetected.
  static Poset from_covers(std::vector<std::string> elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  // Same, with covers as indices into `elements`.
  static Poset from_cover_indices(std::vector<std::string> elements,
                                  const std::vector<std::pair<int, int>>& covers);

  int size() const { return (int)names_.size(); }

  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(const std::string& name) const;

  bool leq(int a, int b) const { return upset_[a].test(b); }  // a <= b
  bool less(int a, int b) const { return a != b && leq(a, b); }

  // Cover pairs (lower, upper), sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  int cover_index(int lower, int upper) const;  // -1 if not a cover
  bool is_cover(int lower, int upper) const { return cover_index(lower, upper) >= 0; }

  const std::vector<int>& upper_covers(int v) const { return up_[v]; }
  const std::vector<int>& lower_covers(int v) const { return down_[v]; }

  const Bitset& upset(int v) const { return upset_[v]; }      // {x : v <= x}
  const Bitset& downset(int v) const { return downset_[v]; }  // {x : x <= v}

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  // Input covers dropped during construction, human-readable.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<Bitset> upset_, downset_;
  std::vector<std::string> warnings_;
};

// Same named elements, same named cover relation (and so the same order).
bool same_poset(const Poset& a, const Poset& b);

// Certificate that a poset is bounded and graded: unique bottom/top and a rank
// function with rank(bottom)=0, rank(top)=n, rank(+1) across every cover.  All
// maximal chains then have length exactly n.
struct GradingCertificate {
  int n = 0;  // rank of the top element
  int bottom = -1;
  int top = -1;
  std::vector<int> rank;

  std::vector<int> elements_of_rank(int r) const {
    std::vector<int> out;
    for (int v = 0; v < (int)rank.size(); ++v)
      if (rank[v] == r) out.push_back(v);
    return out;
  }
};

// Throws NotBounded (two minimal or two maximal elements named in the message)
// or NotGraded (witness: two maximal chains of different lengths).
GradingCertificate grade(const Poset& p);

// All saturated chains from `lower` to `upper`, inclusive, in lexicographic
// order by element index.  Throws InvalidInterval unless lower <= upper.
std::vector<Chain> maximal_chains(const Poset& p, int lower, int upper);

// All maximal chains between the unique bottom and top.
std::vector<Chain> maximal_chains(const Poset& p, const GradingCertificate& cert);

// n x n meet/join tables for a lattice.
class MeetJoinTable {
 public:
  MeetJoinTable(int n, std::vector<int> meet, std::vector<int> join)
      : n_(n), meet_(std::move(meet)), join_(std::move(join)) {}
  int size() const { return n_; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }

 private:
  int n_;
  std::vector<int> meet_, join_;
};

// Witness that some pair has no meet (or dually no join): the extremal common
// bounds found instead of a unique one (may be empty if no common bound at all).
struct LatticeFailure {
  bool on_join = false;  // false: meet failed, true: join failed
  int a = -1, b = -1;
  std::vector<int> extremal_bounds;
};

struct LatticeCheck {
  std::optional<MeetJoinTable> table;
  std::optional<LatticeFailure> failure;
  bool ok() const { return table.has_value(); }
};

// Decides whether every pair has a meet and a join; deterministic first witness
// (pairs in index order, meet before join).
LatticeCheck lattice_ops(const Poset& p);

// Witness (a, b, c, d): a != b both cover c != d.  (Such a poset is never a
// lattice: c and d are two maximal lower bounds of {a, b}.)
struct BowtieCheck {
  bool bowtie_free = true;
  std::optional<std::array<int, 4>> witness;
};

BowtieCheck is_bowtie_free(const Poset& p);

struct DistributivityCheck {
  bool distributive = true;
  std::optional<std::array<int, 3>> witness;  // (x, y, z) with x^(yvz) != (x^y)v(x^z)
};

DistributivityCheck is_distributive(const Poset& p, const MeetJoinTable& t);

// Smallest subset containing `seed` closed under meet and join, sorted.
std::vector<int> sublattice_closure(const MeetJoinTable& t, const std::vector<int>& seed);

// Subposet on `elements` (ambient indices) with the restricted order; names are
// kept, covers recomputed.
Poset induced_subposet(const Poset& p, const std::vector<int>& elements);

// The lattice of order ideals (down-closed subsets) of q, ordered by inclusion.
// Elements are named "{a,b,...}" from q's element names in q-index order and
// sorted by (size, then bitmask of q-indices).  For each cover, added_element
// records the q-element whose insertion produces the upper ideal.
struct IdealLattice {
  Poset poset;
  std::vector<uint64_t> ideal_masks;  // per element, bit i = q-element i present
  std::vector<int> added_element;     // per cover index
};

IdealLattice order_ideal_lattice_full(const Poset& q);
Poset order_ideal_lattice(const Poset& q);

}  // namespace snell
