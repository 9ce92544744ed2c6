#pragma once

#include <string>
#include <vector>

#include "snell/hecke.hpp"
#include "snell/labeling.hpp"
#include "snell/poset.hpp"

namespace snell {

struct LabeledPoset {
  Poset poset;
  EdgeLabeling labeling;
};

// Subset lattice of [n]: 2^n elements named "{...}", cover {S, S+i} labeled i.
LabeledPoset gen_boolean(int n);

// Order ideal lattice J(q) with the cover adding element e labeled ext[e].
// ext must be an order-preserving bijection onto [|q|] (NotALinearExtension).
LabeledPoset gen_ideal_lattice(const Poset& q, const std::vector<int>& ext);

// Set partition of [n]; blocks canonical: each ascending, ordered by
// (size descending, min ascending).
struct SetPartition {
  std::vector<std::vector<int>> blocks;
};

std::string partition_name(const SetPartition& sp);  // "24-1-3" style, n <= 9
bool refines(const SetPartition& finer, const SetPartition& coarser);
bool is_noncrossing(const SetPartition& sp);
std::vector<SetPartition> all_partitions(int n);  // deterministic order

// Partition lattice of [n] under refinement, rank n-1; the cover merging
// blocks B, B' is labeled max(min B, min B') - 1, an S_{n-1} labeling.
LabeledPoset gen_partition_lattice(int n);

// Noncrossing partition lattice, the subposet of the above on noncrossing
// partitions, same labeling rule.
LabeledPoset gen_noncrossing(int n);

// Rank-3 poset a < {b,c} < {d,e} < f with b,c each covered by d,e (a bowtie, so
// not a lattice and not snellable), together with the hand-built chain action
// that satisfies all four relations and is good.
struct ActionFixture {
  Poset poset;
  ChainAction action;
};

ActionFixture fixture_bowtie_action();

// The subset lattice of [4] with the single cover {3,4} < {2,3,4} removed:
// graded and bowtie-free but not a lattice, and still snellable via the
// inherited labels.
LabeledPoset fixture_b4_minus_edge();

}  // namespace snell
