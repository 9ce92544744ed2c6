#pragma once

#include <vector>

#include "snell/poset.hpp"

namespace snell::testsupport {

// Every bounded graded poset with at most max_elements elements: a bottom,
// non-empty rank layers, a top, and a cover relation between adjacent layers
// in which no element is skipped (each lower element has an upper cover and
// vice versa).  Every bounded graded poset is isomorphic to at least one
// member (layer-by-layer, covers only join adjacent ranks); members are
// pairwise distinct as labeled structures.  Includes the singleton and the
// 2-chain.  Deterministic order: element count, then layer sizes, then
// relation bitmasks.
std::vector<Poset> graded_bounded_corpus(int max_elements);

}  // namespace snell::testsupport
