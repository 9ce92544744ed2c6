#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "snell/generators.hpp"
#include "snell/poset.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace snell;
using namespace snell::testsupport;

namespace {

Poset two_chain() { return Poset::from_covers({"a", "b"}, {{"a", "b"}}); }

Poset hexagon() {
  return Poset::from_covers({"0", "a", "b", "c", "d", "1"},
                            {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "d"},
                             {"d", "1"}});
}

Poset diamond_m3() {
  return Poset::from_covers({"0", "a", "b", "c", "1"},
                            {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"},
                             {"c", "1"}});
}

}  // namespace

TEST_CASE("construction basics") {
  Poset p = two_chain();
  CHECK(p.size() == 2);
  CHECK(p.covers().size() == 1);
  CHECK(p.leq(0, 1));
  CHECK(!p.leq(1, 0));

  Poset single = Poset::from_covers({"a"}, {});
  CHECK(single.size() == 1);
  CHECK(single.leq(0, 0));

  Poset b3 = gen_boolean(3).poset;
  CHECK(b3.size() == 8);
  CHECK(b3.covers().size() == 12);
}

TEST_CASE("construction errors") {
  CHECK(thrown_kind([] { Poset::from_covers({"a", "a"}, {}); }) == ErrorKind::DuplicateElement);
  CHECK(thrown_kind([] { Poset::from_covers({"a"}, {{"a", "z"}}); }) ==
        ErrorKind::UnknownElement);
  CHECK(thrown_kind([] {
          Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}});
        }) == ErrorKind::CycleDetected);
  CHECK(thrown_kind([] { Poset::from_covers({"a"}, {{"a", "a"}}); }) == ErrorKind::CycleDetected);
}

TEST_CASE("transitively implied covers are dropped with a warning") {
  Poset p = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p.covers().size() == 2);
  CHECK(p.warnings().size() == 1);
  CHECK(p.leq(*p.index_of("a"), *p.index_of("c")));

  // duplicate pairs likewise
  Poset q = Poset::from_covers({"a", "b"}, {{"a", "b"}, {"a", "b"}});
  CHECK(q.covers().size() == 1);
  CHECK(q.warnings().size() == 1);
}

TEST_CASE("grade on the subset lattice") {
  auto [p, lab] = gen_boolean(3);
  GradingCertificate cert = grade(p);
  CHECK(cert.n == 3);
  for (int v = 0; v < p.size(); ++v) {
    // rank equals set cardinality: count ',' separators in "{a,b,...}"
    const std::string& name = p.name(v);
    int card = name == "{}" ? 0 : 1 + (int)std::count(name.begin(), name.end(), ',');
    CHECK(cert.rank[v] == card);
  }
  CHECK(p.name(cert.bottom) == "{}");
  CHECK(p.name(cert.top) == "{1,2,3}");

  // grading is a pure function of the poset: repeated calls agree
  CHECK(grade(p).rank == cert.rank);
}

TEST_CASE("grade rejects unbounded and ungraded posets") {
  Poset two_tops = Poset::from_covers({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  CHECK(thrown_kind([&] { grade(two_tops); }) == ErrorKind::NotBounded);

  Poset skewed = Poset::from_covers(
      {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
  CHECK(thrown_kind([&] { grade(skewed); }) == ErrorKind::NotGraded);
}

TEST_CASE("maximal chain enumeration") {
  auto [p, lab] = gen_boolean(3);
  GradingCertificate cert = grade(p);
  auto chains = maximal_chains(p, cert);
  CHECK(chains.size() == 6);
  for (const auto& c : chains) CHECK(c.size() == 4);
  CHECK(std::is_sorted(chains.begin(), chains.end()));  // deterministic lex order

  auto degenerate = maximal_chains(p, 2, 2);
  REQUIRE(degenerate.size() == 1);
  CHECK(degenerate[0] == Chain{2});

  int x = *p.index_of("{1}"), y = *p.index_of("{2}");
  CHECK(thrown_kind([&] { maximal_chains(p, x, y); }) == ErrorKind::InvalidInterval);
}

TEST_CASE("chain counts match the rank-layer dynamic program") {
  auto check_poset = [](const Poset& p) {
    GradingCertificate cert = grade(p);
    CHECK((long long)maximal_chains(p, cert).size() == chain_count_dp(p, cert));
  };
  check_poset(gen_boolean(4).poset);         // 24 chains
  check_poset(gen_partition_lattice(4).poset);
  check_poset(gen_noncrossing(4).poset);
  check_poset(fixture_b4_minus_edge().poset);
  for (const Poset& p : graded_bounded_corpus(6)) check_poset(p);

  GradingCertificate b4 = grade(gen_boolean(4).poset);
  CHECK(chain_count_dp(gen_boolean(4).poset, b4) == 24);
}

TEST_CASE("lattice operations on the subset lattice") {
  auto [p, lab] = gen_boolean(3);
  LatticeCheck lc = lattice_ops(p);
  REQUIRE(lc.ok());
  // meet = intersection, join = union; element names encode the subsets, and
  // the generator orders elements by (cardinality, bitmask)
  auto mask_of = [&](int v) {
    uint32_t m = 0;
    for (char ch : p.name(v))
      if (ch >= '1' && ch <= '9') m |= 1u << (ch - '1');
    return m;
  };
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b) {
      CHECK(mask_of(lc.table->meet(a, b)) == (mask_of(a) & mask_of(b)));
      CHECK(mask_of(lc.table->join(a, b)) == (mask_of(a) | mask_of(b)));
    }
}

TEST_CASE("lattice failure witness on the modified subset poset") {
  auto [p, lab] = fixture_b4_minus_edge();
  LatticeCheck lc = lattice_ops(p);
  REQUIRE(!lc.ok());
  const LatticeFailure& f = *lc.failure;
  // the dropped cover {3,4} < {2,3,4} leaves {3}, {4} with two minimal upper
  // bounds, and that's the first pair in scan order
  CHECK(f.on_join);
  std::set<std::string> pair{p.name(f.a), p.name(f.b)};
  CHECK(pair == std::set<std::string>{"{3}", "{4}"});
  std::set<std::string> bounds;
  for (int v : f.extremal_bounds) bounds.insert(p.name(v));
  CHECK(bounds == std::set<std::string>{"{3,4}", "{2,3,4}"});

  // the meet side breaks too: {1,3,4} and {2,3,4} have maximal common lower
  // bounds {3} and {4}
  int a = *p.index_of("{1,3,4}"), b = *p.index_of("{2,3,4}");
  std::set<std::string> maximal_lower;
  for (int v = 0; v < p.size(); ++v) {
    if (!p.leq(v, a) || !p.leq(v, b)) continue;
    bool top_of_bounds = true;
    for (int w = 0; w < p.size(); ++w)
      if (w != v && p.leq(w, a) && p.leq(w, b) && p.leq(v, w)) top_of_bounds = false;
    if (top_of_bounds) maximal_lower.insert(p.name(v));
  }
  CHECK(maximal_lower == std::set<std::string>{"{3}", "{4}"});
}

TEST_CASE("lattice algebra laws hold exhaustively on small lattices") {
  auto laws = [](const Poset& p) {
    LatticeCheck lc = lattice_ops(p);
    REQUIRE(lc.ok());
    const MeetJoinTable& t = *lc.table;
    int n = p.size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(t.meet(a, b) == t.meet(b, a));
        CHECK(t.join(a, b) == t.join(b, a));
        CHECK(t.meet(a, t.join(a, b)) == a);  // absorption
        CHECK(t.join(a, t.meet(a, b)) == a);
        for (int c = 0; c < n; ++c) {
          CHECK(t.meet(a, t.meet(b, c)) == t.meet(t.meet(a, b), c));
          CHECK(t.join(a, t.join(b, c)) == t.join(t.join(a, b), c));
        }
      }
  };
  laws(two_chain());
  laws(diamond_m3());
  laws(hexagon());
  laws(gen_boolean(3).poset);
  laws(gen_partition_lattice(3).poset);
  laws(gen_noncrossing(4).poset);
}

TEST_CASE("bowtie detection") {
  for (int n = 1; n <= 4; ++n) CHECK(is_bowtie_free(gen_boolean(n).poset).bowtie_free);

  ActionFixture f = fixture_bowtie_action();
  BowtieCheck bc = is_bowtie_free(f.poset);
  REQUIRE(!bc.bowtie_free);
  auto [a, b, c, d] = *bc.witness;
  std::set<std::string> uppers{f.poset.name(a), f.poset.name(b)};
  std::set<std::string> lowers{f.poset.name(c), f.poset.name(d)};
  CHECK(uppers == std::set<std::string>{"d", "e"});
  CHECK(lowers == std::set<std::string>{"b", "c"});

  Poset chain = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(is_bowtie_free(chain).bowtie_free);
}

TEST_CASE("distributivity") {
  auto check_distributive = [](const Poset& p) {
    LatticeCheck lc = lattice_ops(p);
    REQUIRE(lc.ok());
    return is_distributive(p, *lc.table);
  };
  CHECK(check_distributive(gen_boolean(3).poset).distributive);

  DistributivityCheck dm3 = check_distributive(diamond_m3());
  REQUIRE(!dm3.distributive);
  CHECK(dm3.witness.has_value());

  CHECK(!check_distributive(gen_partition_lattice(3).poset).distributive);
}

TEST_CASE("sublattice closure") {
  auto [p, lab] = gen_boolean(3);
  LatticeCheck lc = lattice_ops(p);
  REQUIRE(lc.ok());

  // a chain is already closed
  Chain c = maximal_chains(p, grade(p))[0];
  CHECK(sublattice_closure(*lc.table, c) == c);

  // two incomparable atoms force their meet and join
  std::vector<int> seed{*p.index_of("{1}"), *p.index_of("{2}")};
  auto closed = sublattice_closure(*lc.table, seed);
  std::set<std::string> names;
  for (int v : closed) names.insert(p.name(v));
  CHECK(names == std::set<std::string>{"{1}", "{2}", "{}", "{1,2}"});
}

TEST_CASE("order ideal lattice of an antichain is the subset lattice") {
  Poset antichain = Poset::from_covers({"x", "y", "z"}, {});
  IdealLattice j = order_ideal_lattice_full(antichain);
  CHECK(j.poset.size() == 8);
  CHECK(j.poset.covers().size() == 12);
  GradingCertificate cert = grade(j.poset);
  CHECK(cert.n == 3);
  LatticeCheck lc = lattice_ops(j.poset);
  REQUIRE(lc.ok());
  CHECK(is_distributive(j.poset, *lc.table).distributive);

  // covers add exactly the recorded element
  for (size_t e = 0; e < j.poset.covers().size(); ++e) {
    auto [lo, hi] = j.poset.covers()[e];
    uint64_t diff = j.ideal_masks[hi] ^ j.ideal_masks[lo];
    CHECK(diff == (uint64_t{1} << j.added_element[e]));
    CHECK((j.ideal_masks[lo] & diff) == 0);
  }
}

TEST_CASE("order ideal lattice of a chain is a chain") {
  Poset q = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  Poset j = order_ideal_lattice(q);
  CHECK(j.size() == 4);
  CHECK(j.covers().size() == 3);
  CHECK(maximal_chains(j, grade(j)).size() == 1);
}

TEST_CASE("order ideal lattices are distributive lattices of rank |Q|") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 1 + (int)(rng() % 6);
    Poset q = random_poset(rng, k, 0.4);
    Poset j = order_ideal_lattice(q);
    GradingCertificate cert = grade(j);
    CHECK(cert.n == k);
    LatticeCheck lc = lattice_ops(j);
    REQUIRE(lc.ok());
    CHECK(is_distributive(j, *lc.table).distributive);
  }
}

TEST_CASE("induced subposet keeps the restricted order") {
  auto [p, lab] = gen_boolean(3);
  std::vector<int> keep{*p.index_of("{}"), *p.index_of("{1}"), *p.index_of("{1,2}"),
                        *p.index_of("{2,3}"), *p.index_of("{1,2,3}")};
  std::sort(keep.begin(), keep.end());
  Poset sub = induced_subposet(p, keep);
  CHECK(sub.size() == 5);
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j) {
      int a = *sub.index_of(p.name(keep[i]));
      int b = *sub.index_of(p.name(keep[j]));
      CHECK(sub.leq(a, b) == p.leq(keep[i], keep[j]));
    }
  // {1} < {2,3} fails in the ambient order, so the induced cover set contains
  // {} < {2,3} directly
  CHECK(sub.is_cover(*sub.index_of("{}"), *sub.index_of("{2,3}")));
}

TEST_CASE("same_poset compares named structure") {
  CHECK(same_poset(gen_boolean(3).poset, gen_boolean(3).poset));
  CHECK(!same_poset(gen_boolean(3).poset, gen_boolean(2).poset));
  Poset a = Poset::from_covers({"x", "y"}, {{"x", "y"}});
  Poset b = Poset::from_covers({"y", "x"}, {{"x", "y"}});
  CHECK(same_poset(a, b));  // element listing order is irrelevant
}

TEST_CASE("corpus structure sanity") {
  auto corpus = graded_bounded_corpus(6);
  // golden regression count for the enumeration itself: 1 (singleton)
  // + 1 (two-chain) + 1 + 2 + 4 + 14 posets with 1..4 middle elements
  CHECK(corpus.size() == 23);
  for (const Poset& p : corpus) {
    GradingCertificate cert = grade(p);  // never throws for corpus members
    CHECK(p.size() <= 6);
    CHECK(cert.n >= 0);
  }
  // every member is distinct from every other as a labeled structure
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i + 1; j < corpus.size(); ++j)
      CHECK(!same_poset(corpus[i], corpus[j]));
}
