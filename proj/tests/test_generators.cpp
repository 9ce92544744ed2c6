#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "snell/generators.hpp"
#include "snell/qsym.hpp"
#include "support/oracles.hpp"
#include "support/util.hpp"

using namespace snell;
using namespace snell::testsupport;

namespace {

Chain chain_by_names(const Poset& p, const std::vector<std::string>& names) {
  Chain c;
  for (const auto& s : names) c.push_back(*p.index_of(s));
  return c;
}

SetPartition sp(std::vector<std::vector<int>> blocks) { return SetPartition{std::move(blocks)}; }

}  // namespace

TEST_CASE("subset lattice generator") {
  auto [p1, lab1] = gen_boolean(1);
  CHECK(p1.size() == 2);
  REQUIRE(p1.covers().size() == 1);
  CHECK(lab1.label(0) == 1);
  CHECK(p1.name(0) == "{}");
  CHECK(p1.name(1) == "{1}");

  auto [p3, lab3] = gen_boolean(3);
  auto cert3 = grade(p3);
  CHECK(p3.size() == 8);
  CHECK(cert3.n == 3);
  CHECK(verify_snelling(p3, cert3, lab3).ok);

  auto [p4, lab4] = gen_boolean(4);
  (void)lab4;
  auto cert4 = grade(p4);
  CHECK(p4.size() == 16);
  CHECK(maximal_chains(p4, cert4).size() == 24);
  CHECK(chain_count_dp(p4, cert4) == 24);

  // each cover is labeled by the element it adds
  for (int c = 0; c < (int)p4.covers().size(); ++c) {
    auto [lo, hi] = p4.covers()[c];
    // the names are brace lists; the added element is the set difference
    std::set<char> a(p4.name(lo).begin(), p4.name(lo).end());
    std::vector<char> diff;
    for (char ch : p4.name(hi))
      if (ch >= '1' && ch <= '9' && !a.count(ch)) diff.push_back(ch);
    REQUIRE(diff.size() == 1);
    CHECK(lab4.label(c) == diff[0] - '0');
  }
}

TEST_CASE("the subset lattice is the ideal lattice of an antichain, index for index") {
  for (int n : {2, 3, 4}) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
    Poset antichain = Poset::from_covers(names, {});
    auto [jp, jlab] = gen_ideal_lattice(antichain, [&] {
      std::vector<int> id(n);
      for (int i = 0; i < n; ++i) id[i] = i + 1;
      return id;
    }());
    auto [bp, blab] = gen_boolean(n);
    CHECK(jp.names() == bp.names());
    CHECK(jp.covers() == bp.covers());
    CHECK(jlab == blab);
  }
}

TEST_CASE("ideal lattices of chains are chains") {
  Poset q3 = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  auto [j, lab] = gen_ideal_lattice(q3, {1, 2, 3});
  CHECK(j.size() == 4);
  auto cert = grade(j);
  auto chains = maximal_chains(j, cert);
  REQUIRE(chains.size() == 1);
  CHECK(chain_word(j, lab, chains[0]) == std::vector<int>{1, 2, 3});

  Poset q2 = Poset::from_covers({"a", "b"}, {{"a", "b"}});
  auto [j2, lab2] = gen_ideal_lattice(q2, {1, 2});
  CHECK(j2.size() == 3);
  CHECK(chain_word(j2, lab2, maximal_chains(j2, grade(j2))[0]) == std::vector<int>{1, 2});
}

TEST_CASE("ideal lattice generator validates the value map") {
  Poset q = Poset::from_covers({"a", "b"}, {{"a", "b"}});
  CHECK(thrown_kind([&] { gen_ideal_lattice(q, {1}); }) == ErrorKind::NotALinearExtension);
  CHECK(thrown_kind([&] { gen_ideal_lattice(q, {1, 1}); }) == ErrorKind::NotALinearExtension);
  CHECK(thrown_kind([&] { gen_ideal_lattice(q, {0, 1}); }) == ErrorKind::NotALinearExtension);
  CHECK(thrown_kind([&] { gen_ideal_lattice(q, {2, 1}); }) == ErrorKind::NotALinearExtension);
}

TEST_CASE("ideal lattice of the 2413 word poset") {
  Poset q = Poset::from_covers({"1", "2", "3", "4"}, {{"1", "3"}, {"2", "3"}, {"2", "4"}});
  auto [j, lab] = gen_ideal_lattice(q, {1, 2, 3, 4});
  auto cert = grade(j);
  CHECK(j.size() == 8);
  CHECK(j.covers().size() == 10);
  auto chains = maximal_chains(j, cert);
  CHECK(chains.size() == 5);
  CHECK(verify_snelling(j, cert, lab).ok);

  // flag h-vector counts chains by exact descent set
  auto beta = flag_h(flag_f(j, cert));
  std::vector<long long> by_descents(beta.size(), 0);
  for (const Chain& c : chains) {
    uint32_t mask = 0;
    for (int d : descent_set_of_word(chain_word(j, lab, c))) mask |= 1u << (d - 1);
    ++by_descents[mask];
  }
  CHECK(by_descents == beta);
  CHECK(beta[0] == 1);
}

TEST_CASE("partition utilities") {
  CHECK(partition_name(sp({{2, 4}, {1}, {3}})) == "24-1-3");
  CHECK(partition_name(sp({{1, 2, 3}})) == "123");
  CHECK(refines(sp({{1}, {2}, {3}}), sp({{1, 2, 3}})));
  CHECK(refines(sp({{1, 2}, {3}}), sp({{1, 2, 3}})));
  CHECK(!refines(sp({{1, 2, 3}}), sp({{1, 2}, {3}})));
  CHECK(!refines(sp({{1, 3}, {2}}), sp({{1, 2}, {3}})));
  CHECK(refines(sp({{1, 2}, {3}}), sp({{1, 2}, {3}})));

  CHECK(is_noncrossing(sp({{1, 2}, {3, 4}})));
  CHECK(is_noncrossing(sp({{1, 4}, {2, 3}})));
  CHECK(!is_noncrossing(sp({{1, 3}, {2, 4}})));
  CHECK(is_noncrossing(sp({{1, 2, 3, 4}})));

  CHECK(all_partitions(3).size() == 5);
  CHECK(all_partitions(4).size() == 15);
  int crossing = 0;
  for (const auto& part : all_partitions(4))
    if (!is_noncrossing(part)) ++crossing;
  CHECK(crossing == 1);  // only 13-24
}

TEST_CASE("partition lattice generator") {
  auto [p3, lab3] = gen_partition_lattice(3);
  auto cert3 = grade(p3);
  CHECK(p3.size() == 5);
  CHECK(cert3.n == 2);
  CHECK(lab3.label(p3, *p3.index_of("1-2-3"), *p3.index_of("13-2")) == 2);
  std::multiset<std::vector<int>> words;
  for (const Chain& c : maximal_chains(p3, cert3)) words.insert(chain_word(p3, lab3, c));
  CHECK(words == std::multiset<std::vector<int>>{{1, 2}, {2, 1}, {2, 1}});
  CHECK(verify_snelling(p3, cert3, lab3).ok);

  auto [p4, lab4] = gen_partition_lattice(4);
  auto cert4 = grade(p4);
  CHECK(p4.size() == 15);
  CHECK(cert4.n == 3);
  CHECK(verify_snelling(p4, cert4, lab4).ok);
  CHECK(lattice_ops(p4).ok());
}

TEST_CASE("noncrossing partition lattice generator") {
  auto [n3, nl3] = gen_noncrossing(3);
  auto [p3, pl3] = gen_partition_lattice(3);
  (void)nl3;
  (void)pl3;
  CHECK(same_poset(n3, p3));  // every partition of [3] is noncrossing

  auto [n4, nl4] = gen_noncrossing(4);
  auto cert = grade(n4);
  CHECK(n4.size() == 14);
  CHECK(!n4.index_of("13-24").has_value());
  CHECK(gen_partition_lattice(4).poset.index_of("13-24").has_value());
  CHECK(verify_snelling(n4, cert, nl4).ok);
  CHECK(lattice_ops(n4).ok());
  CHECK(maximal_chains(n4, cert).size() == 16);

  // same label rule as the full lattice on the shared covers
  auto [p4, pl4] = gen_partition_lattice(4);
  for (int c = 0; c < (int)n4.covers().size(); ++c) {
    auto [lo, hi] = n4.covers()[c];
    int plo = *p4.index_of(n4.name(lo)), phi = *p4.index_of(n4.name(hi));
    CHECK(nl4.label(c) == pl4.label(p4, plo, phi));
  }
}

TEST_CASE("partition family generators validate their argument") {
  CHECK(thrown_kind([] { gen_partition_lattice(0); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrown_kind([] { gen_noncrossing(0); }) == ErrorKind::IndexOutOfRange);
  CHECK(thrown_kind([] { gen_partition_lattice(10); }) == ErrorKind::IndexOutOfRange);
  CHECK(gen_partition_lattice(1).poset.size() == 1);  // a single partition
}

TEST_CASE("bundled bowtie action") {
  auto fx = fixture_bowtie_action();
  CHECK(fx.poset.size() == 6);
  CHECK(!is_bowtie_free(fx.poset).bowtie_free);
  CHECK(!lattice_ops(fx.poset).ok());

  REQUIRE(fx.action.num_chains() == 4);
  CHECK(fx.action.chain(0) == chain_by_names(fx.poset, {"a", "b", "d", "f"}));
  CHECK(fx.action.chain(3) == chain_by_names(fx.poset, {"a", "c", "e", "f"}));
  CHECK(fx.action.table() ==
        std::vector<std::vector<int>>{{2, 3, 2, 3}, {1, 1, 3, 3}});
  CHECK(verify_hecke(fx.action).ok);
  CHECK(verify_good(fx.action).ok);
}

TEST_CASE("bundled modified subset poset") {
  auto [p, lab] = fixture_b4_minus_edge();
  auto cert = grade(p);
  CHECK(p.size() == 16);
  CHECK(p.covers().size() == 31);
  CHECK(!p.is_cover(*p.index_of("{3,4}"), *p.index_of("{2,3,4}")));
  CHECK(cert.n == 4);
  CHECK(is_bowtie_free(p).bowtie_free);
  CHECK(!lattice_ops(p).ok());
  CHECK(verify_snelling(p, cert, lab).ok);

  // labels agree with the subset lattice on every remaining cover
  auto [b4, b4lab] = gen_boolean(4);
  for (int c = 0; c < (int)p.covers().size(); ++c) {
    auto [lo, hi] = p.covers()[c];
    CHECK(lab.label(c) ==
          b4lab.label(b4, *b4.index_of(p.name(lo)), *b4.index_of(p.name(hi))));
  }
}

TEST_CASE("every generated labeling passes verification") {
  for (int n = 1; n <= 5; ++n) {
    auto [p, lab] = gen_boolean(n);
    CHECK(verify_snelling(p, grade(p), lab).ok);
  }
  for (int n = 2; n <= 4; ++n) {
    auto [pp, pl] = gen_partition_lattice(n);
    CHECK(verify_snelling(pp, grade(pp), pl).ok);
    auto [np, nl] = gen_noncrossing(n);
    CHECK(verify_snelling(np, grade(np), nl).ok);
  }

  std::mt19937 rng(20240820);
  for (int trial = 0; trial < 30; ++trial) {
    Poset q = random_poset(rng, 5, 0.35);
    std::vector<int> id{1, 2, 3, 4, 5};
    auto [j, lab] = gen_ideal_lattice(q, id);
    auto cert = grade(j);
    CHECK(verify_snelling(j, cert, lab).ok);
    CHECK(lattice_ops(j).ok());
    CHECK(is_distributive(j, *lattice_ops(j).table).distributive);
  }
}
