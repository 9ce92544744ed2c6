#include "snell/hecke.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "snell/qsym.hpp"

namespace snell {

namespace {

std::string chain_str(const Poset& p, const Chain& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += " < ";
    s += p.name(c[i]);
  }
  return s;
}

std::string word_str(const Word& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(w[i]);
  }
  return s + ")";
}

}  // namespace

ChainAction::ChainAction(Poset p, GradingCertificate cert, std::vector<Chain> chains,
                         std::vector<std::vector<int>> table)
    : poset_(std::move(p)), cert_(std::move(cert)), chains_(std::move(chains)),
      table_(std::move(table)) {
  auto all = maximal_chains(poset_, cert_);
  if (all.size() != chains_.size())
    fail(ErrorKind::UnknownChain, "chain list does not enumerate all maximal chains");
  std::vector<Chain> sorted_in = chains_, sorted_all = all;
  std::sort(sorted_in.begin(), sorted_in.end());
  std::sort(sorted_all.begin(), sorted_all.end());
  if (sorted_in != sorted_all)
    fail(ErrorKind::UnknownChain, "chain list does not enumerate all maximal chains");

  int rows = std::max(0, cert_.n - 1);
  if ((int)table_.size() != rows)
    fail(ErrorKind::ActionTableInvalid, "expected one table row per operator U_1..U_{n-1}");
  for (const auto& row : table_) {
    if (row.size() != chains_.size())
      fail(ErrorKind::ActionTableInvalid, "table row does not cover every chain");
    for (int v : row)
      if (v < 0 || v >= (int)chains_.size())
        fail(ErrorKind::ActionTableInvalid, "table entry out of range");
  }
}

int ChainAction::chain_index(const Chain& c) const {
  for (int i = 0; i < (int)chains_.size(); ++i)
    if (chains_[i] == c) return i;
  fail(ErrorKind::UnknownChain, "no such maximal chain");
}

int ChainAction::apply(int i, int chain_idx) const {
  if (i < 1 || i >= cert_.n) fail(ErrorKind::IndexOutOfRange, "operator index out of range");
  if (chain_idx < 0 || chain_idx >= (int)chains_.size())
    fail(ErrorKind::IndexOutOfRange, "chain index out of range");
  return table_[i - 1][chain_idx];
}

int ChainAction::apply_word(const Word& w, int chain_idx) const {
  int cur = chain_idx;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = apply(*it, cur);
  return cur;
}

ChainAction action_from_snelling(const Poset& p, const GradingCertificate& cert,
                                 const EdgeLabeling& lab) {
  auto verdict = verify_snelling(p, cert, lab);
  if (!verdict.ok) fail(ErrorKind::SnellingInvalid, verdict.reason);

  auto chains = maximal_chains(p, cert);
  std::map<Chain, int> index;
  for (int i = 0; i < (int)chains.size(); ++i) index[chains[i]] = i;

  std::vector<std::vector<int>> words;
  words.reserve(chains.size());
  for (const auto& c : chains) words.push_back(chain_word(p, lab, c));

  int rows = std::max(0, cert.n - 1);
  std::vector<std::vector<int>> table(rows, std::vector<int>(chains.size(), -1));
  for (int i = 1; i <= rows; ++i) {
    for (int c = 0; c < (int)chains.size(); ++c) {
      if (words[c][i - 1] < words[c][i]) {  // no descent at i (word values distinct)
        table[i - 1][c] = c;
        continue;
      }
      // Unique sibling through a different rank-i element with no descent at i.
      const Chain& m = chains[c];
      int below = m[i - 1], here = m[i], above = m[i + 1];
      std::vector<int> options;
      for (int z : p.upper_covers(below)) {
        if (z == here || !p.is_cover(z, above)) continue;
        if (lab.label(p, below, z) < lab.label(p, z, above)) options.push_back(z);
      }
      if (options.empty())
        fail(ErrorKind::SnellingInvalid, "no replacement chain without a descent at rank " +
                                             std::to_string(i) + " for [" + chain_str(p, m) + "]");
      if (options.size() > 1)
        fail(ErrorKind::AmbiguousSibling, "two replacement chains without a descent at rank " +
                                              std::to_string(i) + " for [" + chain_str(p, m) +
                                              "]");
      Chain target = m;
      target[i] = options[0];
      int tc = index.at(target);
      table[i - 1][c] = tc;
      // The replaced chain's word must be the original with positions i, i+1
      // exchanged; anything else contradicts a verified labeling.
      std::vector<int> expect = words[c];
      std::swap(expect[i - 1], expect[i]);
      if (words[tc] != expect)
        fail(ErrorKind::SnellingInvalid, "replacement chain word mismatch at rank " +
                                             std::to_string(i) + " for [" + chain_str(p, m) + "]");
    }
  }
  return ChainAction(p, cert, std::move(chains), std::move(table));
}

HeckeVerdict verify_hecke(const ChainAction& a) {
  int n = a.n(), k = a.num_chains();
  // locality: U_i may only change the rank-i element
  for (int i = 1; i < n; ++i) {
    for (int c = 0; c < k; ++c) {
      const Chain& before = a.chain(c);
      const Chain& after = a.chain(a.apply(i, c));
      for (int r = 0; r <= n; ++r) {
        if (r != i && before[r] != after[r])
          return {false, HeckeWitness{"locality", c, i, -1}};
      }
    }
  }
  // idempotency
  for (int i = 1; i < n; ++i)
    for (int c = 0; c < k; ++c)
      if (a.apply(i, a.apply(i, c)) != a.apply(i, c))
        return {false, HeckeWitness{"idempotency", c, i, -1}};
  // far commutation
  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      for (int c = 0; c < k; ++c)
        if (a.apply(i, a.apply(j, c)) != a.apply(j, a.apply(i, c)))
          return {false, HeckeWitness{"commutation", c, i, j}};
  // braid
  for (int i = 1; i + 1 < n; ++i)
    for (int c = 0; c < k; ++c)
      if (a.apply(i, a.apply(i + 1, a.apply(i, c))) !=
          a.apply(i + 1, a.apply(i, a.apply(i + 1, c))))
        return {false, HeckeWitness{"braid", c, i, i + 1}};
  return {true, std::nullopt};
}

uint32_t descent_set_of_chain(const ChainAction& a, int chain_idx) {
  uint32_t m = 0;
  for (int i = 1; i < a.n(); ++i)
    if (a.apply(i, chain_idx) != chain_idx) m |= uint32_t(1) << (i - 1);
  return m;
}

int find_sink_chain(const ChainAction& a) {
  int sink = -1;
  for (int c = 0; c < a.num_chains(); ++c) {
    if (descent_set_of_chain(a, c) == 0) {
      if (sink >= 0)
        fail(ErrorKind::MultipleSinks, "chains [" + chain_str(a.poset(), a.chain(sink)) +
                                           "] and [" + chain_str(a.poset(), a.chain(c)) +
                                           "] are both fixed by every operator");
      sink = c;
    }
  }
  if (sink < 0) fail(ErrorKind::NoSink, "no chain is fixed by every operator");
  return sink;
}

Word restless_word(const ChainAction& a, int chain_idx, bool largest_first) {
  Word applied;
  int cur = chain_idx;
  long long limit = (long long)a.num_chains() * std::max(1, a.n());
  while (true) {
    uint32_t d = descent_set_of_chain(a, cur);
    if (d == 0) break;
    int i;
    if (largest_first) {
      i = 32 - __builtin_clz(d);
    } else {
      i = __builtin_ctz(d) + 1;
    }
    applied.push_back(i);
    cur = a.apply(i, cur);
    if ((long long)applied.size() > limit)
      fail(ErrorKind::NonTerminating, "descent walk exceeded " + std::to_string(limit) +
                                          " steps without reaching a fixed chain");
  }
  std::reverse(applied.begin(), applied.end());  // written order: last letter acts first
  return applied;
}

AmbiguousPermutationError::AmbiguousPermutationError(int chain_, Word a, Word b, const Perm& pa,
                                                     const Perm& pb)
    : Error(ErrorKind::AmbiguousPermutation,
            "words " + word_str(a) + " and " + word_str(b) + " reach the sink from chain " +
                std::to_string(chain_) + " but multiply to " + pa.to_string() + " vs " +
                pb.to_string()),
      chain(chain_), word_a(std::move(a)), word_b(std::move(b)), perm_a(pa.one_line()),
      perm_b(pb.one_line()) {}

std::vector<Perm> omega_all(const ChainAction& a) {
  int sink = find_sink_chain(a);
  int k = a.num_chains();

  // Smallest-descent-first walk defines the candidate permutation of each
  // chain: omega(m) = omega(U_i(m)) * s_i.  Memoized along the walk; the walk
  // cannot revisit a chain when the relations hold, so guard with a step bound.
  std::vector<std::optional<Perm>> omega(k);
  omega[sink] = Perm::identity(a.n());
  std::vector<Word> words(k);
  for (int c = 0; c < k; ++c) {
    if (omega[c]) continue;
    std::vector<std::pair<int, int>> path;  // (chain, letter applied)
    int cur = c;
    long long limit = (long long)k * std::max(1, a.n()) + 1;
    while (!omega[cur]) {
      uint32_t d = descent_set_of_chain(a, cur);
      if (d == 0) {
        // a second sink; find_sink_chain would have thrown, defensive only
        fail(ErrorKind::MultipleSinks, "walk ended at an unexpected fixed chain");
      }
      int i = __builtin_ctz(d) + 1;
      path.emplace_back(cur, i);
      cur = a.apply(i, cur);
      if ((long long)path.size() > limit)
        fail(ErrorKind::NonTerminating, "descent walk exceeded " + std::to_string(limit) +
                                            " steps without reaching a fixed chain");
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      auto [m, i] = *it;
      int next = a.apply(i, m);
      omega[m] = omega[next]->times_s(i);
      words[m] = words[next];
      words[m].push_back(i);
    }
  }

  // Audit 1: the largest-descent-first walk must produce the same permutation.
  for (int c = 0; c < k; ++c) {
    Word alt = restless_word(a, c, /*largest_first=*/true);
    Perm alt_perm = word_to_perm(alt, a.n());
    if (alt_perm != *omega[c])
      throw AmbiguousPermutationError(c, words[c], alt, *omega[c], alt_perm);
  }
  // Audit 2: every single-step alternative must agree:
  // omega(m) = omega(U_i(m)) * s_i for every descent i of m.
  for (int c = 0; c < k; ++c) {
    uint32_t d = descent_set_of_chain(a, c);
    for (int i = 1; i < a.n(); ++i) {
      if (!((d >> (i - 1)) & 1)) continue;
      int next = a.apply(i, c);
      Perm via = omega[next]->times_s(i);
      if (via != *omega[c]) {
        Word alt = words[next];
        alt.push_back(i);
        throw AmbiguousPermutationError(c, words[c], alt, *omega[c], via);
      }
    }
  }

  std::vector<Perm> out;
  out.reserve(k);
  for (int c = 0; c < k; ++c) out.push_back(*omega[c]);
  return out;
}

Perm omega_of_chain(const ChainAction& a, int chain_idx) {
  if (chain_idx < 0 || chain_idx >= a.num_chains())
    fail(ErrorKind::IndexOutOfRange, "chain index out of range");
  return omega_all(a)[chain_idx];
}

GoodVerdict verify_good(const ChainAction& a) {
  auto alpha = flag_f(a.poset(), a.grading());
  int k = a.num_chains();
  std::vector<uint32_t> desc(k);
  for (int c = 0; c < k; ++c) desc[c] = descent_set_of_chain(a, c);
  uint32_t full = a.n() >= 1 ? (uint32_t(1) << (a.n() - 1)) - 1 : 0;
  for (uint32_t s = 0; s <= full; ++s) {
    long long count = 0;
    for (int c = 0; c < k; ++c)
      if ((desc[c] & ~s) == 0) ++count;
    if (count != alpha[s]) return {false, s, alpha[s], count};
    if (full == 0) break;
  }
  return {};
}

EdgeLabeling reconstruct_labeling(const ChainAction& a) {
  auto hv = verify_hecke(a);
  if (!hv.ok)
    fail(ErrorKind::HeckeViolated, "relation '" + hv.witness->relation +
                                       "' fails at chain index " + std::to_string(hv.witness->chain));
  auto gv = verify_good(a);
  if (!gv.ok)
    fail(ErrorKind::NotGoodAction,
         "rank-selected chain count " + std::to_string(gv.chain_count) + " != " +
             std::to_string(gv.alpha) + " for subset mask " + std::to_string(gv.failing_mask));

  auto omegas = omega_all(a);
  const Poset& p = a.poset();
  EdgeLabeling lab(p);
  for (int c = 0; c < a.num_chains(); ++c) {
    const Chain& m = a.chain(c);
    for (int kk = 1; kk <= a.n(); ++kk) {
      int e = p.cover_index(m[kk - 1], m[kk]);
      int value = omegas[c](kk);
      if (lab.has_label(e) && lab.label(e) != value)
        fail(ErrorKind::EdgeConflict, "chains disagree on the label of " + p.name(m[kk - 1]) +
                                          " < " + p.name(m[kk]) + ": " +
                                          std::to_string(lab.label(e)) + " vs " +
                                          std::to_string(value));
      lab.set_label(e, value);
    }
  }
  auto verdict = verify_snelling(p, a.grading(), lab);
  if (!verdict.ok)
    fail(ErrorKind::SnellingInvalid, "reconstructed labeling fails verification: " + verdict.reason);
  return lab;
}

long long character_value(const ChainAction& a, const Word& w) {
  for (int i : w)
    if (i < 1 || i >= a.n()) fail(ErrorKind::IndexOutOfRange, "word letter out of range");
  long long fixed = 0;
  for (int c = 0; c < a.num_chains(); ++c)
    if (a.apply_word(w, c) == c) ++fixed;
  return fixed;
}

int irreducible_character(uint32_t s_mask, const Word& w, int n) {
  for (int i : w) {
    if (i < 1 || i >= n) fail(ErrorKind::IndexOutOfRange, "word letter out of range");
    if (!((s_mask >> (i - 1)) & 1)) return 0;
  }
  return 1;
}

}  // namespace snell
