#include "snell/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace snell {

LabeledPoset gen_boolean(int n) {
  if (n < 0 || n > 20) fail(ErrorKind::IndexOutOfRange, "subset lattice limited to n in [0, 20]");
  std::vector<uint32_t> masks;
  for (uint32_t m = 0; m < (uint32_t(1) << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  std::map<uint32_t, int> idx;
  std::vector<std::string> names;
  for (uint32_t m : masks) {
    idx[m] = (int)names.size();
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
      if (!((m >> (i - 1)) & 1)) continue;
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    names.push_back(s + "}");
  }
  std::vector<std::pair<int, int>> covers;
  std::vector<std::pair<std::pair<int, int>, int>> labeled;
  for (uint32_t m : masks) {
    for (int i = 1; i <= n; ++i) {
      if ((m >> (i - 1)) & 1) continue;
      labeled.push_back({{idx[m], idx.at(m | (uint32_t(1) << (i - 1)))}, i});
    }
  }
  std::sort(labeled.begin(), labeled.end());
  for (auto& [pr, lbl] : labeled) covers.push_back(pr);
  Poset p = Poset::from_cover_indices(std::move(names), covers);
  std::vector<int> labels;
  labels.reserve(labeled.size());
  for (auto& [pr, lbl] : labeled) labels.push_back(lbl);
  return {p, EdgeLabeling(p, std::move(labels))};
}

LabeledPoset gen_ideal_lattice(const Poset& q, const std::vector<int>& ext) {
  int k = q.size();
  if ((int)ext.size() != k)
    fail(ErrorKind::NotALinearExtension, "one value per element required");
  std::vector<char> seen(k + 1, 0);
  for (int v : ext) {
    if (v < 1 || v > k || seen[v])
      fail(ErrorKind::NotALinearExtension, "values must be a bijection onto [n]");
    seen[v] = 1;
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (q.less(a, b) && ext[a] >= ext[b])
        fail(ErrorKind::NotALinearExtension,
             "'" + q.name(a) + "' < '" + q.name(b) + "' but values decrease");

  IdealLattice il = order_ideal_lattice_full(q);
  std::vector<int> labels;
  labels.reserve(il.added_element.size());
  for (int e : il.added_element) labels.push_back(ext[e]);
  return {il.poset, EdgeLabeling(il.poset, std::move(labels))};
}

std::string partition_name(const SetPartition& sp) {
  std::string s;
  for (size_t b = 0; b < sp.blocks.size(); ++b) {
    if (b) s += "-";
    for (int v : sp.blocks[b]) {
      if (v > 9) fail(ErrorKind::IndexOutOfRange, "partition names limited to single digits");
      s += std::to_string(v);
    }
  }
  return s;
}

namespace {

SetPartition canonical(std::vector<std::vector<int>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a[0] < b[0];
  });
  return {std::move(blocks)};
}

}  // namespace

bool refines(const SetPartition& finer, const SetPartition& coarser) {
  for (const auto& fb : finer.blocks) {
    bool inside_one = false;
    for (const auto& cb : coarser.blocks) {
      if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
        inside_one = true;
        break;
      }
    }
    if (!inside_one) return false;
  }
  return true;
}

bool is_noncrossing(const SetPartition& sp) {
  // crossing: i < j < k < l with i,k in one block and j,l in another
  for (size_t x = 0; x < sp.blocks.size(); ++x) {
    for (size_t y = 0; y < sp.blocks.size(); ++y) {
      if (x == y) continue;
      for (int i : sp.blocks[x])
        for (int k : sp.blocks[x]) {
          if (i >= k) continue;
          for (int j : sp.blocks[y])
            for (int l : sp.blocks[y]) {
              if (j >= l) continue;
              if (i < j && j < k && k < l) return false;
            }
        }
    }
  }
  return true;
}

std::vector<SetPartition> all_partitions(int n) {
  // restricted growth strings
  std::vector<SetPartition> out;
  std::vector<int> assign(n, 0);
  struct Runner {
    int n;
    std::vector<int>& assign;
    std::vector<SetPartition>& out;
    void go(int pos, int max_used) {
      if (pos == n) {
        std::vector<std::vector<int>> blocks(max_used);
        for (int i = 0; i < n; ++i) blocks[assign[i]].push_back(i + 1);
        out.push_back(canonical(std::move(blocks)));
        return;
      }
      for (int b = 0; b <= max_used; ++b) {
        assign[pos] = b;
        go(pos + 1, std::max(max_used, b + 1));
      }
    }
  } runner{n, assign, out};
  if (n > 0) runner.go(0, 0);
  return out;
}

namespace {

LabeledPoset partition_poset(int n, bool noncrossing_only) {
  if (n < 1 || n > 9) fail(ErrorKind::IndexOutOfRange, "partition lattices limited to n in [1, 9]");
  std::vector<SetPartition> parts = all_partitions(n);
  if (noncrossing_only) {
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const SetPartition& sp) { return !is_noncrossing(sp); }),
                parts.end());
  }
  // rank = n - #blocks; deterministic element order (rank, name)
  std::vector<std::pair<std::pair<int, std::string>, int>> keyed;
  for (int i = 0; i < (int)parts.size(); ++i)
    keyed.push_back({{n - (int)parts[i].blocks.size(), partition_name(parts[i])}, i});
  std::sort(keyed.begin(), keyed.end());

  std::vector<std::string> names;
  std::vector<SetPartition> ordered;
  std::map<std::string, int> index;
  for (auto& [key, i] : keyed) {
    index[key.second] = (int)names.size();
    names.push_back(key.second);
    ordered.push_back(parts[i]);
  }

  // Covers merge exactly two blocks; in the noncrossing case the merge must
  // stay noncrossing, and the result is still the Hasse diagram of the
  // refinement order on the subset (verified by the grading tests).
  std::vector<std::pair<std::pair<int, int>, int>> labeled;
  for (int i = 0; i < (int)ordered.size(); ++i) {
    const auto& blocks = ordered[i].blocks;
    for (size_t x = 0; x < blocks.size(); ++x) {
      for (size_t y = x + 1; y < blocks.size(); ++y) {
        std::vector<std::vector<int>> merged;
        std::vector<int> joined = blocks[x];
        joined.insert(joined.end(), blocks[y].begin(), blocks[y].end());
        merged.push_back(std::move(joined));
        for (size_t z = 0; z < blocks.size(); ++z)
          if (z != x && z != y) merged.push_back(blocks[z]);
        SetPartition target = canonical(std::move(merged));
        if (noncrossing_only && !is_noncrossing(target)) continue;
        int label = std::max(blocks[x][0], blocks[y][0]) - 1;
        labeled.push_back({{i, index.at(partition_name(target))}, label});
      }
    }
  }
  std::sort(labeled.begin(), labeled.end());
  std::vector<std::pair<int, int>> covers;
  std::vector<int> labels;
  for (auto& [pr, lbl] : labeled) {
    covers.push_back(pr);
    labels.push_back(lbl);
  }
  Poset p = Poset::from_cover_indices(std::move(names), covers);
  return {p, EdgeLabeling(p, std::move(labels))};
}

}  // namespace

LabeledPoset gen_partition_lattice(int n) { return partition_poset(n, false); }

LabeledPoset gen_noncrossing(int n) { return partition_poset(n, true); }

ActionFixture fixture_bowtie_action() {
  Poset p = Poset::from_covers({"a", "b", "c", "d", "e", "f"},
                               {{"a", "b"},
                                {"a", "c"},
                                {"b", "d"},
                                {"b", "e"},
                                {"c", "d"},
                                {"c", "e"},
                                {"d", "f"},
                                {"e", "f"}});
  auto cert = grade(p);
  auto chains = maximal_chains(p, cert);
  // chains, in order: a<b<d<f, a<b<e<f, a<c<d<f, a<c<e<f
  std::vector<std::vector<int>> table = {
      {2, 3, 2, 3},  // U_1
      {1, 1, 3, 3},  // U_2
  };
  return {p, ChainAction(p, cert, std::move(chains), std::move(table))};
}

LabeledPoset fixture_b4_minus_edge() {
  LabeledPoset b4 = gen_boolean(4);
  int lo = *b4.poset.index_of("{3,4}");
  int hi = *b4.poset.index_of("{2,3,4}");
  int drop = b4.poset.cover_index(lo, hi);
  std::vector<std::pair<int, int>> covers;
  std::vector<int> labels;
  for (int e = 0; e < (int)b4.poset.covers().size(); ++e) {
    if (e == drop) continue;
    covers.push_back(b4.poset.covers()[e]);
    labels.push_back(b4.labeling.label(e));
  }
  Poset p = Poset::from_cover_indices(b4.poset.names(), covers);
  return {p, EdgeLabeling(p, std::move(labels))};
}

}  // namespace snell
