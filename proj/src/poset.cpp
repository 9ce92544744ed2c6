#include "snell/poset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace snell {

namespace {

// Kahn toposort; returns false when a cycle survives.
bool topo_order(int n, const std::vector<std::vector<int>>& up, std::vector<int>& order) {
  std::vector<int> indeg(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : up[v]) ++indeg[u];
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  order.clear();
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    order.push_back(v);
    for (int u : up[v])
      if (--indeg[u] == 0) q.push_back(u);
  }
  return (int)order.size() == n;
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < (int)elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second)
      fail(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [lo, hi] : covers) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end()) fail(ErrorKind::UnknownElement, "cover references '" + lo + "'");
    if (b == index.end()) fail(ErrorKind::UnknownElement, "cover references '" + hi + "'");
    pairs.emplace_back(a->second, b->second);
  }
  return from_cover_indices(std::move(elements), pairs);
}

Poset Poset::from_cover_indices(std::vector<std::string> elements,
                                const std::vector<std::pair<int, int>>& covers) {
  Poset p;
  int n = (int)elements.size();
  p.names_ = std::move(elements);
  for (int i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.names_[i], i).second)
      fail(ErrorKind::DuplicateElement, "element '" + p.names_[i] + "' listed twice");
  }

  std::vector<std::pair<int, int>> raw;
  raw.reserve(covers.size());
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(ErrorKind::IndexOutOfRange, "cover index out of range");
    if (a == b) fail(ErrorKind::CycleDetected, "self-cover on '" + p.names_[a] + "'");
    raw.emplace_back(a, b);
  }
  std::sort(raw.begin(), raw.end());
  for (size_t i = 0; i + 1 < raw.size(); ++i) {
    if (raw[i] == raw[i + 1])
      p.warnings_.push_back("duplicate cover " + p.names_[raw[i].first] + " < " +
                            p.names_[raw[i].second] + " dropped");
  }
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<std::vector<int>> raw_up(n);
  for (auto [a, b] : raw) raw_up[a].push_back(b);

  std::vector<int> order;
  if (!topo_order(n, raw_up, order))
    fail(ErrorKind::CycleDetected, "cover relation contains a cycle");

  // Reachability (reflexive) by sweeping the topological order backwards.
  p.upset_.assign(n, Bitset(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    p.upset_[v].set(v);
    for (int u : raw_up[v]) p.upset_[v] |= p.upset_[u];
  }
  p.downset_.assign(n, Bitset(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.upset_[a].test(b)) p.downset_[b].set(a);

  // Hasse reduction: drop (a, b) whenever some c lies strictly between.
  for (auto [a, b] : raw) {
    bool implied = false;
    for (int c = p.upset_[a].find_first(); c >= 0 && !implied; c = p.upset_[a].find_next(c + 1)) {
      if (c != a && c != b && p.upset_[c].test(b)) implied = true;
    }
    if (implied)
      p.warnings_.push_back("cover " + p.names_[a] + " < " + p.names_[b] +
                            " implied by transitivity, dropped");
    else
      p.covers_.emplace_back(a, b);
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (auto [a, b] : p.covers_) {
    p.up_[a].push_back(b);
    p.down_[b].push_back(a);
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  for (auto& v : p.down_) std::sort(v.begin(), v.end());
  return p;
}

std::optional<int> Poset::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Poset::cover_index(int lower, int upper) const {
  auto it = std::lower_bound(covers_.begin(), covers_.end(), std::make_pair(lower, upper));
  if (it == covers_.end() || *it != std::make_pair(lower, upper)) return -1;
  return (int)(it - covers_.begin());
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (down_[v].empty()) out.push_back(v);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (up_[v].empty()) out.push_back(v);
  return out;
}

bool same_poset(const Poset& a, const Poset& b) {
  if (a.size() != b.size() || a.covers().size() != b.covers().size()) return false;
  std::vector<std::string> an = a.names(), bn = b.names();
  std::sort(an.begin(), an.end());
  std::sort(bn.begin(), bn.end());
  if (an != bn) return false;
  std::vector<std::pair<std::string, std::string>> ac, bc;
  for (auto [x, y] : a.covers()) ac.emplace_back(a.name(x), a.name(y));
  for (auto [x, y] : b.covers()) bc.emplace_back(b.name(x), b.name(y));
  std::sort(ac.begin(), ac.end());
  std::sort(bc.begin(), bc.end());
  return ac == bc;
}

namespace {

// Any saturated chain from `from` upward to the unique maximal element above it,
// used when assembling NotGraded witnesses.
Chain arbitrary_chain_up(const Poset& p, int from) {
  Chain c{from};
  int cur = from;
  while (!p.upper_covers(cur).empty()) {
    cur = p.upper_covers(cur)[0];
    c.push_back(cur);
  }
  return c;
}

std::string chain_to_string(const Poset& p, const Chain& c) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += " < ";
    s += p.name(c[i]);
  }
  return s;
}

}  // namespace

GradingCertificate grade(const Poset& p) {
  if (p.size() == 0) fail(ErrorKind::NotBounded, "empty poset has no bottom element");
  auto mins = p.minimal_elements();
  if (mins.size() != 1)
    fail(ErrorKind::NotBounded, "two minimal elements: '" + p.name(mins[0]) + "' and '" +
                                    p.name(mins[1]) + "'");
  auto maxs = p.maximal_elements();
  if (maxs.size() != 1)
    fail(ErrorKind::NotBounded, "two maximal elements: '" + p.name(maxs[0]) + "' and '" +
                                    p.name(maxs[1]) + "'");

  // Longest path from the bottom; a poset is graded iff every cover advances it
  // by exactly one.
  GradingCertificate cert;
  cert.bottom = mins[0];
  cert.top = maxs[0];
  cert.rank.assign(p.size(), 0);
  // covers() is sorted by lower index, which is not a topological order in
  // general; iterate to a fixpoint the simple way (sizes here are small).
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : p.covers()) {
      if (cert.rank[b] < cert.rank[a] + 1) {
        cert.rank[b] = cert.rank[a] + 1;
        changed = true;
      }
    }
  }
  for (auto [a, b] : p.covers()) {
    if (cert.rank[b] != cert.rank[a] + 1) {
      // Witness: a longest chain to b, versus reaching b through the cover (a, b).
      Chain tail = arbitrary_chain_up(p, b);
      Chain longer, shorter;
      int cur = b;
      while (cur != cert.bottom) {
        longer.push_back(cur);
        for (int d : p.lower_covers(cur)) {
          if (cert.rank[d] == cert.rank[cur] - 1) {
            cur = d;
            break;
          }
        }
      }
      longer.push_back(cert.bottom);
      std::reverse(longer.begin(), longer.end());
      longer.insert(longer.end(), tail.begin() + 1, tail.end());

      cur = a;
      while (cur != cert.bottom) {
        shorter.push_back(cur);
        for (int d : p.lower_covers(cur)) {
          if (cert.rank[d] == cert.rank[cur] - 1) {
            cur = d;
            break;
          }
        }
      }
      shorter.push_back(cert.bottom);
      std::reverse(shorter.begin(), shorter.end());
      // rank(b) > rank(a) + 1 here, so this chain is strictly shorter.
      shorter.insert(shorter.end(), tail.begin(), tail.end());

      fail(ErrorKind::NotGraded,
           "maximal chains of different lengths: [" + chain_to_string(p, longer) + "] vs [" +
               chain_to_string(p, shorter) + "]");
    }
  }
  cert.n = cert.rank[cert.top];
  return cert;
}

namespace {

void chains_dfs(const Poset& p, int cur, int upper, Chain& acc, std::vector<Chain>& out) {
  if (cur == upper) {
    out.push_back(acc);
    return;
  }
  for (int u : p.upper_covers(cur)) {
    if (!p.leq(u, upper)) continue;
    acc.push_back(u);
    chains_dfs(p, u, upper, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Chain> maximal_chains(const Poset& p, int lower, int upper) {
  if (lower < 0 || upper < 0 || lower >= p.size() || upper >= p.size())
    fail(ErrorKind::IndexOutOfRange, "interval endpoint out of range");
  if (!p.leq(lower, upper))
    fail(ErrorKind::InvalidInterval,
         "'" + p.name(lower) + "' is not below '" + p.name(upper) + "'");
  std::vector<Chain> out;
  Chain acc{lower};
  chains_dfs(p, lower, upper, acc, out);
  return out;
}

std::vector<Chain> maximal_chains(const Poset& p, const GradingCertificate& cert) {
  return maximal_chains(p, cert.bottom, cert.top);
}

LatticeCheck lattice_ops(const Poset& p) {
  int n = p.size();
  std::vector<int> meet(n * n, -1), join(n * n, -1);
  auto extremal = [&](const Bitset& bounds, bool upper_bounds) {
    // Elements of `bounds` with no other element of `bounds` strictly
    // beyond them (above for lower bounds, below for upper bounds).
    std::vector<int> out;
    for (int x = bounds.find_first(); x >= 0; x = bounds.find_next(x + 1)) {
      const Bitset& beyond = upper_bounds ? p.downset(x) : p.upset(x);
      Bitset overlap = beyond & bounds;
      if (overlap.count() == 1) out.push_back(x);
      if (out.size() > 2) break;  // two is already a witness
    }
    return out;
  };

  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      Bitset lb = p.downset(a) & p.downset(b);
      std::vector<int> maxlb = extremal(lb, false);
      if (maxlb.size() != 1) {
        return {std::nullopt, LatticeFailure{false, a, b, maxlb}};
      }
      meet[a * n + b] = meet[b * n + a] = maxlb[0];
      Bitset ub = p.upset(a) & p.upset(b);
      std::vector<int> minub = extremal(ub, true);
      if (minub.size() != 1) {
        return {std::nullopt, LatticeFailure{true, a, b, minub}};
      }
      join[a * n + b] = join[b * n + a] = minub[0];
    }
  }
  return {MeetJoinTable(n, std::move(meet), std::move(join)), std::nullopt};
}

BowtieCheck is_bowtie_free(const Poset& p) {
  int n = p.size();
  for (int c = 0; c < n; ++c) {
    for (int d = c + 1; d < n; ++d) {
      // Common upper covers of c and d (both lists sorted).
      const auto& uc = p.upper_covers(c);
      const auto& ud = p.upper_covers(d);
      std::vector<int> common;
      std::set_intersection(uc.begin(), uc.end(), ud.begin(), ud.end(),
                            std::back_inserter(common));
      if (common.size() >= 2) {
        return {false, std::array<int, 4>{common[0], common[1], c, d}};
      }
    }
  }
  return {true, std::nullopt};
}

DistributivityCheck is_distributive(const Poset& p, const MeetJoinTable& t) {
  int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t.meet(x, t.join(y, z)) != t.join(t.meet(x, y), t.meet(x, z)))
          return {false, std::array<int, 3>{x, y, z}};
  return {true, std::nullopt};
}

std::vector<int> sublattice_closure(const MeetJoinTable& t, const std::vector<int>& seed) {
  std::vector<char> in(t.size(), 0);
  std::vector<int> members;
  for (int v : seed) {
    if (v < 0 || v >= t.size()) fail(ErrorKind::IndexOutOfRange, "seed element out of range");
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (int w : {t.meet(members[i], members[j]), t.join(members[i], members[j])}) {
        if (!in[w]) {
          in[w] = 1;
          members.push_back(w);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Poset induced_subposet(const Poset& p, const std::vector<int>& elements) {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::string> names;
  names.reserve(elems.size());
  for (int v : elems) {
    if (v < 0 || v >= p.size()) fail(ErrorKind::IndexOutOfRange, "element out of range");
    names.push_back(p.name(v));
  }
  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      if (i == j || !p.less(elems[i], elems[j])) continue;
      bool between = false;
      for (int v : elems) {
        if (v != elems[i] && v != elems[j] && p.less(elems[i], v) && p.less(v, elems[j])) {
          between = true;
          break;
        }
      }
      if (!between) covers.emplace_back((int)i, (int)j);
    }
  }
  return Poset::from_cover_indices(std::move(names), covers);
}

IdealLattice order_ideal_lattice_full(const Poset& q) {
  int k = q.size();
  if (k > 20) fail(ErrorKind::IndexOutOfRange, "order ideal lattice limited to 20 generators");
  std::vector<uint64_t> below(k, 0);  // strict down-set masks
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && q.leq(b, a)) below[a] |= uint64_t(1) << b;

  std::vector<uint64_t> ideals;
  for (uint64_t m = 0; m < (uint64_t(1) << k); ++m) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a)
      if ((m >> a) & 1)
        if ((below[a] & m) != below[a]) ok = false;
    if (ok) ideals.push_back(m);
  }
  std::sort(ideals.begin(), ideals.end(), [](uint64_t a, uint64_t b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    return ca != cb ? ca < cb : a < b;
  });

  std::unordered_map<uint64_t, int> idx;
  for (int i = 0; i < (int)ideals.size(); ++i) idx[ideals[i]] = i;

  auto ideal_name = [&](uint64_t m) {
    std::string s = "{";
    bool first = true;
    for (int a = 0; a < k; ++a) {
      if (!((m >> a) & 1)) continue;
      if (!first) s += ",";
      s += q.name(a);
      first = false;
    }
    return s + "}";
  };

  std::vector<std::string> names;
  names.reserve(ideals.size());
  for (uint64_t m : ideals) names.push_back(ideal_name(m));

  // Covers add one element whose strict down-set is already present.  Collect
  // them as (lower, upper, added) and emit in the sorted order Poset uses so
  // added_element stays aligned with cover indices.
  std::vector<std::pair<int, int>> covers;
  std::vector<int> added;
  for (int i = 0; i < (int)ideals.size(); ++i) {
    uint64_t m = ideals[i];
    for (int a = 0; a < k; ++a) {
      if ((m >> a) & 1) continue;
      if ((below[a] & m) != below[a]) continue;
      covers.emplace_back(i, idx.at(m | (uint64_t(1) << a)));
      added.push_back(a);
    }
  }
  std::vector<int> perm(covers.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int x, int y) { return covers[x] < covers[y]; });
  std::vector<std::pair<int, int>> sorted_covers;
  std::vector<int> sorted_added;
  for (int x : perm) {
    sorted_covers.push_back(covers[x]);
    sorted_added.push_back(added[x]);
  }

  IdealLattice out{Poset::from_cover_indices(std::move(names), sorted_covers), std::move(ideals),
                   std::move(sorted_added)};
  return out;
}

Poset order_ideal_lattice(const Poset& q) { return order_ideal_lattice_full(q).poset; }

}  // namespace snell
