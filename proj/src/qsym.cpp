#include "snell/qsym.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace snell {

std::string subset_to_string(uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 1; i < n; ++i) {
    if (!((mask >> (i - 1)) & 1)) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

static int subset_count(int n) { return n <= 1 ? 1 : 1 << (n - 1); }

std::vector<long long> flag_f(const Poset& p, const GradingCertificate& cert) {
  int n = cert.n;
  if (n > 20) fail(ErrorKind::IndexOutOfRange, "flag vectors limited to rank 20");
  std::vector<std::vector<int>> by_rank(n + 1);
  for (int v = 0; v < p.size(); ++v) by_rank[cert.rank[v]].push_back(v);

  std::vector<long long> alpha(subset_count(n), 0);
  for (uint32_t s = 0; s < alpha.size(); ++s) {
    std::vector<int> ranks;
    for (int i = 1; i < n; ++i)
      if ((s >> (i - 1)) & 1) ranks.push_back(i);
    // Chains with rank set exactly `ranks`: consecutive comparability suffices.
    std::map<int, long long> cur{{cert.bottom, 1}};
    for (int r : ranks) {
      std::map<int, long long> next;
      for (int v : by_rank[r]) {
        long long total = 0;
        for (auto [u, c] : cur)
          if (p.leq(u, v)) total += c;
        if (total) next[v] = total;
      }
      cur = std::move(next);
    }
    long long total = 0;
    for (auto [u, c] : cur) {
      (void)u;
      total += c;
    }
    alpha[s] = total;
  }
  return alpha;
}

std::vector<long long> flag_h(const std::vector<long long>& alpha) {
  std::vector<long long> beta(alpha.size(), 0);
  for (uint32_t s = 0; s < alpha.size(); ++s) {
    long long acc = 0;
    // iterate subsets t of s
    uint32_t t = s;
    while (true) {
      int parity = __builtin_popcount(s ^ t);
      acc += (parity % 2 ? -1 : 1) * alpha[t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    beta[s] = acc;
  }
  return beta;
}

std::vector<long long> alpha_from_beta(const std::vector<long long>& beta) {
  std::vector<long long> alpha(beta.size(), 0);
  for (uint32_t s = 0; s < beta.size(); ++s) {
    long long acc = 0;
    uint32_t t = s;
    while (true) {
      acc += beta[t];
      if (t == 0) break;
      t = (t - 1) & s;
    }
    alpha[s] = acc;
  }
  return alpha;
}

std::string to_string(const QSymL& f) {
  std::ostringstream out;
  for (uint32_t s = 0; s < f.coeffs.size(); ++s) {
    if (f.coeffs[s] == 0) continue;
    out << "S=" << subset_to_string(s, f.n) << ": " << f.coeffs[s] << "\n";
  }
  return out.str();
}

QSymL f_p(const Poset& p, const GradingCertificate& cert) {
  return QSymL{cert.n, flag_h(flag_f(p, cert))};
}

std::string to_string(const Polynomial& poly) {
  std::ostringstream out;
  for (const auto& [expo, coeff] : poly.terms) {
    if (coeff == 0) continue;
    bool any = false;
    for (int v = 0; v < poly.vars; ++v) {
      if (expo[v] == 0) continue;
      if (any) out << " ";
      out << "x" << (v + 1);
      if (expo[v] > 1) out << "^" << expo[v];
      any = true;
    }
    if (!any) out << "1";
    out << ": " << coeff << "\n";
  }
  return out.str();
}

Polynomial fundamental_expansion(int n, uint32_t s_mask, int m) {
  if (m < 1) fail(ErrorKind::IndexOutOfRange, "expansion needs at least one variable");
  Polynomial out;
  out.vars = m;
  std::vector<int> expo(m, 0);
  if (n == 0) {
    out.terms[expo] = 1;
    return out;
  }
  // positions are 1..n; a strict rise is forced after position i when i is in S
  struct Runner {
    int n, m;
    uint32_t s;
    Polynomial& out;
    std::vector<int>& expo;
    void go(int pos, int min_var) {
      if (pos > n) {
        out.terms[expo] += 1;
        return;
      }
      for (int v = min_var; v <= m; ++v) {
        ++expo[v - 1];
        bool strict = pos < n && ((s >> (pos - 1)) & 1);
        go(pos + 1, strict ? v + 1 : v);
        --expo[v - 1];
      }
    }
  } runner{n, m, s_mask, out, expo};
  runner.go(1, 1);
  return out;
}

Polynomial evaluate(const QSymL& f, int m) {
  if (m < 1) fail(ErrorKind::IndexOutOfRange, "expansion needs at least one variable");
  Polynomial out;
  out.vars = m;
  for (uint32_t s = 0; s < f.coeffs.size(); ++s) {
    if (f.coeffs[s] == 0) continue;
    Polynomial part = fundamental_expansion(f.n, s, m);
    for (const auto& [expo, c] : part.terms) out.terms[expo] += f.coeffs[s] * c;
  }
  std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial f_p_multichain(const Poset& p, const GradingCertificate& cert, int m) {
  if (m < 1) fail(ErrorKind::IndexOutOfRange, "expansion needs at least one variable");
  Polynomial out;
  out.vars = m;
  std::vector<int> expo(m, 0);
  if (cert.n == 0) {
    out.terms[expo] = 1;
    return out;
  }
  // Multichains bottom = t_0 <= t_1 <= ... <= t_k = top with the top appearing
  // exactly once and k <= m; x_j carries exponent rank(t_j) - rank(t_{j-1}).
  struct Runner {
    const Poset& p;
    const GradingCertificate& cert;
    int m;
    Polynomial& out;
    std::vector<int>& expo;
    void go(int step, int cur) {
      if (step > m) return;
      for (int t = 0; t < p.size(); ++t) {
        if (!p.leq(cur, t)) continue;
        if (t == cert.top && cur == cert.top) continue;  // top may appear once only
        expo[step - 1] = cert.rank[t] - cert.rank[cur];
        if (t == cert.top)
          out.terms[expo] += 1;
        else
          go(step + 1, t);
        expo[step - 1] = 0;
      }
    }
  } runner{p, cert, m, out, expo};
  runner.go(1, cert.bottom);
  return out;
}

QSymL omega_involution(const QSymL& f) {
  QSymL out{f.n, std::vector<long long>(f.coeffs.size(), 0)};
  uint32_t full = f.n >= 1 ? (uint32_t(1) << (f.n - 1)) - 1 : 0;
  for (uint32_t s = 0; s < f.coeffs.size(); ++s) out.coeffs[full & ~s] += f.coeffs[s];
  return out;
}

QSymL ch_of_action(const ChainAction& a) {
  QSymL out{a.n(), std::vector<long long>(subset_count(a.n()), 0)};
  uint32_t full = a.n() >= 1 ? (uint32_t(1) << (a.n() - 1)) - 1 : 0;
  // A chain fixed by U_i for every i in S behaves like the one-dimensional
  // class indexed by S, so each chain lands on the complement of its descents.
  for (int c = 0; c < a.num_chains(); ++c)
    out.coeffs[full & ~descent_set_of_chain(a, c)] += 1;
  return out;
}

bool is_symmetric(const QSymL& f, int m) {
  if (m < f.n)
    fail(ErrorKind::IndexOutOfRange, "symmetry check needs at least n variables");
  Polynomial poly = evaluate(f, m);
  // Group terms by sorted exponent multiset; symmetric iff every rearrangement
  // appears with the same coefficient.
  std::map<std::vector<int>, std::pair<long long, long long>> groups;  // sig -> (coeff, count)
  for (const auto& [expo, coeff] : poly.terms) {
    if (coeff == 0) continue;
    std::vector<int> sig = expo;
    std::sort(sig.begin(), sig.end(), std::greater<int>());
    auto it = groups.find(sig);
    if (it == groups.end())
      groups[sig] = {coeff, 1};
    else {
      if (it->second.first != coeff) return false;
      it->second.second += 1;
    }
  }
  for (const auto& [sig, info] : groups) {
    // number of distinct rearrangements of sig over m variables
    long long arrangements = 1;
    // m! / prod(mult_e!)
    std::map<int, int> mult;
    for (int e : sig) ++mult[e];
    long long numer = 1;
    for (int i = 2; i <= m; ++i) numer *= i;
    long long denom = 1;
    for (auto [e, c] : mult) {
      (void)e;
      for (int i = 2; i <= c; ++i) denom *= i;
    }
    arrangements = numer / denom;
    if (info.second != arrangements) return false;
  }
  return true;
}

}  // namespace snell
