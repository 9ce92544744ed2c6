#include "snell/perm.hpp"

#include <algorithm>
#include <numeric>

namespace snell {

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<char> seen(w_.size(), 0);
  for (int v : w_) {
    if (v < 1 || v > (int)w_.size() || seen[v - 1])
      fail(ErrorKind::NotAPermutation, "one-line form is not a permutation of [n]");
    seen[v - 1] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::compose(const Perm& rhs) const {
  if (n() != rhs.n()) fail(ErrorKind::SizeMismatch, "composing permutations of different degrees");
  std::vector<int> out(n());
  for (int i = 1; i <= n(); ++i) out[i - 1] = w_[rhs(i) - 1];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<int> out(n());
  for (int i = 1; i <= n(); ++i) out[w_[i - 1] - 1] = i;
  return Perm(std::move(out));
}

Perm Perm::times_s(int i) const {
  if (i < 1 || i >= n()) fail(ErrorKind::IndexOutOfRange, "transposition index out of range");
  std::vector<int> out = w_;
  std::swap(out[i - 1], out[i]);
  return Perm(std::move(out));
}

bool Perm::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (w_[i - 1] != i) return false;
  return true;
}

std::string Perm::to_string() const {
  std::string s;
  for (int i = 0; i < n(); ++i) {
    if (n() > 9 && i) s += ",";
    s += std::to_string(w_[i]);
  }
  return s;
}

Perm word_to_perm(const Word& word, int n) {
  // Rightmost letter acts first; prepending s_i swaps the *values* i, i+1.
  std::vector<int> acc(n);
  std::iota(acc.begin(), acc.end(), 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it;
    if (i < 1 || i >= n) fail(ErrorKind::IndexOutOfRange, "word letter out of range");
    for (int& v : acc) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return Perm(std::move(acc));
}

int pair_bit_index(int a, int b) { return (b - 1) * (b - 2) / 2 + (a - 1); }

Bitset inv_set(const Perm& w) {
  int n = w.n();
  Bitset out(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) out.set(pair_bit_index(w(j), w(i)));
  return out;
}

int inversion_count(const Perm& w) { return inv_set(w).count(); }

bool leq_weak(const Perm& v, const Perm& w) {
  if (v.n() != w.n()) fail(ErrorKind::SizeMismatch, "comparing permutations of different degrees");
  return inv_set(v).subset_of(inv_set(w));
}

bool is_reduced(const Word& word, int n) {
  return (int)word.size() == inversion_count(word_to_perm(word, n));
}

std::vector<int> descent_positions(const Perm& w) {
  std::vector<int> out;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) out.push_back(i);
  return out;
}

uint32_t descent_mask(const Perm& w) {
  uint32_t m = 0;
  for (int i = 1; i < w.n(); ++i)
    if (w(i) > w(i + 1)) m |= uint32_t(1) << (i - 1);
  return m;
}

}  // namespace snell
