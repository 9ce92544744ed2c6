#pragma once

#include <cstdint>
#include <vector>

namespace snell {

// Fixed-size dynamic bitset.  Used for up/down-sets of poset elements and for
// inversion sets of permutations (n(n-1)/2 bits), both of which outgrow uint64_t
// at the sizes we care about.  Only the handful of operations needed here.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  // First set bit at index >= from, or -1.
  int find_next(int from) const {
    if (from >= nbits_) return -1;
    int w = from >> 6;
    uint64_t cur = words_[w] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (cur) {
        int bit = (w << 6) + __builtin_ctzll(cur);
        return bit < nbits_ ? bit : -1;
      }
      if (++w >= (int)words_.size()) return -1;
      cur = words_[w];
    }
  }
  int find_first() const { return find_next(0); }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    for (int i = find_first(); i >= 0; i = find_next(i + 1)) out.push_back(i);
    return out;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace snell
