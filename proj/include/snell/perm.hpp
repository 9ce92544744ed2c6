#pragma once

#include <string>
#include <vector>

#include "snell/bitset.hpp"
#include "snell/errors.hpp"

namespace snell {

// A word in the adjacent transpositions s_1..s_{n-1}, 1-based letters.
using Word = std::vector<int>;

// Permutation of [n] in one-line notation (1-based values).  Composition is
// functional (right-to-left): (v*w)(x) = v(w(x)).
class Perm {
 public:
  explicit Perm(std::vector<int> one_line);  // throws NotAPermutation
  static Perm identity(int n);

  int n() const { return (int)w_.size(); }
  int operator()(int i) const { return w_[i - 1]; }  // image of i, 1-based
  const std::vector<int>& one_line() const { return w_; }

  Perm compose(const Perm& rhs) const;  // this after rhs
  Perm inverse() const;

  // Right multiplication by s_i: swaps positions i, i+1 (1-based).
  Perm times_s(int i) const;

  bool is_identity() const;
  std::string to_string() const;  // "2413" for n <= 9, else comma separated

  friend bool operator==(const Perm& a, const Perm& b) { return a.w_ == b.w_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.w_ < b.w_; }

 private:
  std::vector<int> w_;
};

// s_{w[0]} s_{w[1]} ... s_{w[r-1]} composed right-to-left (the last letter acts
// first).  Empty word gives the identity.  Letters must lie in [1, n-1].
Perm word_to_perm(const Word& word, int n);

// Bit index for the value pair (a, b), a < b, inside an inversion set.
int pair_bit_index(int a, int b);

// Inversion set of w: pairs (a, b) with a < b and b preceding a in one-line
// notation; bit layout per pair_bit_index, n(n-1)/2 bits.
Bitset inv_set(const Perm& w);

int inversion_count(const Perm& w);

// Weak (right) order: v <= w iff INV(v) is contained in INV(w).
// Throws SizeMismatch if degrees differ.
bool leq_weak(const Perm& v, const Perm& w);

// A word is reduced iff its length equals the inversion count of its product.
bool is_reduced(const Word& word, int n);

// Descent positions {i : w(i) > w(i+1)}, ascending.
std::vector<int> descent_positions(const Perm& w);

// Same as a bitmask (bit i-1 set iff i is a descent).
uint32_t descent_mask(const Perm& w);

}  // namespace snell
