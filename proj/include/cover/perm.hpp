#pragma once
// Permutations of {0,...,n-1} acting on the left as functions.
//
// Convention used throughout: a word w = w_1 w_2 ... w_k over the letters
// a,b,c,d (inverses A,B,C,D) is evaluated by *applying letters left to
// right*: eval_word(w)(i) walks the path that starts at i and reads w.
// As a composition of functions this is  alpha_{w_k} o ... o alpha_{w_1},
// and under it the genus-2 relator [a,b][c,d] evaluates to
//   W(g) = g_d^-1 g_c^-1 g_d g_c g_b^-1 g_a^-1 g_b g_a
// (functional composition, rightmost applied first).  Every count in this
// project uses this single convention.

#include <algorithm>
#include <functional>
#include <vector>
#include <cstdint>
#include <string>
#include <stdexcept>
#include <numeric>

namespace cover {

struct Perm {
  std::vector<int> img;  // img[i] = image of i

  Perm() = default;
  explicit Perm(int n) : img(n) { std::iota(img.begin(), img.end(), 0); }
  explicit Perm(std::vector<int> images) : img(std::move(images)) {}

  int n() const { return (int)img.size(); }
  int operator()(int i) const { return img[i]; }

  static Perm identity(int n) { return Perm(n); }

  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  // this o other : apply other first
  Perm after(const Perm& other) const {
    Perm r;
    r.img.resize(n());
    for (int i = 0; i < n(); ++i) r.img[i] = img[other.img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(n());
    for (int i = 0; i < n(); ++i) r.img[img[i]] = i;
    return r;
  }

  int fix_count() const {
    int c = 0;
    for (int i = 0; i < n(); ++i) c += (img[i] == i);
    return c;
  }

  bool fixes_pointwise(int lo, int hi) const {  // fixes {lo,...,hi-1}
    for (int i = lo; i < hi; ++i)
      if (img[i] != i) return false;
    return true;
  }

  // swap of adjacent points (k, k+1), 0-based
  static Perm adjacent_transposition(int n, int k) {
    Perm p(n);
    p.img[k] = k + 1;
    p.img[k + 1] = k;
    return p;
  }

  static Perm transposition(int n, int i, int j) {
    Perm p(n);
    p.img[i] = j;
    p.img[j] = i;
    return p;
  }

  // factor into adjacent transpositions s_{k}=(k,k+1): selection-sort style;
  // the product, applied left to right via `after`, reconstructs the
  // permutation:  p = s_{f.back()} o ... o s_{f.front()} ... order documented
  // at the call site in sym_rep.
  std::vector<int> adjacent_factorization() const;

  auto operator<=>(const Perm&) const = default;
};

inline std::vector<int> Perm::adjacent_factorization() const {
  // Bubble-sort the image array to the identity.  Swapping entries k,k+1 of
  // the image array is right-composition with s_k, so after recorded swaps
  // k_1..k_m (in order):  p o s_{k_1} o ... o s_{k_m} = id, hence
  // p = s_{k_m} o ... o s_{k_1}.  The list is returned reversed, so with
  // r = returned order:  p = s_{r_1} o s_{r_2} o ... o s_{r_m}
  // (equivalently, M(p) = M(s_{r_1}) M(s_{r_2}) ... M(s_{r_m})).
  std::vector<int> a = img;
  std::vector<int> swaps;
  const int m = (int)a.size();
  bool moved = true;
  while (moved) {
    moved = false;
    for (int k = 0; k + 1 < m; ++k) {
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        swaps.push_back(k);
        moved = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

// Cycle type as weakly decreasing cycle lengths (includes fixed points).
inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<char> seen(p.n(), 0);
  std::vector<int> type;
  for (int i = 0; i < p.n(); ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = p(j);
      ++len;
    }
    type.push_back(len);
  }
  std::sort(type.begin(), type.end(), std::greater<int>());
  return type;
}

// All n! permutations of {0..n-1} in lexicographic image order.
std::vector<Perm> all_perms(int n);

// Word letters: 'a','b','c','d' are the generators, 'A','B','C','D' their
// inverses.  letter_index: a->0, b->1, c->2, d->3.
inline int letter_index(char c) {
  switch (c) {
    case 'a': case 'A': return 0;
    case 'b': case 'B': return 1;
    case 'c': case 'C': return 2;
    case 'd': case 'D': return 3;
  }
  throw std::domain_error(std::string("invalid word letter: ") + c);
}
inline bool letter_is_inverse(char c) { return c >= 'A' && c <= 'Z'; }
inline char letter_inverse(char c) {
  return letter_is_inverse(c) ? (char)(c - 'A' + 'a') : (char)(c - 'a' + 'A');
}
bool is_valid_word(const std::string& w);

// Free cyclic reduction of a word (reduce, then cancel first-vs-last).
std::string cyclic_reduce(const std::string& w);

// eval_word: apply letters left to right (see header comment).
Perm eval_word(const std::string& w, const Perm& a, const Perm& b,
               const Perm& c, const Perm& d);

// W(g) = g_d^-1 g_c^-1 g_d g_c g_b^-1 g_a^-1 g_b g_a  (functional composition)
Perm relator_value(const Perm& a, const Perm& b, const Perm& c, const Perm& d);

}  // namespace cover
