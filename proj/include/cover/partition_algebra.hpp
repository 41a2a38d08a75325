#pragma once
// Exact arithmetic over integer partitions: Young diagram dimensions,
// skew dimensions, Witten zeta values of symmetric groups, homomorphism
// counts and falling factorials.  Everything here is exact (GMP).

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace cover {

using Int = mpz_class;
using Rat = mpq_class;

struct Partition {
  // weakly decreasing positive parts; empty vector = empty partition
  std::vector<int> parts;

  Partition() = default;
  Partition(std::initializer_list<int> p) : parts(p) { validate(); }
  explicit Partition(std::vector<int> p) : parts(std::move(p)) { validate(); }

  void validate() const;

  int size() const;                 // total number of boxes
  int rows() const { return (int)parts.size(); }
  int part(int i) const { return i < rows() ? parts[i] : 0; }  // 0-based row
  int first_part() const { return part(0); }

  int b() const { return size() - first_part(); }   // boxes outside first row
  int b_check() const { return size() - rows(); }   // boxes outside first col

  Partition conjugate() const;
  bool contains(const Partition& inner) const;  // cell-wise inclusion

  std::string to_string() const;  // e.g. "(3,1,1)"

  auto operator<=>(const Partition&) const = default;
};

struct SkewShape {
  Partition outer, inner;

  SkewShape() = default;
  SkewShape(Partition out, Partition in);

  int size() const { return outer.size() - inner.size(); }
  bool cell(int r, int c) const {  // is (r,c) a box of the skew diagram?
    return c >= inner.part(r) && c < outer.part(r);
  }
  // boxes outside the first (nonempty) row / first column of the skew shape
  int b() const;
  int b_check() const;

  std::string to_string() const;

  auto operator<=>(const SkewShape&) const = default;
};

struct StandardTableau {
  SkewShape shape;
  // entry[r][c - inner.part(r)] for boxes of row r; entries are exactly
  // {base+1, ..., base+size} each once, rows/columns strictly increasing
  std::vector<std::vector<int>> entry;
  int base = 0;  // entries start at base+1

  int at(int r, int c) const { return entry[r][c - shape.inner.part(r)]; }
  // entries lying in the top row of the skew shape (the row of length
  // outer_1 - inner_1, i.e. row 0 when nonempty)
  std::vector<int> top_row_entries() const;
  // row-reading word: rows top to bottom, each left to right
  std::vector<int> row_reading_word() const;
  std::string to_string() const;
};

// All partitions of n, reverse-lexicographic: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// Partitions nu of m with nu subset lambda (cell-wise).
std::vector<Partition> sub_partitions_of_size(const Partition& lambda, int m);

// d_lambda by the hook length formula.
Int hook_dim(const Partition& lambda);

// d_{lambda/mu} = |Tab(lambda/mu)| by frontier-memoized backtracking.
Int skew_dim(const SkewShape& shape);

// All standard tableaux of the shape with entries {base+1,...,base+size},
// sorted lexicographically by row-reading word.
std::vector<StandardTableau> enumerate_tableaux(const SkewShape& shape,
                                                int base = 0);

// Witten zeta of S_n: sum over lambda |- n of d_lambda^{-s} (s integer >= 1).
Rat witten_zeta(int n, int s);
// Non-integer s: plain double evaluation.
double witten_zeta_float(int n, double s);

// Restricted zeta over Lambda(n,b) = {lambda : b_lambda >= b, b^check >= b}.
Rat restricted_zeta(int n, int b, int s);

// |Hom(Gamma_g, S_n)| = (n!)^{2g-1} zeta^{S_n}(2g-2); throws std::logic_error
// if the rational product is not integral (would indicate a zeta bug).
Int mednykh_count(int n, int g = 2);

// Irreducible character chi_lambda evaluated on the class of cycle type mu
// (both partitions of the same n), by Murnaghan-Nakayama over beta-numbers.
Int character_value(const Partition& lambda, const Partition& cycle_type);

// Falling factorial (n)_q = n(n-1)...(n-q+1); requires 0 <= q <= n.
Int pochhammer(const Int& n, int q);
Int factorial(int n);

}  // namespace cover
