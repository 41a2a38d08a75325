#pragma once
// Matrix models of irreducible and skew representations of symmetric groups
// in the Gelfand-Tsetlin basis (Young's orthogonal form), interchange
// families attached to a tiled surface, and the representation-theoretic
// embedding-expectation kernel Xi_n with its building blocks (the 8-fold
// matrix-coefficient product M, the top-row displacement D_top, and the
// per-level sums Upsilon_n).
//
// Conventions.  Permutations act on 0-based points {0..n-1}; tableau entries
// are the 1-based values {base+1,...,base+size}, so entry e corresponds to
// point e-1.  A tiled surface with v vertices is framed into the window
// [n-v+1, n] by vertex u -> point n-v+u (0-based).  GZ bases are ordered
// lexicographically by row-reading word (enumerate_tableaux order).

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cover/partition_algebra.hpp"
#include "cover/perm.hpp"
#include "cover/tiled_surface.hpp"

namespace cover {

// Dense row-major real matrix; M[row][col].
using DMat = std::vector<std::vector<double>>;

// Orthogonal-form matrix of g on V^lambda, lambda |- n, g in S_n (g.n() must
// equal lambda.size()).  Entry [S][T] is <g w_T, w_S>; the map is an
// orthogonal-matrix homomorphism.  Throws std::length_error if
// d_lambda > dim_cap.
DMat rep_matrix(const Partition& lambda, const Perm& g, int dim_cap = 200);

// Action matrix on the skew module with basis Tab(shape) and entries
// {base+1,...,base+size}.  g must fix every point outside
// [base, base+size) (throws std::domain_error otherwise).  Entry [S][T] is
// <g w_T, w_S>.  Throws std::length_error if skew_dim(shape) > dim_cap.
DMat skew_matrix(const SkewShape& shape, int base, const Perm& g,
                 int dim_cap = 200);

// ------------------------------------------------------ interchange family

// The per-letter permutation family attached to (Y, n): sigma_f^{+/-},
// tau_f^{+/-} supported on the window [n-v+1, n], satisfying
//   P1: sigma_f^{pm}(V_f^{pm}) = tau_f^{pm}(V_f^{pm}) = [n-e_f+1, n]
//   P2: (sigma_f^+)^{-1} sigma_f^- = (tau_f^+)^{-1} tau_f^- = g_f^0
//   P3: sigma_f^{pm} = tau_f^{pm} off V_f^{pm}
//   P4: each of the eight mixed products fixes [n-f+1, n] pointwise,
// where V_f^- / V_f^+ are the framed vertices with outgoing / incoming
// f-edges and g_f^0 extends the f-edge map.
struct InterchangeFamily {
  int n = 0, v = 0, f = 0;
  std::array<int, 4> ef{0, 0, 0, 0};
  std::array<Perm, 4> sp, sm, tp, tm;  // sigma^+, sigma^-, tau^+, tau^-
  std::array<Perm, 4> g0;
  std::array<std::vector<int>, 4> Vp, Vm;  // sorted 0-based points

  // The eight products entering M, D_top and P4, in order:
  //   s_b^- (s_a^+)^-1, t_a^+ (s_b^+)^-1, t_b^+ (t_a^-)^-1,
  //   s_c^- (t_b^-)^-1, s_d^- (s_c^+)^-1, t_c^+ (s_d^+)^-1,
  //   t_d^+ (t_c^-)^-1, s_a^- (t_d^-)^-1.
  std::array<Perm, 8> products() const;
};

// Deterministic backtracking construction; P1-P4 are re-verified on the
// result (std::logic_error on violation -- would be a bug).  Throws
// std::domain_error if n < v(Y) and std::runtime_error if the search
// exhausts without a solution (a flagged discrepancy, not expected).
InterchangeFamily construct_interchange(const TiledSurface& Y, int n);

// ------------------------------------------------------- M, D_top, Upsilon

// The tableau data of one summand of Upsilon_n: per letter f,
// r_f^{+/-} in Tab(mu_f/nu) (entries n-v+1..n-e_f) and s_f, t_f in
// Tab(lambda/mu_f) (entries n-e_f+1..n-f).
struct TableauTuple {
  std::array<StandardTableau, 4> rp, rm, s, t;
};

// Product of the eight matrix coefficients <pi_k w_T, w_S> on the skew
// module lambda/nu; |result| <= 1.
double m_product(const InterchangeFamily& fam, const Partition& nu,
                 const std::array<Partition, 4>& mu, const Partition& lambda,
                 const TableauTuple& tup);

// Sum of the eight top-row displacements d(pi_k tp(T), tp(S)).
int d_top(const InterchangeFamily& fam, const TableauTuple& tup);

// Upsilon_n: sum of m_product over all tableau tuples for fixed
// (nu, {mu_f}, lambda).
double upsilon(const InterchangeFamily& fam, const Partition& nu,
               const std::array<Partition, 4>& mu, const Partition& lambda);

// ------------------------------------------------------------------- Xi_n

// Partial sum of Xi_n(Y) over a single nu |- n-v:
//   sum_{lambda |- n-f, lambda contains nu} d_lambda d_nu
//     sum_{nu subset mu_f subset lambda, mu_f |- n-e_f}
//       Upsilon_n / (d_mu_a d_mu_b d_mu_c d_mu_d).
double xi_nu_part(const TiledSurface& Y, int n, const Partition& nu);

// Full Xi_n(Y): sum of xi_nu_part over all nu |- n-v.
double xi_n(const TiledSurface& Y, int n);

// The single level nu = (n-v) (one row); agrees with the rational route
// (core_graph::xi_nu_top) within 1e-6 relative.
double xi_top_term(const TiledSurface& Y, int n);

// ------------------------------------------------------------ trace check

// Both sides of the tensor-contraction identity
//   tr_{W^lambda}(B_lambda o (g_1..g_8))
//     = chi_lambda(g_8^-1 g_6^-1 g_7 g_5 g_4^-1 g_2^-1 g_3 g_1)
// (left via direct 8-fold contraction, right via a character trace).
// Requires d_lambda <= 2.
std::pair<double, double> b_lambda_trace_identity(
    const Partition& lambda, const std::array<Perm, 8>& g);

}  // namespace cover
