#pragma once
// Core-graph machinery: the folded graph obtained by attaching a relator
// cycle at every vertex (hat graph), the family Q(Y) of its quotients that
// stay injective on Y's vertices, the rational-in-n counting formula for the
// relator-restricted tuple sets X_n*(Y,J), and the character-based
// commutator-counting oracle.

#include <gmpxx.h>

#include <array>
#include <string>
#include <vector>

#include "cover/labeled_graph.hpp"
#include "cover/partition_algebra.hpp"
#include "cover/perm.hpp"
#include "cover/tiled_surface.hpp"

namespace cover {

// Hat graph of Y: 1-skeleton plus an 8-cycle spelling a b a^-1 b^-1 c d
// c^-1 d^-1 attached at every vertex, folded.  Vertices 0..nv(Y)-1 of the
// result are Y's vertices, in order (throws std::logic_error if folding
// would merge two of them).
LabeledGraph hat_graph(const TiledSurface& Y);

// All folded quotients of hat_graph(Y) injective on Y's vertex set, up to
// isomorphism fixing Y's vertices pointwise; includes the hat graph itself.
// Y's vertices are 0..nv(Y)-1 in every returned graph.
std::vector<LabeledGraph> enumerate_Q(const TiledSurface& Y, int cap = 20);

// One term per H in Q(Y): |X_n*(Y,J)|/(n!)^4 =
//   (1/(n)_v(Y)) * sum_H (n)_{v(H)} / prod_f (n)_{e_f(H)}.
struct RationalCountFormula {
  int vY = 0;
  std::array<int, 4> efY{0, 0, 0, 0};
  int fY = 0;
  struct Term {
    int vH = 0;
    std::array<int, 4> efH{0, 0, 0, 0};
    int chiH = 0;
  };
  std::vector<Term> terms;
};

RationalCountFormula xstar_rational(const TiledSurface& Y);

// Exact evaluation of |X_n*(Y,J)|/(n!)^4; throws std::domain_error when a
// falling factorial in a denominator vanishes (n too small).
Rat evaluate(const RationalCountFormula& F, int n);

// Exact count of tuples (alpha_a..alpha_d) in S_n^4 where each alpha_f maps
// point n-v+u to n-v+w for every f-edge u->w of Y, and the relator value
// fixes the window [n-v+1, n] pointwise.  n <= 4.
Int xstar_count_bruteforce(const TiledSurface& Y, int n);

// Xi_n at the single top skew-shape level nu = (n - v):
//   (prod_f (n)_{e_f(Y)} / (n)_{f(Y)}) * sum_H (n)_{v(H)} / prod_f (n)_{e_f(H)}
Rat xi_nu_top(const TiledSurface& Y, int n);

// #{(c,d) in S_n^2 : c d c^-1 d^-1 = t} = sum_lambda (n!/d_lambda)
// chi_lambda(t) (test oracle; exact).
Int frobenius_commutator_count(int n, const Perm& t);

}  // namespace cover
