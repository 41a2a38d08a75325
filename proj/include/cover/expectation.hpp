#pragma once
// Brute-force oracle over Hom(Gamma_2, S_n): exhaustive tuple enumeration by
// commutator bucketing (n <= 5), exact expectations of fixed points /
// morphism counts / embedding counts over the uniform ensemble, and the
// word-combinatorics helpers (divisor count, proper-power detection).

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cover/perm.hpp"
#include "cover/tiled_surface.hpp"

namespace cover {

// A point of X_n = Hom(Gamma_2, S_n): permutations with
// [alpha_a,alpha_b][alpha_c,alpha_d] = 1 (relator_value == id).
struct CoverTuple {
  int n = 0;
  Perm a, b, c, d;
  TiledSurface surface() const { return cover_from_permutations(a, b, c, d); }
};

// Exhaustive ensemble; tuples stored as indices into all_perms(n).
struct HomEnsemble {
  int n = 0;
  std::vector<Perm> perms;                   // all_perms(n)
  std::vector<std::array<uint8_t, 4>> tuples;
  size_t size() const { return tuples.size(); }
  CoverTuple tuple(size_t i) const {
    const auto& t = tuples[i];
    return {n, perms[t[0]], perms[t[1]], perms[t[2]], perms[t[3]]};
  }
};

// Meet-in-the-middle enumeration: (a,b) pairs bucketed by [a,b], (c,d) pairs
// by [c,d]^-1; matched buckets give the valid quadruples.  n <= 5.
HomEnsemble enumerate_homs(int n);
// Cached reference to the same ensemble (built once per n).
const HomEnsemble& hom_ensemble(int n);
// Independent plain quadruple loop, n <= 4; for cross-checking.
HomEnsemble enumerate_homs_bruteforce(int n);

// Per-cover counts (Y's octagons are respected automatically: in a
// boundaryless cover a labeled-graph morphism of 1-skeleta is a morphism of
// tiled surfaces, and vertex-injectivity implies cell-injectivity).
long long count_morphisms_in_cover(const TiledSurface& Y, const CoverTuple& phi);
long long count_embeddings_in_cover(const TiledSurface& Y,
                                    const CoverTuple& phi);

// Exact ensemble averages, n <= 5.
mpq_class expected_fix(const std::string& gamma, int n);
mpq_class expected_morphisms(const TiledSurface& Y, int n);
mpq_class expected_embeddings(const TiledSurface& Y, int n);

// Expected embedding count via the representation-theoretic kernel:
//   (n!)^3 / |X_n| * (n)_v (n)_f / prod_f (n)_{e_f} * Xi_n(Y).
// Agrees with expected_embeddings where both are computable.
double en_emb_formula(const TiledSurface& Y, int n);

long long divisor_count(long long q);

struct PowerDecomposition {
  bool proper = false;
  std::string root;
  int exponent = 1;
};
// Free-group proper-power detection on the cyclic reduction of w.
PowerDecomposition is_proper_power(const std::string& w);

}  // namespace cover
