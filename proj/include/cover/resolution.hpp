#pragma once
// Resolutions of word cycles, materialized empirically: every morphism
// C_gamma -> X_phi factors through the OvB output of its image,
// h = (embedding) o f, and entries are collected up to isomorphism of
// (W, f modulo Aut(W)).

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cover/expectation.hpp"
#include "cover/tiled_surface.hpp"

namespace cover {

struct ResolutionEntry {
  TiledSurface W;        // canonicalized
  Morphism f;            // representative morphism C_gamma -> W
  std::string key;       // canonical W code + f-class key (dedup identity)
  bool adapted = false;  // eps-adapted; otherwise boundary reduced with f > d
  SurfaceStats stats;    // stats of W
  long long multiplicity = 0;  // morphisms that produced this entry
};

struct ResolvedMorphism {
  Morphism h;          // C_gamma -> X_phi
  Morphism f;          // C_gamma -> W
  Morphism emb;        // W -> X_phi, embedding; h = emb o f
  size_t entry_index;  // into CoverResolution::entries
};

struct CoverResolution {
  std::vector<ResolutionEntry> entries;  // deduplicated within the cover
  std::vector<ResolvedMorphism> morphs;  // one per morphism C_gamma -> X_phi
};

// Resolve every morphism C_gamma -> X_phi through ovb at eps.
CoverResolution resolve_in_cover(const std::string& gamma,
                                 const CoverTuple& phi,
                                 const mpq_class& eps = mpq_class(1, 32));

// Union of entries over all covers at the listed degrees (exhaustive for
// n <= 4; at n = 5 a deterministic sample of `sample_size` covers).
std::vector<ResolutionEntry> aggregate_resolution(
    const std::string& gamma, const std::vector<int>& n_list,
    const mpq_class& eps = mpq_class(1, 32), size_t sample_size = 2000,
    unsigned seed = 1);

}  // namespace cover
