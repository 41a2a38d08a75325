#include "cover/resolution.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cover/growth.hpp"

namespace cover {

namespace {

// key of f modulo Aut(W): minimal image vector over all automorphisms of the
// (already canonicalized) W
std::string f_class_key(const TiledSurface& W, const Morphism& f) {
  auto auts = embeddings(W, W);  // vertex-bijective = automorphism here
  std::vector<int> best;
  for (const auto& s : auts) {
    std::vector<int> img(f.size());
    for (size_t i = 0; i < f.size(); ++i) img[i] = s[f[i]];
    if (best.empty() || img < best) best = img;
  }
  std::ostringstream os;
  for (int x : best) os << x << ",";
  return os.str();
}

}  // namespace

CoverResolution resolve_in_cover(const std::string& gamma,
                                 const CoverTuple& phi, const mpq_class& eps) {
  auto C = from_word(gamma);
  auto Z = phi.surface();
  CoverResolution out;
  std::map<std::string, size_t> index;
  for (const auto& h : morphisms(C, Z)) {
    auto U = SubComplex::image_of_morphism(C, Z, h);
    auto Wsub = ovb(U, eps);
    std::vector<int> vmap;
    TiledSurface Wraw = Wsub.extract(&vmap);
    // number Z vertices inside W
    std::vector<int> znum(Z.nv, -1);
    for (size_t i = 0; i < vmap.size(); ++i) znum[vmap[i]] = (int)i;
    std::vector<int> cnum;
    TiledSurface W = canonicalize(Wraw, &cnum);
    ResolvedMorphism rm;
    rm.h = h;
    rm.f.resize(C.nv);
    for (int i = 0; i < C.nv; ++i) rm.f[i] = cnum[znum[h[i]]];
    rm.emb.resize(W.nv);
    for (int i = 0; i < W.nv; ++i) rm.emb[i] = -1;
    for (int i = 0; i < Wraw.nv; ++i) rm.emb[cnum[i]] = vmap[i];
    // verify the factorization and embedding properties
    for (int i = 0; i < C.nv; ++i)
      if (rm.emb[rm.f[i]] != h[i])
        throw std::logic_error("resolve_in_cover: factorization broken");
    if (!is_embedding(W, rm.emb))
      throw std::logic_error("resolve_in_cover: not an embedding");
    ResolutionEntry entry;
    entry.W = W;
    entry.f = rm.f;
    entry.stats = W.stats();
    entry.adapted = !find_bad_piece(W, eps).has_value();
    if (!entry.adapted) {
      if (!is_boundary_reduced(W) || entry.stats.f <= entry.stats.d)
        throw std::logic_error("resolve_in_cover: two-options lemma violated");
    }
    entry.key = W.canonical_form() + "|" + f_class_key(W, rm.f);
    auto it = index.find(entry.key);
    if (it == index.end()) {
      entry.multiplicity = 1;
      index[entry.key] = out.entries.size();
      rm.entry_index = out.entries.size();
      out.entries.push_back(std::move(entry));
    } else {
      ++out.entries[it->second].multiplicity;
      rm.entry_index = it->second;
    }
    out.morphs.push_back(std::move(rm));
  }
  return out;
}

std::vector<ResolutionEntry> aggregate_resolution(const std::string& gamma,
                                                  const std::vector<int>& n_list,
                                                  const mpq_class& eps,
                                                  size_t sample_size,
                                                  unsigned seed) {
  std::vector<ResolutionEntry> entries;
  std::map<std::string, size_t> index;
  for (int n : n_list) {
    if (n < 1 || n > 5)
      throw std::domain_error("aggregate_resolution: 1 <= n <= 5 required");
    const auto& E = hom_ensemble(n);
    std::vector<size_t> idxs;
    if (n <= 4 || E.size() <= sample_size) {
      idxs.resize(E.size());
      std::iota(idxs.begin(), idxs.end(), (size_t)0);
    } else {
      std::mt19937 rng(seed);
      for (size_t i = 0; i < sample_size; ++i) idxs.push_back(rng() % E.size());
    }
    for (size_t i : idxs) {
      auto cr = resolve_in_cover(gamma, E.tuple(i), eps);
      for (const auto& en : cr.entries) {
        auto it = index.find(en.key);
        if (it == index.end()) {
          index[en.key] = entries.size();
          entries.push_back(en);
        } else {
          entries[it->second].multiplicity += en.multiplicity;
        }
      }
    }
  }
  return entries;
}

}  // namespace cover
