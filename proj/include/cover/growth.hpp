#pragma once
// BR-closure and the octagons-vs-boundary (OvB) growth algorithm, executed
// on subcomplexes of an explicit boundaryless ambient cover Z.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cover/tiled_surface.hpp"

namespace cover {

// A subcomplex of a fixed ambient surface Z, stored as cell membership.
struct SubComplex {
  const TiledSurface* Z = nullptr;
  std::vector<char> v, e, o;

  static SubComplex empty(const TiledSurface& Z);
  static SubComplex full(const TiledSurface& Z);
  // image of a morphism Y -> Z (all cells of Y pushed forward)
  static SubComplex image_of_morphism(const TiledSurface& Y,
                                      const TiledSurface& Z,
                                      const Morphism& m);

  void add_vertex(int zv) { v[zv] = 1; }
  void add_edge(int ze);           // adds endpoints
  void add_octagon(int zo);        // adds its edges and their endpoints
  bool is_subcomplex() const;      // closure conditions hold
  bool contains(const SubComplex& other) const;
  bool operator==(const SubComplex& other) const {
    return v == other.v && e == other.e && o == other.o;
  }

  // standalone copy; vmap/emap/omap give sub-cell -> Z-cell indices
  TiledSurface extract(std::vector<int>* vmap = nullptr,
                       std::vector<int>* emap = nullptr,
                       std::vector<int>* omap = nullptr) const;
};

struct GrowthStep {
  // 'B' = BR annexation along a long block, 'C' = BR annexation along a long
  // chain, 'P' = bad-piece annexation (OvB step (b))
  char kind = '?';
  int octagons_added = 0;
  int piece_size = 0;  // |P| for kind 'P'
  SurfaceStats before, after;
};

struct GrowthTrace {
  std::vector<GrowthStep> steps;
  int step_a_visits = 0;       // entries into OvB step (a)
  std::vector<int> theta_at_a; // theta after each step-(a) completion
  std::string to_json() const;
};

int theta(const TiledSurface& Y);

// BR-closure of Y inside Z: annex octagons along long chains (preferred)
// and long blocks until boundary reduced.
SubComplex br_closure(const SubComplex& Y, GrowthTrace* trace = nullptr);

// The OvB algorithm at parameter eps (default 1/32; eps <= 1/16 required).
SubComplex ovb(const SubComplex& Y, const mpq_class& eps = mpq_class(1, 32),
               GrowthTrace* trace = nullptr);

}  // namespace cover
