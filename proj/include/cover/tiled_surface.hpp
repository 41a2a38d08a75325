#pragma once
// Tiled surfaces: folded {a,b,c,d}-labeled directed graphs together with
// octagons glued along the genus-2 relator [a,b][c,d], the thick-boundary
// structure (cycles, blocks, chains, pieces) and the boundary-reducedness /
// epsilon-adaptedness predicates.
//
// Slot model: every vertex carries exactly 8 cyclically ordered half-edge
// slots, in the fixed order
//   0: a-outgoing, 1: b-incoming, 2: a-incoming, 3: b-outgoing,
//   4: c-outgoing, 5: d-incoming, 6: c-incoming, 7: d-outgoing.
// A hanging half-edge is an unused slot.
//
// Octagons: position p = 0..7 of an octagon's boundary traverses the letters
// a, b, a^-1, b^-1, c, d, c^-1, d^-1 in order; a directed traversal of an
// edge can occur at exactly one position, so an octagon is stored as its
// 8 edge ids and each directed edge side bounds at most one octagon.

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cover/labeled_graph.hpp"
#include "cover/perm.hpp"

namespace cover {

// slot layout
inline constexpr int kSlotOut[4] = {0, 3, 4, 7};  // a,b,c,d outgoing slots
inline constexpr int kSlotIn[4] = {2, 1, 6, 5};   // a,b,c,d incoming slots
// octagon boundary word a b a^-1 b^-1 c d c^-1 d^-1
inline constexpr int kOctLabel[8] = {0, 1, 0, 1, 2, 3, 2, 3};
inline constexpr bool kOctFwd[8] = {true, true, false, false,
                                    true, true, false, false};

struct SurfaceStats {
  int v = 0, e = 0, f = 0, d = 0;
  std::array<int, 4> ef{0, 0, 0, 0};
  int D() const { return v - f; }        // \mathfrak{D}
  int chi() const { return v - e + f; }
  int theta() const { return f - d; }
};

struct TiledSurface {
  int nv = 0;
  std::vector<GraphEdge> edges;
  std::vector<std::array<int, 8>> octagons;  // edge id per position
  std::vector<int> vertex_label;             // optional; empty = unlabeled

  // indices (built by finalize)
  std::vector<std::array<int, 4>> out_edge, in_edge;     // -1 = absent
  std::vector<std::array<int, 2>> edge_oct;  // [fwd, bwd] octagon id or -1

  // Validates foldedness, octagon words and the surface condition, and
  // builds the indices.  Throws std::logic_error on violation.
  void finalize();

  SurfaceStats stats() const;
  bool boundaryless() const { return stats().d == 0; }
  bool connected() const;

  // slot occupancy: edge id at (vertex, slot), -1 if hanging
  int slot_edge(int v, int slot) const;

  std::string canonical_form() const;  // minimal BFS code; connected only
};

// Rebuild Y with the canonical vertex numbering and sorted cells, dropping
// vertex labels; isomorphic surfaces produce identical structures.  vmap (if
// given) receives old-vertex -> new-vertex.  Connected surfaces only.
TiledSurface canonicalize(const TiledSurface& Y,
                          std::vector<int>* vmap = nullptr);

// ------------------------------------------------------------- construction

// The annular surface C_gamma of a word (cyclically reduces first; empty
// reduction -> std::domain_error).
TiledSurface from_word(const std::string& w);

// Degree-n cover from a permutation quadruple with relator_value == id;
// vertex i carries label i+1, the f-edge at i runs i -> alpha_f(i), one
// octagon per vertex.  Throws std::domain_error if the relator fails.
TiledSurface cover_from_permutations(const Perm& a, const Perm& b,
                                     const Perm& c, const Perm& d);

// Single octagon as a disc (8 boundary vertices); used by tests.
TiledSurface single_octagon();

// Vertex-only surface.
TiledSurface single_vertex();

// ----------------------------------------------------------------- boundary

struct DirectedEdgeRef {
  int edge = -1;
  bool fwd = true;
  auto operator<=>(const DirectedEdgeRef&) const = default;
};

// An element of the thick-boundary walk: either a whole directed edge or a
// hanging half-edge (vertex+slot).
struct BoundaryElement {
  bool is_edge = false;
  DirectedEdgeRef de;  // when is_edge
  int vertex = -1, slot = -1;  // when hanging
  auto operator<=>(const BoundaryElement&) const = default;
};

// Full cyclic walk (edges and hanging half-edges interleaved).
struct BoundaryWalkCycle {
  std::vector<BoundaryElement> elems;
  int edge_count() const;
};

// Spec view: directed edges with inter-edge hanging half-edge gap counts.
struct BoundaryCycle {
  std::vector<DirectedEdgeRef> edges;
  std::vector<int> gaps;  // gaps[i] = hanging half-edges between edge i, i+1
  int length() const { return (int)edges.size(); }
};

// Cycles containing at least one directed edge; sum of lengths = d(Y).
std::vector<BoundaryCycle> boundary_cycles(const TiledSurface& Y);
// Complete walk including vertex-only cycles (isolated/edge-free corners).
std::vector<BoundaryWalkCycle> boundary_walk(const TiledSurface& Y);

// ------------------------------------------------- blocks, chains, pieces

struct BlockDecomposition {
  // maximal gap-free runs per boundary cycle, cyclically ordered
  struct Run {
    int start;   // index of first edge of the run within the cycle
    int length;  // number of edges
    int gap_after;  // hanging half-edges between this run and the next
  };
  std::vector<Run> runs;
  bool whole_cycle_gapfree = false;  // single run covering the full cycle
};

struct BoundaryClassification {
  std::vector<BlockDecomposition> cycles;
  bool has_long_block = false;   // some block of length >= 5
  bool has_half_block = false;   // some block of length >= 4
  bool has_long_chain = false;   // blocks 4,3,3,...,3,4 with single-gap links
  bool has_half_chain = false;   // a cycle that is all 3-blocks, all gaps 1
};

BoundaryClassification classify_boundary(const TiledSurface& Y);

struct Piece {
  std::vector<BoundaryElement> path;  // contiguous along a walk cycle
  bool cyclic = false;                // whole boundary component
  int e() const;
  int he() const;
  int size() const { return (int)path.size(); }
  int defect() const { return e() - 3 * he(); }
  int chi() const { return cyclic ? 0 : 1; }
};

bool is_boundary_reduced(const TiledSurface& Y);
bool is_strongly_boundary_reduced(const TiledSurface& Y);

// Canonical epsilon-bad piece (minimal (|P|, canonical traversal key)), or
// nullopt if Y is epsilon-adapted.  Search restricted to |P| < 4 d /(3-eps)
// for proper subpaths; whole cycles always examined.
std::optional<Piece> find_bad_piece(const TiledSurface& Y, const mpq_class& eps);

// ------------------------------------------------------ morphisms & images

// A morphism Y -> Z is recorded as the vertex-image vector (propagation by
// labels determines everything else).
using Morphism = std::vector<int>;

std::vector<Morphism> morphisms(const TiledSurface& Y, const TiledSurface& Z);
std::vector<Morphism> embeddings(const TiledSurface& Y, const TiledSurface& Z);
bool is_embedding(const TiledSurface& Y, const Morphism& m);

// Extend a partial/seed assignment: image of vertex 0 = z0; returns the
// morphism or nullopt if propagation fails.
std::optional<Morphism> propagate_morphism(const TiledSurface& Y,
                                           const TiledSurface& Z, int z0);

// --------------------------------------------------------------- quotients

// All folded quotient graphs of the cycle C_gamma (1-skeleton), up to
// labeled isomorphism, each with one representative quotient morphism.
struct CycleQuotient {
  LabeledGraph image;
  std::vector<int> vertex_map;  // C vertex -> image vertex
};
std::vector<CycleQuotient> quotients_of_cycle(const TiledSurface& C);

// ------------------------------------------------------------------- fold

// Unique folded quotient of a possibly-unfolded pre-surface; merges octagons
// that become identical; throws std::logic_error if an octagon boundary word
// breaks.  Input passed as raw data because TiledSurface::finalize rejects
// unfolded complexes.
TiledSurface fold_surface(int nv, std::vector<GraphEdge> edges,
                          std::vector<std::array<int, 8>> octagons,
                          std::vector<int>* vertex_map = nullptr);

// ----------------------------------------------------------- serialization

std::string to_json(const TiledSurface& Y);        // versioned, round-trip
TiledSurface surface_from_json(const std::string&);

}  // namespace cover
