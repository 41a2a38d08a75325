#pragma once
// Folded {a,b,c,d}-labeled directed graphs: quotients/foldings (Stallings
// style), canonical forms, and isomorphism utilities.  Used for quotients of
// word cycles and for the core-graph constructions.

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cover {

struct GraphEdge {
  int label;  // 0..3 = a..d
  int src, dst;
  auto operator<=>(const GraphEdge&) const = default;
};

struct LabeledGraph {
  int nv = 0;
  std::vector<GraphEdge> edges;

  // adjacency indices (built by finalize); -1 = absent.  Only meaningful
  // when the graph is folded.
  std::vector<std::array<int, 4>> out_edge, in_edge;

  void finalize();          // build indices; throws std::logic_error if unfolded
  bool is_folded() const;   // per vertex+letter at most one out / one in

  int e_count() const { return (int)edges.size(); }
  int e_f(int f) const;     // number of f-labeled edges
  int chi() const { return nv - e_count(); }

  // Fold to the unique folded quotient.  vertex_map[i] = image of vertex i.
  LabeledGraph folded(std::vector<int>* vertex_map = nullptr) const;

  // Quotient by a vertex partition (classes = values of cls), then fold.
  LabeledGraph quotient(const std::vector<int>& cls,
                        std::vector<int>* vertex_map = nullptr) const;

  // Canonical code of a connected folded graph: minimal BFS code over start
  // vertices.  If pinned > 0, vertices 0..pinned-1 keep their identities
  // (they are numbered first, in order) and only codes with that property
  // are produced; used for isomorphism "fixing Y^(1)".
  std::vector<int> canonical_code(int pinned = 0) const;

  bool connected() const;

  auto operator<=>(const LabeledGraph&) const = default;
};

}  // namespace cover
