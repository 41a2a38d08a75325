#include "cover/tiled_surface.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cover {

// ------------------------------------------------------------ finalization

void TiledSurface::finalize() {
  out_edge.assign(nv, {-1, -1, -1, -1});
  in_edge.assign(nv, {-1, -1, -1, -1});
  for (int i = 0; i < (int)edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv || e.label < 0 ||
        e.label > 3)
      throw std::logic_error("TiledSurface: edge out of range");
    if (out_edge[e.src][e.label] != -1 || in_edge[e.dst][e.label] != -1)
      throw std::logic_error("TiledSurface: not folded");
    out_edge[e.src][e.label] = i;
    in_edge[e.dst][e.label] = i;
  }
  edge_oct.assign(edges.size(), {-1, -1});
  for (int o = 0; o < (int)octagons.size(); ++o) {
    const auto& oct = octagons[o];
    for (int p = 0; p < 8; ++p) {
      int e = oct[p];
      if (e < 0 || e >= (int)edges.size())
        throw std::logic_error("TiledSurface: octagon edge out of range");
      if (edges[e].label != kOctLabel[p])
        throw std::logic_error("TiledSurface: octagon label mismatch");
      int side = kOctFwd[p] ? 0 : 1;
      if (edge_oct[e][side] != -1)
        throw std::logic_error("TiledSurface: edge side bounds two octagons");
      edge_oct[e][side] = o;
      // continuity with next position
      int q = (p + 1) % 8;
      int e2 = oct[q];
      int endv = kOctFwd[p] ? edges[e].dst : edges[e].src;
      int startv = kOctFwd[q] ? edges[e2].src : edges[e2].dst;
      if (endv != startv)
        throw std::logic_error("TiledSurface: octagon path not closed");
    }
  }
  if (!vertex_label.empty() && (int)vertex_label.size() != nv)
    throw std::logic_error("TiledSurface: vertex_label size mismatch");
}

SurfaceStats TiledSurface::stats() const {
  SurfaceStats s;
  s.v = nv;
  s.e = (int)edges.size();
  s.f = (int)octagons.size();
  for (const auto& e : edges) s.ef[e.label]++;
  s.d = 2 * s.e - 8 * s.f;
  return s;
}

bool TiledSurface::connected() const {
  if (nv == 0) return true;
  std::vector<char> vis(nv, 0);
  std::vector<std::vector<int>> adj(nv);
  for (const auto& e : edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == nv;
}

int TiledSurface::slot_edge(int v, int slot) const {
  for (int f = 0; f < 4; ++f) {
    if (kSlotOut[f] == slot) return out_edge[v][f];
    if (kSlotIn[f] == slot) return in_edge[v][f];
  }
  return -1;
}

// ------------------------------------------------------------ construction

TiledSurface from_word(const std::string& w_in) {
  std::string w = cyclic_reduce(w_in);
  if (w.empty()) throw std::domain_error("from_word: word reduces to identity");
  TiledSurface Y;
  int L = (int)w.size();
  Y.nv = L;
  for (int i = 0; i < L; ++i) {
    int f = letter_index(w[i]);
    int j = (i + 1) % L;
    if (letter_is_inverse(w[i]))
      Y.edges.push_back({f, j, i});
    else
      Y.edges.push_back({f, i, j});
  }
  Y.finalize();
  return Y;
}

TiledSurface cover_from_permutations(const Perm& a, const Perm& b,
                                     const Perm& c, const Perm& d) {
  int n = a.n();
  if (b.n() != n || c.n() != n || d.n() != n)
    throw std::domain_error("cover_from_permutations: size mismatch");
  if (!relator_value(a, b, c, d).is_identity())
    throw std::domain_error("cover_from_permutations: relator not satisfied");
  TiledSurface Z;
  Z.nv = n;
  Z.vertex_label.resize(n);
  std::iota(Z.vertex_label.begin(), Z.vertex_label.end(), 1);
  const Perm* g[4] = {&a, &b, &c, &d};
  // edge id for letter f at vertex i is 4*i + f ... but we store per letter
  // blocks: edge f*n + i runs i -> g_f(i)
  for (int f = 0; f < 4; ++f)
    for (int i = 0; i < n; ++i) Z.edges.push_back({f, i, (*g[f])(i)});
  auto edge_id = [&](int f, int srcv) { return f * n + srcv; };
  for (int i = 0; i < n; ++i) {
    std::array<int, 8> oct{};
    int cur = i;
    for (int p = 0; p < 8; ++p) {
      int f = kOctLabel[p];
      if (kOctFwd[p]) {
        oct[p] = edge_id(f, cur);
        cur = (*g[f])(cur);
      } else {
        int prev = g[f]->inverse()(cur);
        oct[p] = edge_id(f, prev);
        cur = prev;
      }
    }
    if (cur != i)
      throw std::logic_error("cover_from_permutations: octagon did not close");
    Z.octagons.push_back(oct);
  }
  Z.finalize();
  return Z;
}

TiledSurface single_octagon() {
  TiledSurface Y;
  Y.nv = 8;
  std::array<int, 8> oct{};
  for (int p = 0; p < 8; ++p) {
    int f = kOctLabel[p];
    int u = p, v = (p + 1) % 8;
    if (kOctFwd[p])
      Y.edges.push_back({f, u, v});
    else
      Y.edges.push_back({f, v, u});
    oct[p] = p;
  }
  Y.octagons.push_back(oct);
  Y.finalize();
  return Y;
}

TiledSurface single_vertex() {
  TiledSurface Y;
  Y.nv = 1;
  Y.finalize();
  return Y;
}

// ---------------------------------------------------------------- boundary

namespace {

// arrival slot of a directed edge at its head vertex
int arrival_vertex(const TiledSurface& Y, const DirectedEdgeRef& de) {
  const auto& e = Y.edges[de.edge];
  return de.fwd ? e.dst : e.src;
}
int arrival_slot(const TiledSurface& Y, const DirectedEdgeRef& de) {
  const auto& e = Y.edges[de.edge];
  return de.fwd ? kSlotIn[e.label] : kSlotOut[e.label];
}
// directed edge departing via (vertex, slot); slot must be occupied
DirectedEdgeRef departure(const TiledSurface& Y, int v, int slot) {
  for (int f = 0; f < 4; ++f) {
    if (kSlotOut[f] == slot) return {Y.out_edge[v][f], true};
    if (kSlotIn[f] == slot) return {Y.in_edge[v][f], false};
  }
  return {-1, true};
}
bool side_on_octagon(const TiledSurface& Y, const DirectedEdgeRef& de) {
  return Y.edge_oct[de.edge][de.fwd ? 0 : 1] != -1;
}

}  // namespace

std::vector<BoundaryWalkCycle> boundary_walk(const TiledSurface& Y) {
  std::vector<BoundaryWalkCycle> out;
  // boundary directed edges in deterministic order
  std::map<DirectedEdgeRef, bool> visited;
  std::vector<DirectedEdgeRef> all;
  for (int e = 0; e < (int)Y.edges.size(); ++e)
    for (bool fwd : {true, false}) {
      DirectedEdgeRef de{e, fwd};
      if (!side_on_octagon(Y, de)) {
        all.push_back(de);
        visited[de] = false;
      }
    }
  for (const auto& start : all) {
    if (visited[start]) continue;
    BoundaryWalkCycle cyc;
    DirectedEdgeRef cur = start;
    do {
      visited[cur] = true;
      cyc.elems.push_back({true, cur, -1, -1});
      int v = arrival_vertex(Y, cur);
      int s = arrival_slot(Y, cur);
      for (int k = 1; k <= 8; ++k) {
        int t = (s + k) % 8;
        int e = Y.slot_edge(v, t);
        if (e == -1) {
          cyc.elems.push_back({false, {}, v, t});
        } else {
          cur = departure(Y, v, t);
          break;
        }
      }
    } while (!(cur == start));
    out.push_back(std::move(cyc));
  }
  // vertex-only boundary cycles around edge-free vertices
  for (int v = 0; v < Y.nv; ++v) {
    bool bare = true;
    for (int f = 0; f < 4; ++f)
      if (Y.out_edge[v][f] != -1 || Y.in_edge[v][f] != -1) bare = false;
    if (!bare) continue;
    BoundaryWalkCycle cyc;
    for (int s = 0; s < 8; ++s) cyc.elems.push_back({false, {}, v, s});
    out.push_back(std::move(cyc));
  }
  return out;
}

int BoundaryWalkCycle::edge_count() const {
  int c = 0;
  for (const auto& el : elems) c += el.is_edge;
  return c;
}

std::vector<BoundaryCycle> boundary_cycles(const TiledSurface& Y) {
  std::vector<BoundaryCycle> out;
  for (const auto& walk : boundary_walk(Y)) {
    if (walk.edge_count() == 0) continue;
    BoundaryCycle bc;
    // walk.elems starts with an edge by construction
    int gap = 0;
    for (const auto& el : walk.elems) {
      if (el.is_edge) {
        if (!bc.edges.empty()) bc.gaps.push_back(gap);
        bc.edges.push_back(el.de);
        gap = 0;
      } else {
        ++gap;
      }
    }
    bc.gaps.push_back(gap);  // gap after the last edge, wrapping to first
    // rotate to start at the minimal directed edge, for stable output
    int best = 0;
    for (int i = 1; i < (int)bc.edges.size(); ++i)
      if (bc.edges[i] < bc.edges[best]) best = i;
    std::rotate(bc.edges.begin(), bc.edges.begin() + best, bc.edges.end());
    std::rotate(bc.gaps.begin(), bc.gaps.begin() + best, bc.gaps.end());
    out.push_back(std::move(bc));
  }
  return out;
}

// --------------------------------------------------- blocks & chains

static BlockDecomposition decompose_blocks(const BoundaryCycle& bc) {
  BlockDecomposition dec;
  int L = bc.length();
  bool all_zero = std::all_of(bc.gaps.begin(), bc.gaps.end(),
                              [](int g) { return g == 0; });
  if (all_zero) {
    dec.whole_cycle_gapfree = true;
    dec.runs.push_back({0, L, 0});
    return dec;
  }
  // find a position starting right after a gap
  int start = 0;
  for (int i = 0; i < L; ++i)
    if (bc.gaps[(i + L - 1) % L] > 0) {
      start = i;
      break;
    }
  int i = start;
  do {
    int len = 1;
    while (bc.gaps[(i + len - 1) % L] == 0) ++len;
    dec.runs.push_back({i, len, bc.gaps[(i + len - 1) % L]});
    i = (i + len) % L;
  } while (i != start);
  return dec;
}

BoundaryClassification classify_boundary(const TiledSurface& Y) {
  BoundaryClassification cl;
  for (const auto& bc : boundary_cycles(Y)) {
    auto dec = decompose_blocks(bc);
    int R = (int)dec.runs.size();
    bool cyc_half_chain = !dec.whole_cycle_gapfree && R > 0;
    for (const auto& r : dec.runs) {
      if (r.length >= 4) cl.has_half_block = true;
      if (r.length >= 5) cl.has_long_block = true;
      if (r.length != 3 || r.gap_after != 1) cyc_half_chain = false;
    }
    if (dec.whole_cycle_gapfree) {
      int L = dec.runs[0].length;
      if (L >= 4) cl.has_half_block = true;
      if (L >= 5) cl.has_long_block = true;
    } else {
      // long chain: consecutive runs first>=4, middles==3, last>=4, links==1,
      // at least two runs, no run reused (so span <= R runs)
      for (int i = 0; i < R && !cl.has_long_chain; ++i) {
        if (dec.runs[i].length < 4) continue;
        for (int span = 2; span <= R; ++span) {
          int j = (i + span - 1) % R;
          // all links between runs i..j must be exactly 1
          bool ok = true;
          for (int k = 0; k < span - 1; ++k)
            if (dec.runs[(i + k) % R].gap_after != 1) ok = false;
          // middle runs exactly 3
          for (int k = 1; k < span - 1; ++k)
            if (dec.runs[(i + k) % R].length != 3) ok = false;
          if (ok && dec.runs[j].length >= 4) {
            cl.has_long_chain = true;
            break;
          }
          // once a middle run fails or a link breaks, longer spans from i
          // could still work only if the failure was the last run's length;
          // keep scanning spans (cheap).
        }
      }
    }
    if (cyc_half_chain) cl.has_half_chain = true;
    cl.cycles.push_back(std::move(dec));
  }
  return cl;
}

bool is_boundary_reduced(const TiledSurface& Y) {
  auto cl = classify_boundary(Y);
  return !cl.has_long_block && !cl.has_long_chain;
}

bool is_strongly_boundary_reduced(const TiledSurface& Y) {
  auto cl = classify_boundary(Y);
  return !cl.has_half_block && !cl.has_half_chain;
}

// -------------------------------------------------------------- pieces

int Piece::e() const {
  int c = 0;
  for (const auto& el : path) c += el.is_edge;
  return c;
}
int Piece::he() const { return (int)path.size() - e(); }

// canonical numbering: BFS numbering achieving the minimal code, ties broken
// by smallest start vertex
static std::vector<int> canonical_numbering(const TiledSurface& Y) {
  std::vector<int> bestnum, bestcode;
  for (int s = 0; s < Y.nv; ++s) {
    std::vector<int> num(Y.nv, -1), order;
    num[s] = 0;
    order.push_back(s);
    for (size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (int f = 0; f < 4; ++f)
        for (int eid : {Y.out_edge[v][f], Y.in_edge[v][f]})
          if (eid >= 0) {
            int w = Y.edges[eid].src == v ? Y.edges[eid].dst : Y.edges[eid].src;
            // careful with loops: other endpoint
            if (Y.edges[eid].src == v && Y.edges[eid].dst == v) w = v;
            if (num[w] == -1) {
              num[w] = (int)order.size();
              order.push_back(w);
            }
          }
    }
    if ((int)order.size() != Y.nv) continue;  // disconnected; skip
    std::vector<int> code;
    for (int v : order)
      for (int f = 0; f < 4; ++f) {
        int eo = Y.out_edge[v][f], ei = Y.in_edge[v][f];
        code.push_back(eo >= 0 ? num[Y.edges[eo].dst] : -1);
        code.push_back(ei >= 0 ? num[Y.edges[ei].src] : -1);
      }
    std::vector<int> ostarts;
    for (const auto& oct : Y.octagons)
      ostarts.push_back(num[kOctFwd[0] ? Y.edges[oct[0]].src
                                       : Y.edges[oct[0]].dst]);
    std::sort(ostarts.begin(), ostarts.end());
    code.insert(code.end(), ostarts.begin(), ostarts.end());
    if (bestcode.empty() || code < bestcode) {
      bestcode = code;
      bestnum = num;
    }
  }
  if (bestnum.empty()) {
    bestnum.resize(Y.nv);
    std::iota(bestnum.begin(), bestnum.end(), 0);
  }
  return bestnum;
}

std::string TiledSurface::canonical_form() const {
  auto num = canonical_numbering(*this);
  // rebuild code from numbering (same construction as above)
  std::vector<int> inv(nv, -1);
  for (int v = 0; v < nv; ++v) inv[num[v]] = v;
  std::ostringstream os;
  os << "v" << nv << ";";
  for (int i = 0; i < nv; ++i) {
    int v = inv[i];
    for (int f = 0; f < 4; ++f) {
      int eo = out_edge[v][f], ei = in_edge[v][f];
      os << (eo >= 0 ? num[edges[eo].dst] : -1) << ","
         << (ei >= 0 ? num[edges[ei].src] : -1) << ",";
    }
    os << ";";
  }
  std::vector<int> ostarts;
  for (const auto& oct : octagons) ostarts.push_back(num[edges[oct[0]].src]);
  std::sort(ostarts.begin(), ostarts.end());
  os << "o";
  for (int x : ostarts) os << x << ",";
  return os.str();
}

TiledSurface canonicalize(const TiledSurface& Y, std::vector<int>* vmap) {
  auto num = canonical_numbering(Y);
  TiledSurface C;
  C.nv = Y.nv;
  std::vector<int> eperm(Y.edges.size());
  std::iota(eperm.begin(), eperm.end(), 0);
  std::vector<GraphEdge> renamed(Y.edges.size());
  for (size_t i = 0; i < Y.edges.size(); ++i)
    renamed[i] = {Y.edges[i].label, num[Y.edges[i].src], num[Y.edges[i].dst]};
  std::sort(eperm.begin(), eperm.end(),
            [&](int i, int j) { return renamed[i] < renamed[j]; });
  std::vector<int> enew(Y.edges.size());
  for (size_t k = 0; k < eperm.size(); ++k) {
    enew[eperm[k]] = (int)k;
    C.edges.push_back(renamed[eperm[k]]);
  }
  for (const auto& oct : Y.octagons) {
    std::array<int, 8> oc;
    for (int p = 0; p < 8; ++p) oc[p] = enew[oct[p]];
    C.octagons.push_back(oc);
  }
  std::sort(C.octagons.begin(), C.octagons.end());
  C.finalize();
  if (vmap) *vmap = num;
  return C;
}

static std::vector<int> piece_key(const TiledSurface& Y, const Piece& P,
                                  const std::vector<int>& num) {
  std::vector<int> key;
  for (const auto& el : P.path) {
    if (el.is_edge) {
      const auto& e = Y.edges[el.de.edge];
      key.push_back(0);
      key.push_back(e.label);
      key.push_back(el.de.fwd ? 0 : 1);
      key.push_back(num[e.src]);
      key.push_back(num[e.dst]);
    } else {
      key.push_back(1);
      key.push_back(el.slot);
      key.push_back(num[el.vertex]);
      key.push_back(0);
      key.push_back(0);
    }
  }
  return key;
}

std::optional<Piece> find_bad_piece(const TiledSurface& Y,
                                    const mpq_class& eps) {
  auto walks = boundary_walk(Y);
  int d = Y.stats().d;
  std::optional<Piece> best;
  std::vector<int> bestkey;
  std::vector<int> num;  // computed lazily
  auto consider = [&](Piece&& P) {
    // bad iff defect(P) - 4 chi(P) + eps|P| > 0
    mpq_class lhs = mpq_class(P.defect() - 4 * P.chi()) + eps * P.size();
    if (lhs <= 0) return;
    if (num.empty()) num = canonical_numbering(Y);
    auto key = piece_key(Y, P, num);
    if (!best || P.size() < best->size() ||
        (P.size() == best->size() && key < bestkey)) {
      best = std::move(P);
      bestkey = std::move(key);
    }
  };
  // length cap for proper subpaths: |P| < 4 d / (3 - eps)
  auto len_ok = [&](int len) {
    return mpq_class(len) * (3 - eps) < mpq_class(4 * d);
  };
  for (const auto& walk : walks) {
    int L = (int)walk.elems.size();
    // whole cycle
    Piece whole;
    whole.path = walk.elems;
    whole.cyclic = true;
    consider(std::move(whole));
    // proper contiguous subpaths
    for (int start = 0; start < L; ++start)
      for (int len = 1; len < L; ++len) {
        if (!len_ok(len)) break;
        Piece P;
        P.cyclic = false;
        for (int k = 0; k < len; ++k)
          P.path.push_back(walk.elems[(start + k) % L]);
        consider(std::move(P));
      }
  }
  return best;
}

// ----------------------------------------------------- morphisms & images

std::optional<Morphism> propagate_morphism(const TiledSurface& Y,
                                           const TiledSurface& Z, int z0) {
  if (Y.nv == 0) return Morphism{};
  Morphism img(Y.nv, -1);
  img[0] = z0;
  std::queue<int> q;
  q.push(0);
  std::vector<char> seen(Y.nv, 0);
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int f = 0; f < 4; ++f) {
      int eo = Y.out_edge[v][f];
      if (eo >= 0) {
        int ze = Z.out_edge[img[v]][f];
        if (ze < 0) return std::nullopt;
        int w = Y.edges[eo].dst, zw = Z.edges[ze].dst;
        if (img[w] == -1) {
          img[w] = zw;
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        } else if (img[w] != zw)
          return std::nullopt;
      }
      int ei = Y.in_edge[v][f];
      if (ei >= 0) {
        int ze = Z.in_edge[img[v]][f];
        if (ze < 0) return std::nullopt;
        int w = Y.edges[ei].src, zw = Z.edges[ze].src;
        if (img[w] == -1) {
          img[w] = zw;
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        } else if (img[w] != zw)
          return std::nullopt;
      }
    }
  }
  for (int v = 0; v < Y.nv; ++v)
    if (img[v] == -1) return std::nullopt;  // Y must be connected
  // octagons must map to octagons
  for (const auto& oct : Y.octagons) {
    const auto& e0 = Y.edges[oct[0]];
    int ze0 = Z.out_edge[img[e0.src]][kOctLabel[0]];
    if (ze0 < 0) return std::nullopt;
    int zo = Z.edge_oct[ze0][0];
    if (zo < 0) return std::nullopt;
    for (int p = 0; p < 8; ++p) {
      const auto& ep = Y.edges[oct[p]];
      int zep = Z.out_edge[img[ep.src]][ep.label];
      if (zep < 0 || Z.edges[zep].dst != img[ep.dst]) return std::nullopt;
      if (Z.octagons[zo][p] != zep) return std::nullopt;
    }
  }
  return img;
}

std::vector<Morphism> morphisms(const TiledSurface& Y, const TiledSurface& Z) {
  std::vector<Morphism> out;
  if (Y.nv == 0) return out;
  for (int z0 = 0; z0 < Z.nv; ++z0)
    if (auto m = propagate_morphism(Y, Z, z0)) out.push_back(std::move(*m));
  return out;
}

bool is_embedding(const TiledSurface& Y, const Morphism& m) {
  std::set<int> s(m.begin(), m.end());
  return (int)s.size() == Y.nv;
}

std::vector<Morphism> embeddings(const TiledSurface& Y, const TiledSurface& Z) {
  std::vector<Morphism> out;
  for (auto& m : morphisms(Y, Z))
    if (is_embedding(Y, m)) out.push_back(std::move(m));
  return out;
}

// ------------------------------------------------------------- quotients

std::vector<CycleQuotient> quotients_of_cycle(const TiledSurface& C) {
  if (!C.octagons.empty())
    throw std::domain_error("quotients_of_cycle: expected a bare word cycle");
  LabeledGraph G;
  G.nv = C.nv;
  G.edges = C.edges;
  G.finalize();
  std::map<std::vector<int>, CycleQuotient> found;
  // identity quotient
  {
    std::vector<int> idm(C.nv);
    std::iota(idm.begin(), idm.end(), 0);
    found[G.canonical_code()] = {G, idm};
  }
  // DFS over successive pair merges with folding
  std::vector<std::pair<LabeledGraph, std::vector<int>>> stack{
      {G, found.begin()->second.vertex_map}};
  while (!stack.empty()) {
    auto [H, vmap] = std::move(stack.back());
    stack.pop_back();
    for (int u = 0; u < H.nv; ++u)
      for (int w = u + 1; w < H.nv; ++w) {
        std::vector<int> cls(H.nv);
        std::iota(cls.begin(), cls.end(), 0);
        cls[w] = u;
        // compact class ids
        std::vector<int> remap(H.nv, -1);
        int m = 0;
        for (int& c : cls) {
          if (remap[c] == -1) remap[c] = m++;
          c = remap[c];
        }
        std::vector<int> qmap;
        LabeledGraph H2 = H.quotient(cls, &qmap);
        auto code = H2.canonical_code();
        if (found.count(code)) continue;
        std::vector<int> vmap2(C.nv);
        for (int v = 0; v < C.nv; ++v) vmap2[v] = qmap[vmap[v]];
        found[code] = {H2, vmap2};
        stack.push_back({H2, vmap2});
      }
  }
  std::vector<CycleQuotient> out;
  for (auto& [code, q] : found) out.push_back(std::move(q));
  return out;
}

// ------------------------------------------------------------------ fold

TiledSurface fold_surface(int nv, std::vector<GraphEdge> edges,
                          std::vector<std::array<int, 8>> octagons,
                          std::vector<int>* vertex_map) {
  LabeledGraph G;
  G.nv = nv;
  G.edges = edges;
  std::vector<int> vm;
  LabeledGraph F = G.folded(&vm);
  // map old edge id -> new edge id
  std::map<GraphEdge, int> eid;
  for (int i = 0; i < (int)F.edges.size(); ++i) eid[F.edges[i]] = i;
  std::vector<int> emap(edges.size());
  for (int i = 0; i < (int)edges.size(); ++i) {
    GraphEdge ne{edges[i].label, vm[edges[i].src], vm[edges[i].dst]};
    auto it = eid.find(ne);
    if (it == eid.end())
      throw std::logic_error("fold_surface: folded edge lookup failed");
    emap[i] = it->second;
  }
  std::set<std::array<int, 8>> octs;
  for (const auto& o : octagons) {
    std::array<int, 8> no{};
    for (int p = 0; p < 8; ++p) no[p] = emap[o[p]];
    octs.insert(no);
  }
  TiledSurface Y;
  Y.nv = F.nv;
  Y.edges = F.edges;
  Y.octagons.assign(octs.begin(), octs.end());
  Y.finalize();  // throws if the fold broke an octagon or the surface cond.
  if (vertex_map) *vertex_map = vm;
  return Y;
}

// ---------------------------------------------------------- serialization

std::string to_json(const TiledSurface& Y) {
  nlohmann::json j;
  j["format"] = "tiled-surface";
  j["version"] = 1;
  j["nv"] = Y.nv;
  const char* letters = "abcd";
  j["edges"] = nlohmann::json::array();
  for (const auto& e : Y.edges)
    j["edges"].push_back({std::string(1, letters[e.label]), e.src, e.dst});
  j["octagons"] = nlohmann::json::array();
  for (const auto& o : Y.octagons) j["octagons"].push_back(o);
  if (!Y.vertex_label.empty()) j["vertex_labels"] = Y.vertex_label;
  return j.dump();
}

TiledSurface surface_from_json(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  if (j.value("format", "") != "tiled-surface" || j.value("version", 0) != 1)
    throw std::domain_error("surface_from_json: unknown format/version");
  TiledSurface Y;
  Y.nv = j.at("nv").get<int>();
  for (const auto& e : j.value("edges", nlohmann::json::array())) {
    std::string lab = e.at(0).get<std::string>();
    Y.edges.push_back(
        {letter_index(lab.at(0)), e.at(1).get<int>(), e.at(2).get<int>()});
  }
  for (const auto& o : j.value("octagons", nlohmann::json::array())) {
    std::array<int, 8> oct{};
    for (int p = 0; p < 8; ++p) oct[p] = o.at(p).get<int>();
    Y.octagons.push_back(oct);
  }
  if (j.contains("vertex_labels"))
    Y.vertex_label = j["vertex_labels"].get<std::vector<int>>();
  Y.finalize();
  return Y;
}

}  // namespace cover
