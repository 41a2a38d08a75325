#include "cover/labeled_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace cover {

void LabeledGraph::finalize() {
  out_edge.assign(nv, {-1, -1, -1, -1});
  in_edge.assign(nv, {-1, -1, -1, -1});
  for (int i = 0; i < (int)edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.src < 0 || e.src >= nv || e.dst < 0 || e.dst >= nv || e.label < 0 ||
        e.label > 3)
      throw std::logic_error("LabeledGraph: edge out of range");
    if (out_edge[e.src][e.label] != -1 || in_edge[e.dst][e.label] != -1)
      throw std::logic_error("LabeledGraph: not folded");
    out_edge[e.src][e.label] = i;
    in_edge[e.dst][e.label] = i;
  }
}

bool LabeledGraph::is_folded() const {
  std::set<std::pair<int, int>> outs, ins;
  for (const auto& e : edges) {
    if (!outs.insert({e.src, e.label}).second) return false;
    if (!ins.insert({e.dst, e.label}).second) return false;
  }
  return true;
}

int LabeledGraph::e_f(int f) const {
  int c = 0;
  for (const auto& e : edges) c += (e.label == f);
  return c;
}

namespace {
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};
}  // namespace

LabeledGraph LabeledGraph::folded(std::vector<int>* vertex_map) const {
  UF uf(nv);
  bool changed = true;
  while (changed) {
    changed = false;
    // group edges by (src class, label) and by (dst class, label)
    std::map<std::pair<int, int>, int> out_rep, in_rep;
    for (const auto& e : edges) {
      int s = uf.find(e.src), d = uf.find(e.dst);
      auto [ito, newo] = out_rep.try_emplace({s, e.label}, d);
      if (!newo && uf.unite(ito->second, d)) changed = true;
      auto [iti, newi] = in_rep.try_emplace({d, e.label}, s);
      if (!newi && uf.unite(iti->second, s)) changed = true;
    }
  }
  std::vector<int> newid(nv, -1);
  LabeledGraph g;
  for (int v = 0; v < nv; ++v) {
    int r = uf.find(v);
    if (newid[r] == -1) newid[r] = g.nv++;
  }
  std::set<GraphEdge> seen;
  for (const auto& e : edges) {
    GraphEdge ne{e.label, newid[uf.find(e.src)], newid[uf.find(e.dst)]};
    if (seen.insert(ne).second) g.edges.push_back(ne);
  }
  std::sort(g.edges.begin(), g.edges.end());
  if (vertex_map) {
    vertex_map->assign(nv, -1);
    for (int v = 0; v < nv; ++v) (*vertex_map)[v] = newid[uf.find(v)];
  }
  g.finalize();
  return g;
}

LabeledGraph LabeledGraph::quotient(const std::vector<int>& cls,
                                    std::vector<int>* vertex_map) const {
  // relabel by class, then fold
  int m = 0;
  for (int c : cls) m = std::max(m, c + 1);
  LabeledGraph g;
  g.nv = m;
  for (const auto& e : edges)
    g.edges.push_back({e.label, cls[e.src], cls[e.dst]});
  std::vector<int> fm;
  LabeledGraph r = g.folded(&fm);
  if (vertex_map) {
    vertex_map->assign(nv, -1);
    for (int v = 0; v < nv; ++v) (*vertex_map)[v] = fm[cls[v]];
  }
  return r;
}

bool LabeledGraph::connected() const {
  if (nv == 0) return true;
  std::vector<char> vis(nv, 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& e : edges) {
      int w = -1;
      if (e.src == v) w = e.dst;
      else if (e.dst == v) w = e.src;
      if (w >= 0 && !vis[w]) {
        vis[w] = 1;
        ++cnt;
        q.push(w);
      }
    }
  }
  return cnt == nv;
}

std::vector<int> LabeledGraph::canonical_code(int pinned) const {
  if (!is_folded()) throw std::logic_error("canonical_code: unfolded graph");
  std::vector<std::array<int, 4>> out(nv, {-1, -1, -1, -1}),
      in(nv, {-1, -1, -1, -1});
  for (const auto& e : edges) {
    out[e.src][e.label] = e.dst;
    in[e.dst][e.label] = e.src;
  }
  auto bfs_code = [&](const std::vector<int>& seeds) {
    std::vector<int> num(nv, -1), order;
    for (int s : seeds)
      if (num[s] == -1) {
        num[s] = (int)order.size();
        order.push_back(s);
      }
    for (size_t i = 0; i < order.size(); ++i) {
      int v = order[i];
      for (int f = 0; f < 4; ++f)
        for (int w : {out[v][f], in[v][f]})
          if (w >= 0 && num[w] == -1) {
            num[w] = (int)order.size();
            order.push_back(w);
          }
    }
    if ((int)order.size() != nv)
      throw std::logic_error("canonical_code: graph not connected from seeds");
    std::vector<int> code{nv};
    for (int v : order)
      for (int f = 0; f < 4; ++f) {
        code.push_back(out[v][f] >= 0 ? num[out[v][f]] : -1);
        code.push_back(in[v][f] >= 0 ? num[in[v][f]] : -1);
      }
    return code;
  };
  if (pinned > 0) {
    std::vector<int> seeds(pinned);
    std::iota(seeds.begin(), seeds.end(), 0);
    return bfs_code(seeds);
  }
  std::vector<int> best;
  for (int s = 0; s < nv; ++s) {
    auto c = bfs_code({s});
    if (best.empty() || c < best) best = c;
  }
  if (nv == 0) best = {0};
  return best;
}

}  // namespace cover
