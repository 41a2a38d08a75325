#include "cover/core_graph.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace cover {

namespace {

// renumber so the (distinct) images of Y's vertices become 0..vY-1 in order;
// nullopt if two Y-vertices collided
std::optional<LabeledGraph> pin_first(const LabeledGraph& g,
                                      const std::vector<int>& yimg) {
  int vY = (int)yimg.size();
  std::vector<int> newidx(g.nv, -1);
  for (int i = 0; i < vY; ++i) {
    if (newidx[yimg[i]] != -1) return std::nullopt;
    newidx[yimg[i]] = i;
  }
  int c = vY;
  for (int v = 0; v < g.nv; ++v)
    if (newidx[v] == -1) newidx[v] = c++;
  LabeledGraph r;
  r.nv = g.nv;
  for (const auto& e : g.edges)
    r.edges.push_back({e.label, newidx[e.src], newidx[e.dst]});
  std::sort(r.edges.begin(), r.edges.end());
  r.finalize();
  return r;
}

}  // namespace

LabeledGraph hat_graph(const TiledSurface& Y) {
  LabeledGraph g;
  g.nv = Y.nv;
  g.edges = Y.edges;
  for (int v = 0; v < Y.nv; ++v) {
    std::array<int, 9> node;
    node[0] = node[8] = v;
    for (int k = 1; k <= 7; ++k) node[k] = g.nv++;
    for (int p = 0; p < 8; ++p) {
      if (kOctFwd[p])
        g.edges.push_back({kOctLabel[p], node[p], node[p + 1]});
      else
        g.edges.push_back({kOctLabel[p], node[p + 1], node[p]});
    }
  }
  std::vector<int> vm;
  LabeledGraph folded = g.folded(&vm);
  std::vector<int> yimg(Y.nv);
  for (int i = 0; i < Y.nv; ++i) yimg[i] = vm[i];
  auto pinned = pin_first(folded, yimg);
  if (!pinned)
    throw std::logic_error("hat_graph: folding merged two base vertices");
  return *pinned;
}

std::vector<LabeledGraph> enumerate_Q(const TiledSurface& Y, int cap) {
  LabeledGraph start = hat_graph(Y);
  if (start.nv > cap)
    throw std::runtime_error("enumerate_Q: hat graph exceeds the vertex cap");
  int vY = Y.nv;
  auto code_of = [&](const LabeledGraph& g) {
    if (g.nv == 0) return std::vector<int>{0};
    return g.canonical_code(vY > 0 ? vY : 0);
  };
  std::vector<LabeledGraph> out;
  std::set<std::vector<int>> seen;
  std::vector<LabeledGraph> stack{start};
  seen.insert(code_of(start));
  while (!stack.empty()) {
    LabeledGraph h = std::move(stack.back());
    stack.pop_back();
    out.push_back(h);
    for (int i = 0; i < h.nv; ++i)
      for (int j = i + 1; j < h.nv; ++j) {
        if (j < vY) continue;  // both pinned
        std::vector<int> cls(h.nv);
        for (int v = 0; v < h.nv; ++v) cls[v] = v - (v > j ? 1 : 0);
        cls[j] = i;
        std::vector<int> vm;
        LabeledGraph q = h.quotient(cls, &vm);
        std::vector<int> yimg(vY);
        for (int y = 0; y < vY; ++y) yimg[y] = vm[y];
        auto pinned = pin_first(q, yimg);
        if (!pinned) continue;  // collapsed the base vertex set
        auto code = code_of(*pinned);
        if (seen.insert(code).second) stack.push_back(std::move(*pinned));
      }
  }
  // deterministic order
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ the formula

RationalCountFormula xstar_rational(const TiledSurface& Y) {
  RationalCountFormula F;
  F.vY = Y.nv;
  auto st = Y.stats();
  F.fY = st.f;
  F.efY = st.ef;
  for (const auto& H : enumerate_Q(Y)) {
    RationalCountFormula::Term t;
    t.vH = H.nv;
    for (int f = 0; f < 4; ++f) t.efH[f] = H.e_f(f);
    t.chiH = H.chi();
    F.terms.push_back(t);
  }
  return F;
}

namespace {

Int falling(int n, int q) { return q > n ? Int(0) : pochhammer(Int(n), q); }

}  // namespace

Rat evaluate(const RationalCountFormula& F, int n) {
  if (F.vY > n)
    throw std::domain_error("evaluate: n smaller than the vertex count");
  Rat sum = 0;
  for (const auto& t : F.terms) {
    Int den = 1;
    for (int f = 0; f < 4; ++f) den *= falling(n, t.efH[f]);
    if (den == 0)
      throw std::domain_error("evaluate: vanishing falling factorial");
    Rat term(falling(n, t.vH), den);
    term.canonicalize();
    sum += term;
  }
  Rat r = sum / Rat(pochhammer(Int(n), F.vY));
  r.canonicalize();
  return r;
}

Int xstar_count_bruteforce(const TiledSurface& Y, int n) {
  if (n > 4)
    throw std::runtime_error("xstar_count_bruteforce: n <= 4 required");
  if (Y.nv > n)
    throw std::domain_error("xstar_count_bruteforce: n < vertex count");
  int off = n - Y.nv;
  auto all = all_perms(n);
  std::array<std::vector<Perm>, 4> ext;
  for (int f = 0; f < 4; ++f)
    for (const auto& p : all) {
      bool ok = true;
      for (const auto& e : Y.edges)
        if (e.label == f && p(off + e.src) != off + e.dst) ok = false;
      if (ok) ext[f].push_back(p);
    }
  Int count = 0;
  for (const auto& a : ext[0])
    for (const auto& b : ext[1])
      for (const auto& c : ext[2])
        for (const auto& d : ext[3])
          if (relator_value(a, b, c, d).fixes_pointwise(off, n)) ++count;
  return count;
}

Rat xi_nu_top(const TiledSurface& Y, int n) {
  auto F = xstar_rational(Y);
  if (F.vY > n)
    throw std::domain_error("xi_nu_top: n smaller than the vertex count");
  Rat sum = 0;
  for (const auto& t : F.terms) {
    Int den = 1;
    for (int f = 0; f < 4; ++f) den *= falling(n, t.efH[f]);
    if (den == 0)
      throw std::domain_error("xi_nu_top: vanishing falling factorial");
    Rat term(falling(n, t.vH), den);
    term.canonicalize();
    sum += term;
  }
  Int num = 1;
  for (int f = 0; f < 4; ++f) num *= falling(n, F.efY[f]);
  Rat r = sum * Rat(num, pochhammer(Int(n), F.fY));
  r.canonicalize();
  return r;
}

Int frobenius_commutator_count(int n, const Perm& t) {
  if (t.n() != n) throw std::domain_error("frobenius: size mismatch");
  Partition type(cycle_type(t));
  Int nfact = factorial(n);
  Int total = 0;
  for (const auto& lam : enumerate_partitions(n)) {
    Int d = hook_dim(lam);
    total += (nfact / d) * character_value(lam, type);
  }
  return total;
}

}  // namespace cover
