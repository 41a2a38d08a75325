#include "cover/expectation.hpp"

#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "cover/partition_algebra.hpp"
#include "cover/sym_rep.hpp"

namespace cover {

namespace {

// -------------------------------------------- multiplication tables for S_n

struct GroupTables {
  int n = 0;
  std::vector<Perm> perms;
  std::vector<std::vector<uint8_t>> mult;  // mult[i][j] = id of perms[i] o perms[j]
  std::vector<uint8_t> inv;
  std::vector<uint8_t> fix;
  std::map<std::vector<int>, uint8_t> id_of;
};

const GroupTables& tables(int n) {
  static std::mutex mu;
  static std::map<int, GroupTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GroupTables t;
  t.n = n;
  t.perms = all_perms(n);
  int N = (int)t.perms.size();
  if (N > 255) throw std::runtime_error("GroupTables: n too large");
  for (int i = 0; i < N; ++i) t.id_of[t.perms[i].img] = (uint8_t)i;
  t.mult.assign(N, std::vector<uint8_t>(N));
  t.inv.resize(N);
  t.fix.resize(N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j)
      t.mult[i][j] = t.id_of.at(t.perms[i].after(t.perms[j]).img);
    t.inv[i] = t.id_of.at(t.perms[i].inverse().img);
    t.fix[i] = (uint8_t)t.perms[i].fix_count();
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

// --------------------------------------------------------------- ensembles

HomEnsemble enumerate_homs(int n) {
  if (n < 1) throw std::domain_error("enumerate_homs: n must be positive");
  if (n > 5)
    throw std::runtime_error("enumerate_homs: n > 5 exceeds the oracle range");
  const auto& t = tables(n);
  int N = (int)t.perms.size();
  HomEnsemble E;
  E.n = n;
  E.perms = t.perms;
  // commutator [x,y] = x y x^-1 y^-1 evaluated under the left-to-right word
  // convention: phi(xyXY) = y^-1 o x^-1 o y o x
  auto comm = [&](int x, int y) {
    return t.mult[t.inv[y]][t.mult[t.inv[x]][t.mult[y][x]]];
  };
  std::vector<std::vector<std::pair<uint8_t, uint8_t>>> ab(N), cd(N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      ab[comm(x, y)].push_back({(uint8_t)x, (uint8_t)y});
      cd[t.inv[comm(x, y)]].push_back({(uint8_t)x, (uint8_t)y});
    }
  for (int k = 0; k < N; ++k)
    for (auto [a, b] : ab[k])
      for (auto [c, d] : cd[k]) E.tuples.push_back({a, b, c, d});
  return E;
}

const HomEnsemble& hom_ensemble(int n) {
  static std::mutex mu;
  static std::map<int, HomEnsemble> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, enumerate_homs(n)).first->second;
}

HomEnsemble enumerate_homs_bruteforce(int n) {
  if (n < 1 || n > 4)
    throw std::runtime_error("enumerate_homs_bruteforce: 1 <= n <= 4 required");
  HomEnsemble E;
  E.n = n;
  E.perms = all_perms(n);
  int N = (int)E.perms.size();
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d)
          if (relator_value(E.perms[a], E.perms[b], E.perms[c], E.perms[d])
                  .is_identity())
            E.tuples.push_back(
                {(uint8_t)a, (uint8_t)b, (uint8_t)c, (uint8_t)d});
  return E;
}

// ------------------------------------------------------- morphism counting

namespace {

// Propagation plan for counting labeled-graph morphisms of Y's 1-skeleton
// into covers: spanning-tree steps determine all images from each component
// root's image; remaining edges are consistency checks.
struct MorphPlan {
  struct Step {
    int v, parent, label;
    bool fwd;  // true: image[v] = alpha_label(image[parent])
  };
  struct Comp {
    int root;
    std::vector<int> vertices;
    std::vector<Step> steps;
    std::vector<GraphEdge> checks;
  };
  int nv = 0;
  std::vector<Comp> comps;
};

MorphPlan build_plan(const TiledSurface& Y) {
  MorphPlan plan;
  plan.nv = Y.nv;
  std::vector<char> seen(Y.nv, 0);
  std::vector<char> edge_used(Y.edges.size(), 0);
  for (int s = 0; s < Y.nv; ++s) {
    if (seen[s]) continue;
    MorphPlan::Comp comp;
    comp.root = s;
    seen[s] = 1;
    comp.vertices.push_back(s);
    for (size_t qi = 0; qi < comp.vertices.size(); ++qi) {
      int v = comp.vertices[qi];
      for (int f = 0; f < 4; ++f) {
        int eo = Y.out_edge[v][f], ei = Y.in_edge[v][f];
        if (eo >= 0 && !edge_used[eo]) {
          int w = Y.edges[eo].dst;
          if (!seen[w]) {
            edge_used[eo] = 1;
            seen[w] = 1;
            comp.vertices.push_back(w);
            comp.steps.push_back({w, v, f, true});
          }
        }
        if (ei >= 0 && !edge_used[ei]) {
          int w = Y.edges[ei].src;
          if (!seen[w]) {
            edge_used[ei] = 1;
            seen[w] = 1;
            comp.vertices.push_back(w);
            comp.steps.push_back({w, v, f, false});
          }
        }
      }
    }
    for (size_t e = 0; e < Y.edges.size(); ++e)
      if (!edge_used[e] && seen[Y.edges[e].src] &&
          std::find(comp.vertices.begin(), comp.vertices.end(),
                    Y.edges[e].src) != comp.vertices.end())
        comp.checks.push_back(Y.edges[e]);
    plan.comps.push_back(std::move(comp));
  }
  return plan;
}

struct CompImage {
  uint32_t mask;  // Z-vertices used; valid only if injective within the comp
  bool injective;
};

// all images of one component for root image r, or nothing on failure
bool propagate_comp(const MorphPlan::Comp& comp, const Perm* g,
                    const Perm* ginv, int r, std::vector<int>& img) {
  img[comp.root] = r;
  for (const auto& st : comp.steps)
    img[st.v] = st.fwd ? g[st.label](img[st.parent])
                       : ginv[st.label](img[st.parent]);
  for (const auto& ck : comp.checks)
    if (g[ck.label](img[ck.src]) != img[ck.dst]) return false;
  return true;
}

long long count_morphisms(const MorphPlan& plan, int n, const Perm* g,
                          const Perm* ginv) {
  std::vector<int> img(plan.nv);
  long long total = 1;
  for (const auto& comp : plan.comps) {
    long long c = 0;
    for (int r = 0; r < n; ++r)
      if (propagate_comp(comp, g, ginv, r, img)) ++c;
    total *= c;
  }
  return total;
}

long long count_embeddings(const MorphPlan& plan, int n, const Perm* g,
                           const Perm* ginv) {
  if (plan.nv > n) return 0;
  std::vector<int> img(plan.nv);
  std::vector<std::vector<uint32_t>> choices;  // per-comp injective masks
  for (const auto& comp : plan.comps) {
    std::vector<uint32_t> masks;
    for (int r = 0; r < n; ++r) {
      if (!propagate_comp(comp, g, ginv, r, img)) continue;
      uint32_t m = 0;
      bool inj = true;
      for (int v : comp.vertices) {
        uint32_t bit = 1u << img[v];
        if (m & bit) inj = false;
        m |= bit;
      }
      if (inj) masks.push_back(m);
    }
    if (masks.empty()) return 0;
    choices.push_back(std::move(masks));
  }
  // combine components with pairwise-disjoint vertex images
  long long total = 0;
  std::vector<size_t> idx(choices.size(), 0);
  auto rec = [&](auto&& self, size_t k, uint32_t used) -> void {
    if (k == choices.size()) {
      ++total;
      return;
    }
    for (uint32_t m : choices[k])
      if (!(m & used)) self(self, k + 1, used | m);
  };
  rec(rec, 0, 0);
  return total;
}

}  // namespace

long long count_morphisms_in_cover(const TiledSurface& Y,
                                   const CoverTuple& phi) {
  auto plan = build_plan(Y);
  Perm g[4] = {phi.a, phi.b, phi.c, phi.d};
  Perm ginv[4];
  for (int f = 0; f < 4; ++f) ginv[f] = g[f].inverse();
  return count_morphisms(plan, phi.n, g, ginv);
}

long long count_embeddings_in_cover(const TiledSurface& Y,
                                    const CoverTuple& phi) {
  auto plan = build_plan(Y);
  Perm g[4] = {phi.a, phi.b, phi.c, phi.d};
  Perm ginv[4];
  for (int f = 0; f < 4; ++f) ginv[f] = g[f].inverse();
  return count_embeddings(plan, phi.n, g, ginv);
}

// ------------------------------------------------------------ expectations

mpq_class expected_fix(const std::string& gamma, int n) {
  if (!is_valid_word(gamma))
    throw std::domain_error("expected_fix: invalid word");
  if (gamma.empty()) {
    std::fprintf(stderr,
                 "warning: expected_fix called with the identity word; "
                 "fix(id) = n\n");
    return mpq_class(n);
  }
  const auto& E = hom_ensemble(n);
  const auto& t = tables(n);
  int idpe = t.id_of.at(Perm::identity(n).img);
  Int total = 0;
  for (const auto& tu : E.tuples) {
    int cur = idpe;
    for (char ch : gamma) {
      int f = letter_index(ch);
      int gid = tu[f];
      if (letter_is_inverse(ch)) gid = t.inv[gid];
      cur = t.mult[gid][cur];  // apply letters left to right
    }
    total += t.fix[cur];
  }
  mpq_class r(total, Int((unsigned long)E.size()));
  r.canonicalize();
  return r;
}

namespace {

mpq_class expected_count(const TiledSurface& Y, int n, bool inj) {
  const auto& E = hom_ensemble(n);
  const auto& t = tables(n);
  auto plan = build_plan(Y);
  Int total = 0;
  Perm g[4], ginv[4];
  for (const auto& tu : E.tuples) {
    for (int f = 0; f < 4; ++f) {
      g[f] = E.perms[tu[f]];
      ginv[f] = E.perms[t.inv[tu[f]]];
    }
    total += (long)(inj ? count_embeddings(plan, n, g, ginv)
                        : count_morphisms(plan, n, g, ginv));
  }
  mpq_class r(total, Int((unsigned long)E.size()));
  r.canonicalize();
  return r;
}

}  // namespace

mpq_class expected_morphisms(const TiledSurface& Y, int n) {
  return expected_count(Y, n, false);
}

mpq_class expected_embeddings(const TiledSurface& Y, int n) {
  return expected_count(Y, n, true);
}

double en_emb_formula(const TiledSurface& Y, int n) {
  auto st = Y.stats();
  if (n < st.v) return 0.0;
  Int f3 = factorial(n) * factorial(n) * factorial(n);
  Rat pre(f3 * pochhammer(Int(n), st.v) * pochhammer(Int(n), st.f),
          mednykh_count(n, 2));
  for (int f = 0; f < 4; ++f) pre /= Rat(pochhammer(Int(n), st.ef[f]));
  pre.canonicalize();
  return pre.get_d() * xi_n(Y, n);
}

// ------------------------------------------------------ word combinatorics

long long divisor_count(long long q) {
  if (q <= 0) throw std::domain_error("divisor_count: q must be positive");
  long long c = 0;
  for (long long d = 1; d * d <= q; ++d)
    if (q % d == 0) c += (d * d == q) ? 1 : 2;
  return c;
}

PowerDecomposition is_proper_power(const std::string& w) {
  std::string r = cyclic_reduce(w);
  PowerDecomposition out;
  out.root = r;
  if (r.empty()) return out;
  int L = (int)r.size();
  for (int p = 1; p < L; ++p) {
    if (L % p != 0) continue;
    bool period = true;
    for (int i = 0; i + p < L && period; ++i)
      if (r[i] != r[i + p]) period = false;
    if (period) {
      out.proper = true;
      out.root = r.substr(0, p);
      out.exponent = L / p;
      return out;
    }
  }
  return out;
}

}  // namespace cover
