#include "cover/growth.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace cover {

// ------------------------------------------------------------- SubComplex

SubComplex SubComplex::empty(const TiledSurface& Z) {
  SubComplex s;
  s.Z = &Z;
  s.v.assign(Z.nv, 0);
  s.e.assign(Z.edges.size(), 0);
  s.o.assign(Z.octagons.size(), 0);
  return s;
}

SubComplex SubComplex::full(const TiledSurface& Z) {
  SubComplex s = empty(Z);
  std::fill(s.v.begin(), s.v.end(), 1);
  std::fill(s.e.begin(), s.e.end(), 1);
  std::fill(s.o.begin(), s.o.end(), 1);
  return s;
}

void SubComplex::add_edge(int ze) {
  e[ze] = 1;
  v[Z->edges[ze].src] = 1;
  v[Z->edges[ze].dst] = 1;
}

void SubComplex::add_octagon(int zo) {
  o[zo] = 1;
  for (int p = 0; p < 8; ++p) add_edge(Z->octagons[zo][p]);
}

bool SubComplex::is_subcomplex() const {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] && (!v[Z->edges[i].src] || !v[Z->edges[i].dst])) return false;
  for (size_t i = 0; i < o.size(); ++i)
    if (o[i])
      for (int p = 0; p < 8; ++p)
        if (!e[Z->octagons[i][p]]) return false;
  return true;
}

bool SubComplex::contains(const SubComplex& other) const {
  for (size_t i = 0; i < v.size(); ++i)
    if (other.v[i] && !v[i]) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (other.e[i] && !e[i]) return false;
  for (size_t i = 0; i < o.size(); ++i)
    if (other.o[i] && !o[i]) return false;
  return true;
}

SubComplex SubComplex::image_of_morphism(const TiledSurface& Y,
                                         const TiledSurface& Z,
                                         const Morphism& m) {
  SubComplex s = empty(Z);
  for (int yv = 0; yv < Y.nv; ++yv) s.add_vertex(m[yv]);
  std::vector<int> eimg(Y.edges.size());
  for (size_t i = 0; i < Y.edges.size(); ++i) {
    const auto& ed = Y.edges[i];
    int ze = Z.out_edge[m[ed.src]][ed.label];
    if (ze < 0 || Z.edges[ze].dst != m[ed.dst])
      throw std::domain_error("image_of_morphism: not a morphism");
    eimg[i] = ze;
    s.add_edge(ze);
  }
  for (const auto& oct : Y.octagons) {
    int zo = Z.edge_oct[eimg[oct[0]]][0];  // position 0 traverses `a` forward
    if (zo < 0) throw std::domain_error("image_of_morphism: octagon lost");
    s.add_octagon(zo);
  }
  return s;
}

TiledSurface SubComplex::extract(std::vector<int>* vmap, std::vector<int>* emap,
                                 std::vector<int>* omap) const {
  if (!is_subcomplex())
    throw std::domain_error("extract: not a subcomplex");
  TiledSurface Y;
  std::vector<int> vnum(Z->nv, -1), enum_(Z->edges.size(), -1);
  std::vector<int> vm, em, om;
  for (int i = 0; i < Z->nv; ++i)
    if (v[i]) {
      vnum[i] = Y.nv++;
      vm.push_back(i);
      if (!Z->vertex_label.empty())
        Y.vertex_label.push_back(Z->vertex_label[i]);
    }
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i]) {
      enum_[i] = (int)Y.edges.size();
      em.push_back((int)i);
      Y.edges.push_back({Z->edges[i].label, vnum[Z->edges[i].src],
                         vnum[Z->edges[i].dst]});
    }
  for (size_t i = 0; i < o.size(); ++i)
    if (o[i]) {
      om.push_back((int)i);
      std::array<int, 8> oc;
      for (int p = 0; p < 8; ++p) oc[p] = enum_[Z->octagons[i][p]];
      Y.octagons.push_back(oc);
    }
  Y.finalize();
  if (vmap) *vmap = std::move(vm);
  if (emap) *emap = std::move(em);
  if (omap) *omap = std::move(om);
  return Y;
}

// ------------------------------------------------------------------ theta

int theta(const TiledSurface& Y) { return Y.stats().theta(); }

// -------------------------------------------------------------- br_closure

namespace {

// The unique octagon of Z on the uncovered side of a gap-free run: all edges
// of the run lie on the boundary of the same octagon of Z \ Y.
int run_octagon(const SubComplex& Y, const std::vector<int>& emap,
                const BoundaryCycle& bc, const BlockDecomposition::Run& run) {
  int zo = -1;
  for (int k = 0; k < run.length; ++k) {
    const auto& de = bc.edges[(run.start + k) % bc.length()];
    int ze = emap[de.edge];
    int cand = Y.Z->edge_oct[ze][de.fwd ? 0 : 1];
    if (cand < 0 || Y.o[cand])
      throw std::logic_error("run_octagon: side unexpectedly covered");
    if (zo == -1) zo = cand;
    if (cand != zo)
      throw std::logic_error("run_octagon: run spans two octagons");
  }
  return zo;
}

// Long chain starting at run i (length >= 4, then 3-runs with gap-1 links,
// ending at a run of length >= 4); returns the run indices or empty.
std::vector<int> chain_from(const BlockDecomposition& dec, int i) {
  int R = (int)dec.runs.size();
  if (dec.whole_cycle_gapfree || dec.runs[i].length < 4) return {};
  for (int span = 2; span <= R; ++span) {
    int j = (i + span - 1) % R;
    bool ok = true;
    for (int k = 0; k < span - 1; ++k)
      if (dec.runs[(i + k) % R].gap_after != 1) ok = false;
    for (int k = 1; k < span - 1; ++k)
      if (dec.runs[(i + k) % R].length != 3) ok = false;
    if (ok && dec.runs[j].length >= 4) {
      std::vector<int> out;
      for (int k = 0; k < span; ++k) out.push_back((i + k) % R);
      return out;
    }
  }
  return {};
}

}  // namespace

SubComplex br_closure(const SubComplex& Y0, GrowthTrace* trace) {
  if (!Y0.is_subcomplex())
    throw std::domain_error("br_closure: not a subcomplex");
  SubComplex Y = Y0;
  for (;;) {
    std::vector<int> emap;
    TiledSurface sub = Y.extract(nullptr, &emap);
    auto cycles = boundary_cycles(sub);
    auto cl = classify_boundary(sub);
    if (!cl.has_long_block && !cl.has_long_chain) return Y;
    GrowthStep step;
    step.before = sub.stats();
    std::set<int> annex;
    if (cl.has_long_chain) {
      // first long chain in deterministic cycle/run order; annex the
      // bordering octagon of every run of the chain
      step.kind = 'C';
      for (size_t c = 0; c < cycles.size() && annex.empty(); ++c) {
        const auto& dec = cl.cycles[c];
        for (int i = 0; i < (int)dec.runs.size() && annex.empty(); ++i)
          for (int r : chain_from(dec, i))
            annex.insert(run_octagon(Y, emap, cycles[c], dec.runs[r]));
      }
    } else {
      // first long block in deterministic order
      step.kind = 'B';
      for (size_t c = 0; c < cycles.size() && annex.empty(); ++c) {
        const auto& dec = cl.cycles[c];
        for (const auto& run : dec.runs)
          if (run.length >= 5) {
            annex.insert(run_octagon(Y, emap, cycles[c], run));
            break;
          }
      }
    }
    if (annex.empty())
      throw std::logic_error("br_closure: classified but nothing to annex");
    for (int zo : annex) Y.add_octagon(zo);
    step.octagons_added = (int)annex.size();
    step.after = Y.extract().stats();
    if (trace) trace->steps.push_back(step);
  }
}

// --------------------------------------------------------------------- ovb

SubComplex ovb(const SubComplex& Y0, const mpq_class& eps, GrowthTrace* trace) {
  if (eps > mpq_class(1, 16))
    throw std::domain_error("ovb: eps must be <= 1/16");
  if (eps <= 0) throw std::domain_error("ovb: eps must be positive");
  if (!Y0.Z->boundaryless())
    throw std::domain_error("ovb: ambient must be boundaryless");
  SubComplex Y = Y0;
  for (;;) {
    // step (a): boundary reduce; stop if theta got positive
    Y = br_closure(Y, trace);
    std::vector<int> vmap, emap;
    TiledSurface sub = Y.extract(&vmap, &emap);
    if (trace) {
      ++trace->step_a_visits;
      trace->theta_at_a.push_back(sub.stats().theta());
    }
    if (sub.stats().theta() > 0) return Y;
    // step (b): stop if eps-adapted, else annex every octagon meeting P
    auto P = find_bad_piece(sub, eps);
    if (!P) return Y;
    GrowthStep step;
    step.kind = 'P';
    step.piece_size = P->size();
    step.before = sub.stats();
    std::set<int> annex;
    for (const auto& el : P->path) {
      if (el.is_edge) {
        int zo = Y.Z->edge_oct[emap[el.de.edge]][el.de.fwd ? 0 : 1];
        if (zo >= 0 && !Y.o[zo]) annex.insert(zo);
      } else {
        int ze = Y.Z->slot_edge(vmap[el.vertex], el.slot);
        for (int side : {0, 1}) {
          int zo = Y.Z->edge_oct[ze][side];
          if (zo >= 0 && !Y.o[zo]) annex.insert(zo);
        }
      }
    }
    if (annex.empty())
      throw std::logic_error("ovb: bad piece meets no new octagon");
    for (int zo : annex) Y.add_octagon(zo);
    step.octagons_added = (int)annex.size();
    step.after = Y.extract().stats();
    if (trace) trace->steps.push_back(step);
  }
}

// ------------------------------------------------------------------- trace

std::string GrowthTrace::to_json() const {
  nlohmann::json j;
  j["step_a_visits"] = step_a_visits;
  j["steps"] = nlohmann::json::array();
  for (const auto& s : steps) {
    nlohmann::json js;
    js["kind"] = std::string(1, s.kind);
    js["octagons_added"] = s.octagons_added;
    if (s.kind == 'P') js["piece_size"] = s.piece_size;
    auto stats_json = [](const SurfaceStats& st) {
      return nlohmann::json{{"v", st.v}, {"e", st.e},     {"f", st.f},
                            {"d", st.d}, {"theta", st.theta()}};
    };
    js["before"] = stats_json(s.before);
    js["after"] = stats_json(s.after);
    j["steps"].push_back(js);
  }
  return j.dump(2);
}

}  // namespace cover
