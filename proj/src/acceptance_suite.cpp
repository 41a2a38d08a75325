#include "cover/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "cover/core_graph.hpp"
#include "cover/expectation.hpp"
#include "cover/growth.hpp"
#include "cover/partition_algebra.hpp"
#include "cover/perm.hpp"
#include "cover/resolution.hpp"
#include "cover/sym_rep.hpp"
#include "cover/tiled_surface.hpp"
#include "cover/trace_numerics.hpp"

namespace cover {

namespace {

struct Tally {
  long long checked = 0, bad = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad++ == 0) first = what;
  }
  std::string detail() const {
    std::ostringstream os;
    os << checked << " checks, " << bad << " violations";
    if (bad > 0) os << " (first: " << first << ")";
    return os.str();
  }
};

std::string rat_str(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

// ------------------------------------------------------------ shared corpus

// Representatives of the annuli C_gamma of all words of length <= 4, one per
// isomorphism class of the surface (the identities under test depend only on
// the surface, and rotations/free reductions of the word give the same one).
const std::vector<std::string>& word_corpus() {
  static const std::vector<std::string> corpus = [] {
    const std::string letters = "abcdABCD";
    std::vector<std::string> words;
    for (char x : letters) words.push_back(std::string(1, x));
    for (size_t len = 2; len <= 4; ++len) {
      std::vector<std::string> next;
      for (const auto& w : words)
        if (w.size() == len - 1)
          for (char x : letters) next.push_back(w + x);
      words.insert(words.end(), next.begin(), next.end());
    }
    std::set<std::string> seen;
    std::vector<std::string> out;
    for (const auto& w : words) {
      if (cyclic_reduce(w).empty()) continue;
      auto key = from_word(w).canonical_form();
      if (seen.insert(key).second) out.push_back(cyclic_reduce(w));
    }
    return out;
  }();
  return corpus;
}

// One cover per conjugacy orbit of relator quadruples: all per-cover counts
// (morphisms, embeddings, resolutions, growth outputs) are equivariant under
// simultaneous conjugation, which just relabels the cover's sheets.
std::vector<CoverTuple> cover_orbit_reps(int n) {
  const auto& E = hom_ensemble(n);
  auto sigmas = all_perms(n);
  std::set<std::vector<int>> seen;
  std::vector<CoverTuple> out;
  for (size_t i = 0; i < E.size(); ++i) {
    CoverTuple phi = E.tuple(i);
    std::vector<int> best;
    for (const auto& s : sigmas) {
      Perm si = s.inverse();
      std::vector<int> key;
      key.reserve(4 * n);
      for (const Perm* p : {&phi.a, &phi.b, &phi.c, &phi.d}) {
        Perm q = s.after(*p).after(si);
        key.insert(key.end(), q.img.begin(), q.img.end());
      }
      if (best.empty() || key < best) best = std::move(key);
    }
    if (seen.insert(std::move(best)).second) out.push_back(phi);
  }
  return out;
}

// ---------------------------------------------------------------- criteria

std::pair<bool, std::string> crit1_mednykh() {
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    Int formula = mednykh_count(n, 2);
    Int brute = (long)hom_ensemble(n).size();
    t.check(brute == formula, "n=" + std::to_string(n) + ": enumerated " +
                                  brute.get_str() + " vs formula " +
                                  formula.get_str());
  }
  return {t.bad == 0, "n=1..5 exhaustive vs (n!)^3 zeta(2); " + t.detail()};
}

std::pair<bool, std::string> crit2_zeta() {
  Tally t;
  Rat prev;
  for (int n = 3; n <= 9; ++n) {
    Rat z = witten_zeta(n, 2) - 2;
    t.check(z > 0, "zeta-2 not positive at n=" + std::to_string(n));
    if (n >= 5) t.check(z < prev, "no decrease at n=" + std::to_string(n));
    prev = z;
  }
  return {t.bad == 0,
          "positive on n=3..9, strictly decreasing on n=4..9 (the exact "
          "values increase once from n=3 to n=4, pinned in unit tests); " +
              t.detail()};
}

std::pair<bool, std::string> crit3_fix_oracle() {
  Tally t;
  t.check(expected_fix("a", 2) == 1, "E[fix_a](2) != 1");
  t.check(expected_fix("aa", 2) == 2, "E[fix_aa](2) != 2");

  const Rat table_a[4] = {Rat(1), Rat(10, 9), Rat(97, 89), Rat(4438, 4019)};
  const Rat table_aa[4] = {Rat(2), Rat(2), Rat(195, 89), Rat(8507, 4019)};
  std::ostringstream rows;
  std::vector<Rat> dist_a, dist_aa;
  for (int n = 2; n <= 5; ++n) {
    Rat ea = expected_fix("a", n), eaa = expected_fix("aa", n);
    t.check(ea == table_a[n - 2], "E[fix_a](" + std::to_string(n) + ")");
    t.check(eaa == table_aa[n - 2], "E[fix_aa](" + std::to_string(n) + ")");
    dist_a.push_back(abs(ea - 1));
    dist_aa.push_back(abs(eaa - 2));
    rows << " n=" << n << ": " << rat_str(ea) << ", " << rat_str(eaa) << ";";
  }
  // sound finite proxy for the O(1/n) convergence: every distance is bounded
  // by the first nonzero one, and the endpoint beats it strictly
  for (auto* dist : {&dist_a, &dist_aa}) {
    size_t f = 0;
    while (f < dist->size() && (*dist)[f] == 0) ++f;
    if (f == dist->size()) continue;
    for (size_t i = f + 1; i < dist->size(); ++i)
      t.check((*dist)[i] <= (*dist)[f], "distance above the first nonzero");
    t.check(dist->back() < (*dist)[f], "endpoint not strictly better");
  }
  return {t.bad == 0,
          "exact anchors + convergence table (E[fix_a], E[fix_aa]):" +
              rows.str() + " " + t.detail()};
}

std::pair<bool, std::string> crit4_and_5(std::string* detail5, bool* pass5) {
  const mpq_class eps(1, 32);
  Tally t4, t5;
  long long pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    for (const CoverTuple& phi : cover_orbit_reps(n)) {
      TiledSurface Z = phi.surface();
      for (const std::string& w : word_corpus()) {
        ++pairs;
        TiledSurface C = from_word(w);
        auto cr = resolve_in_cover(w, phi, eps);
        long long fx = eval_word(w, phi.a, phi.b, phi.c, phi.d).fix_count();
        auto ctx = [&] { return "gamma=" + w + " n=" + std::to_string(n); };

        // ---- criterion 4: the resolution identity, term by term
        t4.check((long long)cr.morphs.size() == fx, "morphism count " + ctx());
        long long total = 0;
        for (const auto& en : cr.entries) {
          long long emb = count_embeddings_in_cover(en.W, phi);
          t4.check(en.multiplicity == emb, "entry multiplicity " + ctx());
          total += emb;
        }
        t4.check(total == fx, "sum of embeddings != morphisms " + ctx());
        // unique factorization: distinct morphisms, each equal to emb o f
        std::set<Morphism> hs;
        for (const auto& rm : cr.morphs) {
          hs.insert(rm.h);
          bool ok = rm.entry_index < cr.entries.size();
          if (ok) {
            const auto& en = cr.entries[rm.entry_index];
            for (size_t v = 0; ok && v < rm.h.size(); ++v)
              ok = rm.h[v] == rm.emb[rm.f[v]] && en.W.nv > rm.f[v];
          }
          t4.check(ok, "factorization h = emb o f " + ctx());
        }
        t4.check((long long)hs.size() == fx, "morphisms not distinct " + ctx());

        // ---- criterion 5: OvB contracts on the same corpus
        for (const auto& rm : cr.morphs) {
          SubComplex Y = SubComplex::image_of_morphism(C, Z, rm.h);
          SurfaceStats start = Y.extract().stats();
          GrowthTrace tr;
          SubComplex Yp = ovb(Y, eps, &tr);
          TiledSurface out = Yp.extract();
          SurfaceStats st = out.stats();
          t5.check(is_boundary_reduced(out), "output not BR " + ctx());
          bool adapted = !find_bad_piece(out, eps).has_value();
          t5.check(adapted || st.f > st.d, "two-options violated " + ctx());
          t5.check(st.d <= 3 * start.d, "d growth bound " + ctx());
          t5.check(st.f <= start.f + 4 * start.d + start.d * start.d,
                   "f growth bound " + ctx());
          t5.check(tr.step_a_visits <= start.d + 2, "step-(a) visits " + ctx());
          for (const auto& s : tr.steps) {
            if (s.kind == 'P') {
              mpq_class dd(s.after.d - s.before.d);
              mpq_class dth(s.after.theta() - s.before.theta());
              t5.check(dd < 2 * eps * s.piece_size, "step-(b) d " + ctx());
              t5.check(dth > (mpq_class(1, 8) - 2 * eps) * s.piece_size,
                       "step-(b) theta " + ctx());
            } else {
              t5.check(s.after.d <= s.before.d, "BR step d " + ctx());
            }
          }
          for (size_t i = 2; i < tr.theta_at_a.size(); ++i)
            t5.check(tr.theta_at_a[i] > tr.theta_at_a[i - 1],
                     "theta not increasing at step (a) " + ctx());
        }
      }
    }
  }
  std::string scope = std::to_string(word_corpus().size()) +
                      " word classes x covers (one per conjugacy orbit) at "
                      "n=1..4, " +
                      std::to_string(pairs) + " pairs; ";
  *pass5 = t5.bad == 0;
  *detail5 = scope + t5.detail();
  return {t4.bad == 0, scope + t4.detail()};
}

std::pair<bool, std::string> crit6_formula() {
  Tally t;
  for (const TiledSurface& Y :
       {single_vertex(), from_word("a"), from_word("ab")}) {
    for (int n = 3; n <= 5; ++n) {
      double exact = expected_embeddings(Y, n).get_d();
      double viaXi = en_emb_formula(Y, n);
      double rel = std::abs(viaXi - exact) / std::max(std::abs(exact), 1e-30);
      t.check(rel <= 1e-6, "surface v=" + std::to_string(Y.nv) +
                               " n=" + std::to_string(n) +
                               " rel err=" + std::to_string(rel));
    }
  }
  return {t.bad == 0,
          "kernel formula vs exhaustive oracle, 3 surfaces x n=3..5 at "
          "1e-6 relative; " +
              t.detail()};
}

std::pair<bool, std::string> crit7_rational() {
  Tally t;
  // rational formula vs brute force on the feasible test surfaces
  for (const TiledSurface& Y : {single_vertex(), from_word("a")}) {
    auto F = xstar_rational(Y);
    for (int n = std::max(Y.nv, 1); n <= 4; ++n) {
      Rat viaF;
      try {
        viaF = evaluate(F, n);
      } catch (const std::domain_error&) {
        continue;
      }
      Int f4 = factorial(n) * factorial(n) * factorial(n) * factorial(n);
      t.check(Rat(xstar_count_bruteforce(Y, n)) == viaF * Rat(f4),
              "brute force mismatch at n=" + std::to_string(n));
    }
  }
  // octagon-closed covers: the formula collapses to the single sharp term
  for (int n = 2; n <= 4; ++n) {
    const auto& E = hom_ensemble(n);
    for (size_t i = 0; i < E.size(); i += std::max<size_t>(1, E.size() / 5)) {
      TiledSurface Z = E.tuple(i).surface();
      auto F = xstar_rational(Z);
      Int f4 = factorial(n) * factorial(n) * factorial(n) * factorial(n);
      t.check(F.terms.size() == 1 && evaluate(F, n) * Rat(f4) == 1 &&
                  xstar_count_bruteforce(Z, n) == 1,
              "cover check at n=" + std::to_string(n));
    }
  }
  // character-theoretic oracle for the single vertex at n = 8
  {
    auto F = xstar_rational(single_vertex());
    int n = 8;
    Int nfact = factorial(n);
    Rat A = 0;
    for (const auto& mu : enumerate_partitions(n)) {
      Int z = 1;
      std::map<int, int> mult;
      for (int p : mu.parts) ++mult[p];
      for (auto [k, m] : mult) {
        for (int i = 0; i < m; ++i) z *= k;
        z *= factorial(m);
      }
      Int csize = nfact / z;
      int fixed = mult.count(1) ? mult[1] : 0;
      Int N = 0;
      for (const auto& lam : enumerate_partitions(n))
        N += (nfact / hook_dim(lam)) * character_value(lam, mu);
      A += Rat(N * csize * fixed, Int(n));
    }
    Rat sq = Rat(nfact * nfact);
    Rat count = A * A + (sq - A) * (sq - A) / Rat(n - 1);
    t.check(evaluate(F, n) * Rat(nfact * nfact * nfact * nfact) == count,
            "character oracle mismatch at n=8");
  }
  // representation route equals the rational route at the top level
  auto agree = [&](const TiledSurface& Y, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
      double a = xi_top_term(Y, n), b = xi_nu_top(Y, n).get_d();
      t.check(std::abs(a - b) <= 1e-6 * std::max(std::abs(b), 1.0),
              "xi top-level mismatch at n=" + std::to_string(n));
    }
  };
  agree(from_word("a"), 3, 5);
  agree(single_vertex(), 2, 5);
  agree(hom_ensemble(2).tuple(0).surface(), 2, 4);
  return {t.bad == 0,
          "rational count vs brute force / character oracle, plus top-level "
          "agreement of both xi routes; " +
              t.detail()};
}

std::pair<bool, std::string> crit8_inequalities() {
  Tally t;
  // matrix-coefficient and displacement bounds over every enumerated tuple
  for (const TiledSurface& Y :
       {single_vertex(), from_word("a"), from_word("ab")}) {
    auto st = Y.stats();
    bool adapted = !find_bad_piece(Y, mpq_class(1, 32)).has_value();
    for (int n = std::max(st.v, 2); n <= 6; ++n) {
      auto fam = construct_interchange(Y, n);
      for (const Partition& nu : enumerate_partitions(n - st.v))
        for (const Partition& lambda : enumerate_partitions(n - st.f)) {
          if (!lambda.contains(nu)) continue;
          std::array<std::vector<Partition>, 4> mus;
          bool ok = true;
          for (int f = 0; f < 4; ++f) {
            for (const Partition& m :
                 sub_partitions_of_size(lambda, n - st.ef[f]))
              if (m.contains(nu)) mus[f].push_back(m);
            if (mus[f].empty()) ok = false;
          }
          if (!ok) continue;
          for (const Partition& ma : mus[0])
            for (const Partition& mb : mus[1])
              for (const Partition& mc : mus[2])
                for (const Partition& md : mus[3]) {
                  std::array<Partition, 4> mu{ma, mb, mc, md};
                  int base = n - st.v;
                  std::array<std::vector<StandardTableau>, 4> R, S;
                  bool empty = false;
                  for (int f = 0; f < 4; ++f) {
                    R[f] = enumerate_tableaux(SkewShape(mu[f], nu), base);
                    S[f] = enumerate_tableaux(SkewShape(lambda, mu[f]),
                                              n - st.ef[f]);
                    if (R[f].empty() || S[f].empty()) empty = true;
                  }
                  if (empty) continue;
                  double upsum = 0.0;
                  std::array<size_t, 16> dims, cur{};
                  for (int f = 0; f < 4; ++f) {
                    dims[4 * f] = dims[4 * f + 1] = R[f].size();
                    dims[4 * f + 2] = dims[4 * f + 3] = S[f].size();
                  }
                  for (;;) {
                    TableauTuple tup;
                    for (int f = 0; f < 4; ++f) {
                      tup.rp[f] = R[f][cur[4 * f]];
                      tup.rm[f] = R[f][cur[4 * f + 1]];
                      tup.s[f] = S[f][cur[4 * f + 2]];
                      tup.t[f] = S[f][cur[4 * f + 3]];
                    }
                    double M = m_product(fam, nu, mu, lambda, tup);
                    int D = d_top(fam, tup);
                    upsum += M;
                    t.check(std::abs(M) <= 1.0 + 1e-12, "|M| > 1");
                    t.check(D >= 0 && D <= 8 * (lambda.b() - nu.b()),
                            "D_top range");
                    int gap = lambda.first_part() + nu.first_part() -
                              (n - st.f) - (st.v - st.f) * (st.v - st.f);
                    if (gap > 0) {
                      double ratio =
                          double((st.v - st.f) * (st.v - st.f)) /
                          (lambda.first_part() + nu.first_part() - (n - st.f));
                      t.check(std::abs(M) <= std::pow(ratio, D) + 1e-12,
                              "decay bound");
                    }
                    if (adapted) {
                      double lower = lambda.b() + 3 * nu.b() - ma.b() -
                                     mb.b() - mc.b() - md.b() +
                                     SkewShape(lambda, nu).b() / 32.0;
                      t.check(D + 1e-9 >= lower, "adapted lower bound");
                    }
                    int p = 0;
                    while (p < 16 && ++cur[p] == dims[p]) cur[p++] = 0;
                    if (p == 16) break;
                  }
                  double up = upsilon(fam, nu, mu, lambda);
                  t.check(std::abs(up - upsum) <=
                              1e-9 * std::max(1.0, std::abs(upsum)),
                          "upsilon mismatch");
                }
        }
    }
  }
  // dimension and counting lemmas on exhaustive small domains
  for (int n = 1; n <= 7; ++n)
    for (int m = 0; m <= n; ++m)
      for (const auto& mu : enumerate_partitions(m)) {
        Int total = 0;
        for (const auto& lam : enumerate_partitions(n))
          if (lam.contains(mu))
            total += skew_dim(SkewShape(lam, mu)) * hook_dim(lam);
        t.check(total == (factorial(n) / factorial(m)) * hook_dim(mu),
                "induced dimension sum");
      }
  auto ipow = [](Int base, int e) {
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
  };
  for (int n = 1; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n)) {
      int bl = lam.b();
      for (int m = std::max(1, 2 * bl); m <= n; ++m)
        for (const auto& nu : sub_partitions_of_size(lam, m)) {
          int bn = nu.b();
          Rat ratio(hook_dim(lam), hook_dim(nu));
          ratio.canonicalize();
          Rat lower(ipow(Int(n - bl), bl),
                    ipow(Int(std::max(bl, 1)), bl) * ipow(Int(m), bn));
          lower.canonicalize();
          t.check(ratio >= lower, "dimension-ratio lower bound");
          if (m - bn > 0) {
            Rat upper(ipow(Int(std::max(bn, 1)), bn) * ipow(Int(n), bl),
                      ipow(Int(m - bn), bn));
            upper.canonicalize();
            t.check(ratio <= upper, "dimension-ratio upper bound");
          }
        }
    }
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& nu : sub_partitions_of_size(lam, m)) {
          SkewShape sh(lam, nu);
          Int d = skew_dim(sh);
          t.check(d <= pochhammer(Int(sh.size()), sh.b()) &&
                      d <= pochhammer(Int(sh.size()), sh.b_check()),
                  "skew dimension bound");
        }
  for (int n = 1; n <= 40; ++n)
    for (int q = 0; 2 * q <= n; ++q) {
      double nq = pochhammer(Int(n), q).get_d();
      double top = std::pow((double)n, q);
      t.check(nq <= top * (1 + 1e-12) &&
                  nq >= top * std::exp(-(double)q * q / n) * (1 - 1e-12),
              "falling-factorial bounds");
    }
  // surface-statistics inequalities on the corpus
  std::vector<TiledSurface> surfaces;
  for (const std::string& w : word_corpus()) surfaces.push_back(from_word(w));
  for (int n = 2; n <= 3; ++n)
    for (const CoverTuple& phi : cover_orbit_reps(n))
      surfaces.push_back(phi.surface());
  for (const TiledSurface& Y : surfaces) {
    auto st = Y.stats();
    if (Y.connected() && !(st.v == 1 && st.e == 0)) {
      t.check(0 <= st.D() && st.D() <= st.d, "D vs d");
      t.check(2 * st.chi() <= -4 * st.f + st.d, "Euler characteristic bound");
    }
  }
  return {t.bad == 0,
          "tableau-tuple bounds at n<=6 plus dimension/counting/surface "
          "lemmas on exhaustive domains; " +
              t.detail()};
}

std::pair<bool, std::string> crit9_trace() {
  Tally t;
  for (int i = 0; i <= 10000; ++i)
    t.check(fourier_phi0(i * 0.01, false) >= -1e-9, "real-axis grid");
  for (int i = 0; i <= 500; ++i)
    t.check(fourier_phi0(i * 0.01, true) >= -1e-9, "imaginary-axis grid");
  for (double T : {1.0, 2.0, 4.7}) {
    TestFunction phi = build_phi(T);
    for (double xi : {0.0, 0.3, 1.2, 2.8}) {
      double lhs = fourier(phi, xi, false), rhs = T * fourier_phi0(T * xi);
      t.check(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs)),
              "scaling identity");
    }
  }
  for (double eps : {0.1, 0.3, 0.5}) {
    double ce = c_eps(eps);
    t.check(ce > 0, "C_eps not positive");
    for (double T : {1.0, 2.0, 4.0 * std::log(10.0)}) {
      TestFunction phi = build_phi(T);
      for (double tt : {0.0, 0.25, 0.5, 1.0})
        t.check(fourier(phi, tt, true) >=
                    ce * T * std::exp(T * (1.0 - eps) * tt) * (1 - 1e-9),
                "fourier lower bound");
    }
  }
  return {t.bad == 0,
          "grid non-negativity, scaling identity, constructive fourier "
          "lower bound; " +
              t.detail()};
}

std::pair<bool, std::string> crit10_statement() {
  return {true,
          "NOT reproducible at desk scale (stated, not tested): the "
          "asymptotic spectral-gap statement (3/16 - eps for random covers), "
          "the eigenvalue density bound, and the (log n)^A / n error "
          "constant are probabilistic n -> infinity results.  The substitute "
          "is criteria 1-9, which verify exactly every counting formula, "
          "expectation identity, and inequality those proofs consume."};
}

}  // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<CriterionResult> run_acceptance(std::ostream* log) {
  std::vector<CriterionResult> out;
  std::string d5, d4;
  bool p5 = false, p4 = false;
  double s45 = 0;

  struct Item {
    int id;
    std::string name;
    std::function<std::pair<bool, std::string>()> fn;
  };
  std::vector<Item> items = {
      {1, "homomorphism count identity", crit1_mednykh},
      {2, "zeta positivity and decay", crit2_zeta},
      {3, "fixed-point expectation oracle", crit3_fix_oracle},
      {4, "resolution identity",
       [&] {
         auto r = crit4_and_5(&d5, &p5);
         p4 = r.first;
         d4 = r.second;
         return r;
       }},
      {5, "growth-algorithm contracts", [&] { return std::pair{p5, d5}; }},
      {6, "embedding-expectation formula", crit6_formula},
      {7, "rational counting formula", crit7_rational},
      {8, "exact inequality suites", crit8_inequalities},
      {9, "trace-formula numerics", crit9_trace},
      {10, "scope statement", crit10_statement},
  };

  for (auto& it : items) {
    CriterionResult r;
    r.id = it.id;
    r.name = it.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [pass, detail] = it.fn();
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (it.id == 4) s45 = r.seconds;  // criteria 4 and 5 share one sweep
    if (it.id == 5) r.seconds = s45;
    if (log)
      *log << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL")
           << " - " << r.name << " (" << r.detail << ")" << std::endl;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cover
