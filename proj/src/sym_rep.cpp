#include "cover/sym_rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cover {

namespace {

// ------------------------------------------------- orthogonal-form kernel

// cell (row, col) of each entry of a standard tableau, keyed by entry value
std::map<int, std::pair<int, int>> cell_of_entry(const StandardTableau& T) {
  std::map<int, std::pair<int, int>> m;
  const auto& sh = T.shape;
  for (int r = 0; r < sh.outer.rows(); ++r)
    for (int c = sh.inner.part(r); c < sh.outer.part(r); ++c)
      m[T.at(r, c)] = {r, c};
  return m;
}

DMat identity_mat(size_t d) {
  DMat m(d, std::vector<double>(d, 0.0));
  for (size_t i = 0; i < d; ++i) m[i][i] = 1.0;
  return m;
}

DMat mat_mul(const DMat& a, const DMat& b) {
  size_t d = a.size();
  DMat r(d, std::vector<double>(d, 0.0));
  for (size_t i = 0; i < d; ++i)
    for (size_t k = 0; k < d; ++k) {
      double aik = a[i][k];
      if (aik == 0.0) continue;
      for (size_t j = 0; j < d; ++j) r[i][j] += aik * b[k][j];
    }
  return r;
}

// Matrix of the adjacent transposition swapping entries (base+q+1, base+q+2)
// on Tab(shape): Young's orthogonal form two-box rule with axial distance
// d = content(e+1) - content(e), content = col - row.
DMat elementary_matrix(const SkewShape& shape, int q,
                       const std::vector<StandardTableau>& tabs,
                       const std::map<std::vector<int>, int>& index) {
  size_t dim = tabs.size();
  DMat m(dim, std::vector<double>(dim, 0.0));
  for (size_t i = 0; i < dim; ++i) {
    const StandardTableau& T = tabs[i];
    auto cells = cell_of_entry(T);
    int e1 = T.base + q + 1, e2 = T.base + q + 2;
    auto [r1, c1] = cells.at(e1);
    auto [r2, c2] = cells.at(e2);
    int d = (c2 - r2) - (c1 - r1);
    m[i][i] = 1.0 / d;
    if (d != 1 && d != -1) {
      // swapped tableau is standard
      StandardTableau S = T;
      S.entry[r1][c1 - shape.inner.part(r1)] = e2;
      S.entry[r2][c2 - shape.inner.part(r2)] = e1;
      int j = index.at(S.row_reading_word());
      m[j][i] = std::sqrt(1.0 - 1.0 / (double(d) * d));
    }
  }
  return m;
}

struct BasisData {
  std::vector<StandardTableau> tabs;
  std::map<std::vector<int>, int> index;  // row-reading word -> position
  std::vector<DMat> elem;                 // elementary matrices, q = 0..size-2
};

std::map<std::pair<std::string, int>, BasisData> g_basis_cache;
std::mutex g_basis_mutex;

const BasisData& basis_data(const SkewShape& shape, int base, int dim_cap) {
  std::lock_guard<std::mutex> lock(g_basis_mutex);
  auto key = std::make_pair(shape.to_string(), base);
  auto it = g_basis_cache.find(key);
  if (it != g_basis_cache.end()) {
    if ((int)it->second.tabs.size() > dim_cap)
      throw std::length_error("skew_matrix: dimension cap exceeded");
    return it->second;
  }
  Int d = skew_dim(shape);
  if (d > dim_cap) throw std::length_error("skew_matrix: dimension cap exceeded");
  BasisData bd;
  bd.tabs = enumerate_tableaux(shape, base);
  for (size_t i = 0; i < bd.tabs.size(); ++i)
    bd.index[bd.tabs[i].row_reading_word()] = (int)i;
  for (int q = 0; q + 1 < shape.size(); ++q)
    bd.elem.push_back(elementary_matrix(shape, q, bd.tabs, bd.index));
  return g_basis_cache[key] = std::move(bd);
}

DMat skew_matrix_impl(const SkewShape& shape, int base, const Perm& g,
                      int dim_cap) {
  int size = shape.size();
  for (int p = 0; p < g.n(); ++p)
    if (g(p) != p && (p < base || p >= base + size))
      throw std::domain_error("skew_matrix: permutation moves a fixed point");
  const BasisData& bd = basis_data(shape, base, dim_cap);
  if (bd.tabs.empty()) {
    // zero-dimensional skew module does not occur: |Tab| >= 1 only when the
    // shape is valid; an invalid shape is a caller bug
    throw std::logic_error("skew_matrix: empty tableau basis");
  }
  DMat m = identity_mat(bd.tabs.size());
  for (int k : g.adjacent_factorization()) m = mat_mul(m, bd.elem[k - base]);
  return m;
}

// --------------------------------------------------------------- tableaux

// Concatenate r in Tab(mu/nu) and s in Tab(lambda/mu) into Tab(lambda/nu).
StandardTableau concat_tableau(const StandardTableau& r,
                               const StandardTableau& s, int base) {
  const Partition& nu = r.shape.inner;
  const Partition& mu = r.shape.outer;
  const Partition& lambda = s.shape.outer;
  StandardTableau T;
  T.shape = SkewShape(lambda, nu);
  T.base = base;
  T.entry.resize(lambda.rows());
  for (int row = 0; row < lambda.rows(); ++row)
    for (int c = nu.part(row); c < lambda.part(row); ++c)
      T.entry[row].push_back(c < mu.part(row) ? r.at(row, c) : s.at(row, c));
  return T;
}

// |pi(A) \ B| on entry sets (1-based entries, pi on 0-based points)
int set_displacement(const Perm& pi, const std::vector<int>& A,
                     const std::vector<int>& B) {
  int cnt = 0;
  for (int e : A) {
    int img = pi(e - 1) + 1;
    if (std::find(B.begin(), B.end(), img) == B.end()) ++cnt;
  }
  return cnt;
}

// factor k -> (letter of source tuple, letter of target tuple) and which of
// the four per-letter tableaux form source/target; encoded via lambdas below

struct FactorRefs {
  // indices into {rp, rm} x {s, t} per side: source = r_src join x_src
  int letter_src, letter_dst;
  bool src_r_plus, src_is_s;  // source = r^{+/-} join (s or t)
  bool dst_r_plus, dst_is_s;
};

// The eight factors of M / D_top, aligned with InterchangeFamily::products().
constexpr FactorRefs kFactors[8] = {
    {0, 1, true, true, false, true},    // <pi1 w_{ra+ s_a}, w_{rb- s_b}>
    {1, 0, true, true, true, false},    // <pi2 w_{rb+ s_b}, w_{ra+ t_a}>
    {0, 1, false, false, true, false},  // <pi3 w_{ra- t_a}, w_{rb+ t_b}>
    {1, 2, false, false, false, true},  // <pi4 w_{rb- t_b}, w_{rc- s_c}>
    {2, 3, true, true, false, true},    // <pi5 w_{rc+ s_c}, w_{rd- s_d}>
    {3, 2, true, true, true, false},    // <pi6 w_{rd+ s_d}, w_{rc+ t_c}>
    {2, 3, false, false, true, false},  // <pi7 w_{rc- t_c}, w_{rd+ t_d}>
    {3, 0, false, false, false, true},  // <pi8 w_{rd- t_d}, w_{ra- s_a}>
};

const StandardTableau& pick_r(const TableauTuple& tup, int letter, bool plus) {
  return plus ? tup.rp[letter] : tup.rm[letter];
}
const StandardTableau& pick_x(const TableauTuple& tup, int letter, bool is_s) {
  return is_s ? tup.s[letter] : tup.t[letter];
}

}  // namespace

DMat rep_matrix(const Partition& lambda, const Perm& g, int dim_cap) {
  if (g.n() != lambda.size())
    throw std::domain_error("rep_matrix: permutation degree != |lambda|");
  if (hook_dim(lambda) > dim_cap)
    throw std::length_error("rep_matrix: dimension cap exceeded");
  return skew_matrix_impl(SkewShape(lambda, Partition{}), 0, g, dim_cap);
}

DMat skew_matrix(const SkewShape& shape, int base, const Perm& g,
                 int dim_cap) {
  return skew_matrix_impl(shape, base, g, dim_cap);
}

// ------------------------------------------------------ interchange family

std::array<Perm, 8> InterchangeFamily::products() const {
  auto mix = [](const Perm& outer, const Perm& inner) {
    return outer.after(inner.inverse());
  };
  return {mix(sm[1], sp[0]), mix(tp[0], sp[1]), mix(tp[1], tm[0]),
          mix(sm[2], tm[1]), mix(sm[3], sp[2]), mix(tp[2], sp[3]),
          mix(tp[3], tm[2]), mix(sm[0], tm[3])};
}

namespace {

// letters needed before each P4 product can be checked
constexpr int kProductLetters[8][2] = {{0, 1}, {0, 1}, {0, 1}, {1, 2},
                                       {2, 3}, {2, 3}, {2, 3}, {0, 3}};

bool fixes_top(const Perm& p, int n, int f) {
  return p.fixes_pointwise(n - f, n);
}

struct SearchState {
  InterchangeFamily* fam;
  // per letter: candidate (sigma^+, tau^+) pairs, deterministic order
  std::array<std::vector<std::pair<Perm, Perm>>, 4> candidates;

  bool check_letter(int upto) const {
    const InterchangeFamily& F = *fam;
    auto prods = F.products();
    for (int k = 0; k < 8; ++k) {
      int l0 = kProductLetters[k][0], l1 = kProductLetters[k][1];
      if (l0 > upto || l1 > upto) continue;
      if (!fixes_top(prods[k], F.n, F.f)) return false;
    }
    return true;
  }

  bool dfs(int letter) {
    if (letter == 4) return true;
    InterchangeFamily& F = *fam;
    for (const auto& [sig, tau] : candidates[letter]) {
      F.sp[letter] = sig;
      F.tp[letter] = tau;
      F.sm[letter] = sig.after(F.g0[letter]);
      F.tm[letter] = tau.after(F.g0[letter]);
      // products() needs all letters assigned; fill the rest with identities
      for (int l = letter + 1; l < 4; ++l) {
        F.sp[l] = F.sm[l] = F.tp[l] = F.tm[l] = Perm(F.n);
      }
      if (!check_letter(letter)) continue;
      if (dfs(letter + 1)) return true;
    }
    return false;
  }
};

void verify_family(const InterchangeFamily& F) {
  auto image_of = [](const Perm& p, const std::vector<int>& pts) {
    std::vector<int> img;
    for (int x : pts) img.push_back(p(x));
    std::sort(img.begin(), img.end());
    return img;
  };
  for (int f = 0; f < 4; ++f) {
    std::vector<int> top;
    for (int x = F.n - F.ef[f]; x < F.n; ++x) top.push_back(x);
    // P1
    if (image_of(F.sp[f], F.Vp[f]) != top || image_of(F.tp[f], F.Vp[f]) != top ||
        image_of(F.sm[f], F.Vm[f]) != top || image_of(F.tm[f], F.Vm[f]) != top)
      throw std::logic_error("interchange family violates P1");
    // P2
    if (F.sp[f].inverse().after(F.sm[f]) != F.g0[f] ||
        F.tp[f].inverse().after(F.tm[f]) != F.g0[f])
      throw std::logic_error("interchange family violates P2");
    // P3
    for (int x = 0; x < F.n; ++x) {
      bool in_p = std::binary_search(F.Vp[f].begin(), F.Vp[f].end(), x);
      if (!in_p && F.sp[f](x) != F.tp[f](x))
        throw std::logic_error("interchange family violates P3 (+)");
      bool in_m = std::binary_search(F.Vm[f].begin(), F.Vm[f].end(), x);
      if (!in_m && F.sm[f](x) != F.tm[f](x))
        throw std::logic_error("interchange family violates P3 (-)");
    }
    // support inside the window
    for (int x = 0; x < F.n - F.v; ++x)
      if (F.sp[f](x) != x || F.tp[f](x) != x || F.g0[f](x) != x)
        throw std::logic_error("interchange family moves a point below the window");
  }
  for (const Perm& p : F.products())
    if (!fixes_top(p, F.n, F.f))
      throw std::logic_error("interchange family violates P4");
}

}  // namespace

InterchangeFamily construct_interchange(const TiledSurface& Y, int n) {
  auto st = Y.stats();
  if (n < st.v)
    throw std::domain_error("construct_interchange: n < vertex count");
  InterchangeFamily F;
  F.n = n;
  F.v = st.v;
  F.f = st.f;
  F.ef = st.ef;
  int base = n - st.v;
  for (int f = 0; f < 4; ++f) {
    for (int u = 0; u < Y.nv; ++u) {
      if (Y.out_edge[u][f] >= 0) F.Vm[f].push_back(base + u);
      if (Y.in_edge[u][f] >= 0) F.Vp[f].push_back(base + u);
    }
    // g_f^0: the edge map on V_f^-, completed monotonically off it
    Perm g0(n);
    std::vector<char> tgt_used(n, 0);
    for (int u = 0; u < Y.nv; ++u) {
      int e = Y.out_edge[u][f];
      if (e < 0) continue;
      g0.img[base + u] = base + Y.edges[e].dst;
      tgt_used[base + Y.edges[e].dst] = 1;
    }
    std::vector<int> free_tgts;
    for (int x = base; x < n; ++x)
      if (!tgt_used[x]) free_tgts.push_back(x);
    size_t fi = 0;
    for (int u = 0; u < Y.nv; ++u)
      if (Y.out_edge[u][f] < 0) g0.img[base + u] = free_tgts[fi++];
    F.g0[f] = g0;
  }

  SearchState S;
  S.fam = &F;
  for (int f = 0; f < 4; ++f) {
    std::vector<int> top, rest_src, rest_tgt;
    for (int x = n - F.ef[f]; x < n; ++x) top.push_back(x);
    for (int x = base; x < n; ++x) {
      if (!std::binary_search(F.Vp[f].begin(), F.Vp[f].end(), x))
        rest_src.push_back(x);
      if (x < n - F.ef[f]) rest_tgt.push_back(x);
    }
    // enumerate beta (sigma on V+), gamma (tau on V+), delta (shared rest)
    std::vector<int> beta = top, gamma = top, delta = rest_tgt;
    std::sort(beta.begin(), beta.end());
    do {
      std::sort(gamma.begin(), gamma.end());
      do {
        std::sort(delta.begin(), delta.end());
        do {
          Perm sig(n), tau(n);
          for (size_t i = 0; i < F.Vp[f].size(); ++i) {
            sig.img[F.Vp[f][i]] = beta[i];
            tau.img[F.Vp[f][i]] = gamma[i];
          }
          for (size_t i = 0; i < rest_src.size(); ++i)
            sig.img[rest_src[i]] = tau.img[rest_src[i]] = delta[i];
          S.candidates[f].emplace_back(std::move(sig), std::move(tau));
        } while (std::next_permutation(delta.begin(), delta.end()));
      } while (std::next_permutation(gamma.begin(), gamma.end()));
    } while (std::next_permutation(beta.begin(), beta.end()));
  }
  if (!S.dfs(0))
    throw std::runtime_error(
        "construct_interchange: search exhausted without a P1-P4 family");
  verify_family(F);
  return F;
}

// ------------------------------------------------------- M, D_top, Upsilon

double m_product(const InterchangeFamily& fam, const Partition& nu,
                 const std::array<Partition, 4>& mu, const Partition& lambda,
                 const TableauTuple& tup) {
  for (int f = 0; f < 4; ++f) {
    if (tup.rp[f].shape != SkewShape(mu[f], nu) ||
        tup.rm[f].shape != SkewShape(mu[f], nu) ||
        tup.s[f].shape != SkewShape(lambda, mu[f]) ||
        tup.t[f].shape != SkewShape(lambda, mu[f]))
      throw std::domain_error("m_product: tableau shape mismatch");
  }
  int base = fam.n - fam.v;
  SkewShape full(lambda, nu);
  const BasisData& bd = basis_data(full, base, 1 << 20);
  auto prods = fam.products();
  double result = 1.0;
  for (int k = 0; k < 8; ++k) {
    const FactorRefs& fr = kFactors[k];
    StandardTableau src = concat_tableau(
        pick_r(tup, fr.letter_src, fr.src_r_plus),
        pick_x(tup, fr.letter_src, fr.src_is_s), base);
    StandardTableau dst = concat_tableau(
        pick_r(tup, fr.letter_dst, fr.dst_r_plus),
        pick_x(tup, fr.letter_dst, fr.dst_is_s), base);
    DMat m = skew_matrix_impl(full, base, prods[k], 1 << 20);
    result *= m[bd.index.at(dst.row_reading_word())]
               [bd.index.at(src.row_reading_word())];
  }
  return result;
}

int d_top(const InterchangeFamily& fam, const TableauTuple& tup) {
  int base = fam.n - fam.v;
  auto prods = fam.products();
  int total = 0;
  for (int k = 0; k < 8; ++k) {
    const FactorRefs& fr = kFactors[k];
    StandardTableau src = concat_tableau(
        pick_r(tup, fr.letter_src, fr.src_r_plus),
        pick_x(tup, fr.letter_src, fr.src_is_s), base);
    StandardTableau dst = concat_tableau(
        pick_r(tup, fr.letter_dst, fr.dst_r_plus),
        pick_x(tup, fr.letter_dst, fr.dst_is_s), base);
    total += set_displacement(prods[k], src.top_row_entries(),
                              dst.top_row_entries());
  }
  return total;
}

namespace {

// Upsilon with precomputed product matrices and concat index tables.
double upsilon_inner(const InterchangeFamily& fam, const Partition& nu,
                     const std::array<Partition, 4>& mu,
                     const Partition& lambda, const std::array<DMat, 8>& pm,
                     const std::map<std::vector<int>, int>& full_index) {
  int base = fam.n - fam.v;
  std::array<std::vector<StandardTableau>, 4> tabR, tabS;
  std::array<std::vector<std::vector<int>>, 4> idx;  // idx[f][ri][si]
  for (int f = 0; f < 4; ++f) {
    tabR[f] = enumerate_tableaux(SkewShape(mu[f], nu), base);
    tabS[f] = enumerate_tableaux(SkewShape(lambda, mu[f]), fam.n - fam.ef[f]);
    idx[f].assign(tabR[f].size(), std::vector<int>(tabS[f].size()));
    for (size_t ri = 0; ri < tabR[f].size(); ++ri)
      for (size_t si = 0; si < tabS[f].size(); ++si)
        idx[f][ri][si] = full_index.at(
            concat_tableau(tabR[f][ri], tabS[f][si], base).row_reading_word());
  }
  // odometer over (rp_f, rm_f, s_f, t_f) for all letters
  std::array<size_t, 16> dims, cur{};
  for (int f = 0; f < 4; ++f) {
    dims[4 * f + 0] = tabR[f].size();
    dims[4 * f + 1] = tabR[f].size();
    dims[4 * f + 2] = tabS[f].size();
    dims[4 * f + 3] = tabS[f].size();
  }
  for (size_t d : dims)
    if (d == 0) return 0.0;
  double sum = 0.0;
  for (;;) {
    auto at = [&](int letter, bool r_plus, bool is_s) {
      size_t ri = cur[4 * letter + (r_plus ? 0 : 1)];
      size_t si = cur[4 * letter + (is_s ? 2 : 3)];
      return idx[letter][ri][si];
    };
    double prod = 1.0;
    for (int k = 0; k < 8 && prod != 0.0; ++k) {
      const FactorRefs& fr = kFactors[k];
      int si = at(fr.letter_src, fr.src_r_plus, fr.src_is_s);
      int di = at(fr.letter_dst, fr.dst_r_plus, fr.dst_is_s);
      prod *= pm[k][di][si];
    }
    sum += prod;
    int p = 0;
    while (p < 16 && ++cur[p] == dims[p]) cur[p++] = 0;
    if (p == 16) break;
  }
  return sum;
}

}  // namespace

double upsilon(const InterchangeFamily& fam, const Partition& nu,
               const std::array<Partition, 4>& mu, const Partition& lambda) {
  int base = fam.n - fam.v;
  SkewShape full(lambda, nu);
  const BasisData& bd = basis_data(full, base, 1 << 20);
  auto prods = fam.products();
  std::array<DMat, 8> pm;
  for (int k = 0; k < 8; ++k)
    pm[k] = skew_matrix_impl(full, base, prods[k], 1 << 20);
  return upsilon_inner(fam, nu, mu, lambda, pm, bd.index);
}

double xi_nu_part(const TiledSurface& Y, int n, const Partition& nu) {
  auto st = Y.stats();
  if (nu.size() != n - st.v)
    throw std::domain_error("xi_nu_part: |nu| != n - v");
  InterchangeFamily fam = construct_interchange(Y, n);
  double total = 0.0;
  double dnu = hook_dim(nu).get_d();
  for (const Partition& lambda : enumerate_partitions(n - st.f)) {
    if (!lambda.contains(nu)) continue;
    SkewShape full(lambda, nu);
    const BasisData& bd = basis_data(full, n - st.v, 1 << 20);
    auto prods = fam.products();
    std::array<DMat, 8> pm;
    for (int k = 0; k < 8; ++k)
      pm[k] = skew_matrix_impl(full, n - st.v, prods[k], 1 << 20);
    // per-letter admissible mu_f
    std::array<std::vector<Partition>, 4> mus;
    bool any = true;
    for (int f = 0; f < 4; ++f) {
      for (const Partition& m : sub_partitions_of_size(lambda, n - st.ef[f]))
        if (m.contains(nu)) mus[f].push_back(m);
      if (mus[f].empty()) any = false;
    }
    if (!any) continue;
    double dl = hook_dim(lambda).get_d();
    for (const Partition& ma : mus[0])
      for (const Partition& mb : mus[1])
        for (const Partition& mc : mus[2])
          for (const Partition& md : mus[3]) {
            std::array<Partition, 4> mu{ma, mb, mc, md};
            double dm = hook_dim(ma).get_d() * hook_dim(mb).get_d() *
                        hook_dim(mc).get_d() * hook_dim(md).get_d();
            total += dl * dnu / dm *
                     upsilon_inner(fam, nu, mu, lambda, pm, bd.index);
          }
  }
  return total;
}

double xi_n(const TiledSurface& Y, int n) {
  auto st = Y.stats();
  if (n < st.v) throw std::domain_error("xi_n: n < vertex count");
  double total = 0.0;
  for (const Partition& nu : enumerate_partitions(n - st.v))
    total += xi_nu_part(Y, n, nu);
  return total;
}

double xi_top_term(const TiledSurface& Y, int n) {
  auto st = Y.stats();
  if (n < st.v) throw std::domain_error("xi_top_term: n < vertex count");
  Partition nu = (n - st.v > 0) ? Partition{n - st.v} : Partition{};
  return xi_nu_part(Y, n, nu);
}

// ------------------------------------------------------------ trace check

std::pair<double, double> b_lambda_trace_identity(
    const Partition& lambda, const std::array<Perm, 8>& g) {
  Int dl = hook_dim(lambda);
  if (dl > 2)
    throw std::length_error("b_lambda_trace_identity: d_lambda > 2");
  int d = (int)dl.get_si();
  std::array<DMat, 8> R;
  for (int k = 0; k < 8; ++k) R[k] = rep_matrix(lambda, g[k]);
  // tr(B o g) via the delta pattern of the defining bilinear form:
  // free indices i1,i2,i3,i4,i6,i7 and j2, j6.
  double lhs = 0.0;
  for (int i1 = 0; i1 < d; ++i1)
    for (int i2 = 0; i2 < d; ++i2)
      for (int i3 = 0; i3 < d; ++i3)
        for (int i4 = 0; i4 < d; ++i4)
          for (int i6 = 0; i6 < d; ++i6)
            for (int i7 = 0; i7 < d; ++i7)
              for (int j2 = 0; j2 < d; ++j2)
                for (int j6 = 0; j6 < d; ++j6)
                  lhs += R[0][i3][i1] * R[1][j2][i2] * R[2][j2][i3] *
                         R[3][i2][i4] * R[4][i7][i4] * R[5][j6][i6] *
                         R[6][j6][i7] * R[7][i6][i1];
  Perm w = g[7].inverse()
               .after(g[5].inverse())
               .after(g[6])
               .after(g[4])
               .after(g[3].inverse())
               .after(g[1].inverse())
               .after(g[2])
               .after(g[0]);
  DMat m = rep_matrix(lambda, w);
  double rhs = 0.0;
  for (int i = 0; i < d; ++i) rhs += m[i][i];
  return {lhs, rhs};
}

}  // namespace cover
