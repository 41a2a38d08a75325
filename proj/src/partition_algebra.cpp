#include "cover/partition_algebra.hpp"
#include "cover/perm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cover {

// ---------------------------------------------------------------- Partition

void Partition::validate() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::domain_error("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::domain_error("partition parts must be weakly decreasing");
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

Partition Partition::conjugate() const {
  Partition r;
  for (int c = 0; c < first_part(); ++c) {
    int cnt = 0;
    for (int p : parts) cnt += (p > c);
    r.parts.push_back(cnt);
  }
  return r;
}

bool Partition::contains(const Partition& inner) const {
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts[i] > part(i)) return false;
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- SkewShape

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
  if (!outer.contains(inner))
    throw std::domain_error("skew shape: inner not contained in outer");
}

int SkewShape::b() const {
  // boxes outside the top row of the skew diagram
  int top = outer.part(0) - inner.part(0);
  return size() - top;
}

int SkewShape::b_check() const {
  // boxes outside the leftmost column of the skew diagram: a box (r,c) is in
  // the leftmost occupied column iff c = min over rows of inner.part(r),
  // restricted to rows that have boxes.  Equivalently use conjugates.
  SkewShape conj(outer.conjugate(), inner.conjugate());
  return conj.b();
}

std::string SkewShape::to_string() const {
  return outer.to_string() + "/" + inner.to_string();
}

// ---------------------------------------------------------- StandardTableau

std::vector<int> StandardTableau::top_row_entries() const {
  std::vector<int> r;
  if (!entry.empty()) r = entry[0];
  return r;
}

std::vector<int> StandardTableau::row_reading_word() const {
  std::vector<int> w;
  for (auto& row : entry) w.insert(w.end(), row.begin(), row.end());
  return w;
}

std::string StandardTableau::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t r = 0; r < entry.size(); ++r) {
    if (r) os << ";";
    for (size_t i = 0; i < entry[r].size(); ++i)
      os << (i ? "," : "") << entry[r][i];
  }
  os << "]";
  return os.str();
}

// -------------------------------------------------------------- enumeration

static void gen_partitions(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (n == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    gen_partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::domain_error("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  return out;  // reverse-lexicographic by construction
}

std::vector<Partition> sub_partitions_of_size(const Partition& lambda, int m) {
  std::vector<Partition> out;
  for (auto& nu : enumerate_partitions(m))
    if (lambda.contains(nu) && nu.rows() <= lambda.rows()) out.push_back(nu);
  return out;
}

// --------------------------------------------------------------- dimensions

Int hook_dim(const Partition& lambda) {
  int n = lambda.size();
  if (n == 0) return 1;
  Partition conj = lambda.conjugate();
  Int hooks = 1;
  for (int r = 0; r < lambda.rows(); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) {
      int hook = (lambda.parts[r] - c) + (conj.parts[c] - r) - 1;
      hooks *= hook;
    }
  Int d = factorial(n) / hooks;
  return d;
}

// frontier-memoized count: state = number of boxes filled in each row
static Int skew_count(const SkewShape& sh, std::vector<int>& filled, int left,
                      std::map<std::vector<int>, Int>& memo) {
  if (left == 0) return 1;
  auto it = memo.find(filled);
  if (it != memo.end()) return it->second;
  Int total = 0;
  int rows = sh.outer.rows();
  for (int r = 0; r < rows; ++r) {
    int len = sh.outer.part(r) - sh.inner.part(r);
    if (filled[r] >= len) continue;
    int c = sh.inner.part(r) + filled[r];  // column of the next box in row r
    // the box above (r-1, c), if it is part of the skew diagram, must be
    // filled already; boxes above in the inner shape impose nothing
    if (r > 0 && sh.cell(r - 1, c) && sh.inner.part(r - 1) + filled[r - 1] <= c)
      continue;
    ++filled[r];
    total += skew_count(sh, filled, left - 1, memo);
    --filled[r];
  }
  memo[filled] = total;
  return total;
}

Int skew_dim(const SkewShape& shape) {
  std::vector<int> filled(shape.outer.rows(), 0);
  std::map<std::vector<int>, Int> memo;
  int left = shape.size();
  return skew_count(shape, filled, left, memo);
}

static void gen_tableaux(const SkewShape& sh, std::vector<std::vector<int>>& rows,
                         std::vector<int>& filled, int next, int last,
                         std::vector<StandardTableau>& out, int base) {
  if (next > last) {
    StandardTableau t;
    t.shape = sh;
    t.entry = rows;
    t.base = base;
    out.push_back(std::move(t));
    return;
  }
  int nrows = sh.outer.rows();
  for (int r = 0; r < nrows; ++r) {
    int len = sh.outer.part(r) - sh.inner.part(r);
    if (filled[r] >= len) continue;
    int c = sh.inner.part(r) + filled[r];
    if (r > 0 && sh.cell(r - 1, c) && sh.inner.part(r - 1) + filled[r - 1] <= c)
      continue;
    rows[r].push_back(next);
    ++filled[r];
    gen_tableaux(sh, rows, filled, next + 1, last, out, base);
    --filled[r];
    rows[r].pop_back();
  }
}

std::vector<StandardTableau> enumerate_tableaux(const SkewShape& shape,
                                                int base) {
  std::vector<StandardTableau> out;
  std::vector<std::vector<int>> rows(shape.outer.rows());
  std::vector<int> filled(shape.outer.rows(), 0);
  gen_tableaux(shape, rows, filled, base + 1, base + shape.size(), out, base);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& x, const StandardTableau& y) {
              return x.row_reading_word() < y.row_reading_word();
            });
  return out;
}

// --------------------------------------------------------------------- zeta

Rat witten_zeta(int n, int s) {
  if (n < 1 || s < 1) throw std::domain_error("witten_zeta: need n>=1, s>=1");
  Rat total = 0;
  for (auto& lam : enumerate_partitions(n)) {
    Int d = hook_dim(lam);
    Int ds = 1;
    for (int i = 0; i < s; ++i) ds *= d;
    total += Rat(1) / Rat(ds);
  }
  total.canonicalize();
  return total;
}

double witten_zeta_float(int n, double s) {
  if (n < 1 || s <= 0) throw std::domain_error("witten_zeta_float: bad args");
  double total = 0;
  for (auto& lam : enumerate_partitions(n))
    total += std::pow(hook_dim(lam).get_d(), -s);
  return total;
}

Rat restricted_zeta(int n, int b, int s) {
  if (n < 1 || s < 1 || b < 0)
    throw std::domain_error("restricted_zeta: bad args");
  Rat total = 0;
  for (auto& lam : enumerate_partitions(n)) {
    if (lam.b() < b || lam.b_check() < b) continue;
    Int d = hook_dim(lam);
    Int ds = 1;
    for (int i = 0; i < s; ++i) ds *= d;
    total += Rat(1) / Rat(ds);
  }
  total.canonicalize();
  return total;
}

Int mednykh_count(int n, int g) {
  if (n < 1 || g < 2) throw std::domain_error("mednykh_count: need n>=1, g>=2");
  Rat z = witten_zeta(n, 2 * g - 2);
  Int fac = factorial(n);
  Rat total = z;
  for (int i = 0; i < 2 * g - 1; ++i) total *= Rat(fac);
  total.canonicalize();
  if (total.get_den() != 1)
    throw std::logic_error("mednykh_count: non-integral result");
  return total.get_num();
}

// ---------------------------------------------------- characters (M-N rule)

namespace {

// recursion over beta-numbers: removing a border strip of length t means
// replacing some beta b by b-t (must stay >= 0 and not collide); the sign is
// (-1)^{number of betas strictly between b-t and b}
Int mn_character(std::vector<int> betas, const std::vector<int>& mu, size_t k) {
  if (k == mu.size()) return 1;
  int t = mu[k];
  Int total = 0;
  for (size_t i = 0; i < betas.size(); ++i) {
    int b = betas[i];
    if (b < t) continue;
    int nb = b - t;
    bool collide = false;
    int between = 0;
    for (size_t j = 0; j < betas.size(); ++j) {
      if (j == i) continue;
      if (betas[j] == nb) collide = true;
      if (betas[j] > nb && betas[j] < b) ++between;
    }
    if (collide) continue;
    auto next = betas;
    next[i] = nb;
    Int sub = mn_character(std::move(next), mu, k + 1);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

Int character_value(const Partition& lambda, const Partition& cycle_type) {
  if (lambda.size() != cycle_type.size())
    throw std::domain_error("character_value: sizes differ");
  int m = std::max(lambda.rows(), 1);
  std::vector<int> betas(m);
  for (int i = 0; i < m; ++i) betas[i] = lambda.part(i) + (m - 1 - i);
  return mn_character(std::move(betas), cycle_type.parts, 0);
}

// -------------------------------------------------------------- pochhammer

Int pochhammer(const Int& n, int q) {
  if (q < 0 || Int(q) > n) throw std::domain_error("pochhammer: need 0<=q<=n");
  Int r = 1;
  for (int i = 0; i < q; ++i) r *= (n - i);
  return r;
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// ------------------------------------------------------------------- perms

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool is_valid_word(const std::string& w) {
  for (char c : w)
    if (std::string("abcdABCD").find(c) == std::string::npos) return false;
  return true;
}

std::string cyclic_reduce(const std::string& w) {
  if (!is_valid_word(w)) throw std::domain_error("invalid word alphabet");
  std::string r;
  for (char c : w) {
    if (!r.empty() && r.back() == letter_inverse(c)) r.pop_back();
    else r.push_back(c);
  }
  while (r.size() >= 2 && r.front() == letter_inverse(r.back())) {
    r.erase(r.begin());
    r.pop_back();
  }
  return r;
}

Perm eval_word(const std::string& w, const Perm& a, const Perm& b,
               const Perm& c, const Perm& d) {
  const Perm* gens[4] = {&a, &b, &c, &d};
  Perm cur = Perm::identity(a.n());
  for (char ch : w) {
    const Perm& g = *gens[letter_index(ch)];
    cur = letter_is_inverse(ch) ? g.inverse().after(cur) : g.after(cur);
  }
  return cur;
}

Perm relator_value(const Perm& a, const Perm& b, const Perm& c, const Perm& d) {
  return eval_word("abABcdCD", a, b, c, d);
}

}  // namespace cover
