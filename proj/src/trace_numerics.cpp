#include "cover/trace_numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "nlohmann/json.hpp"

namespace cover {

namespace {

constexpr double kTol = 1e-10;
constexpr long kMaxIntervals = 1 << 20;

// adaptive Simpson with a global subdivision budget
struct Quadrature {
  const std::function<double(double)>& f;
  long budget = kMaxIntervals;

  double simpson(double a, double b, double fa, double fm, double fb) const {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double run(double a, double b, double fa, double fm, double fb, double whole,
             double tol, int depth) {
    if (--budget <= 0)
      throw std::runtime_error("quadrature: subdivision cap exceeded");
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, m, fa, flm, fm);
    double right = simpson(m, b, fm, frm, fb);
    double delta = left + right - whole;
    if (depth > 0 && std::abs(delta) <= 15.0 * tol)
      return left + right + delta / 15.0;
    return run(a, m, fa, flm, fm, left, tol * 0.5, depth + 1) +
           run(m, b, fm, frm, fb, right, tol * 0.5, depth + 1);
  }
};

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = kTol) {
  if (a >= b) return 0.0;
  Quadrature q{f};
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = q.simpson(a, b, fa, fm, fb);
  return q.run(a, b, fa, fm, fb, whole, tol, 0);
}

// psi0^ at a real frequency (cosine transform) or at i*t (real exponential)
double psi0_hat(double xi, bool imaginary_axis) {
  auto integrand = [&](double x) {
    return imaginary_axis ? psi0(x) * std::exp(x * xi)
                          : psi0(x) * std::cos(x * xi);
  };
  return integrate(integrand, -0.5, 0.5);
}

}  // namespace

double psi0(double x) {
  double q = 0.25 - x * x;
  if (q <= 0.0) return 0.0;
  return std::exp(-1.0 / q);
}

double phi0(double x) {
  if (x <= -1.0 || x >= 1.0) return 0.0;
  double lo = std::max(-0.5, x - 0.5), hi = std::min(0.5, x + 0.5);
  auto integrand = [&](double t) { return psi0(x - t) * psi0(t); };
  return integrate(integrand, lo, hi);
}

double c_eps(double eps) {
  if (eps <= 0.0 || eps > 2.0) throw std::domain_error("c_eps: need eps in (0,2]");
  return integrate(phi0, 1.0 - eps, 1.0);
}

double TestFunction::operator()(double x) const { return phi0(x / T); }

TestFunction build_phi(double T) {
  if (T <= 0.0) throw std::domain_error("build_phi: T must be positive");
  return TestFunction{T, kTol};
}

double fourier_phi0(double xi, bool imaginary_axis) {
  double h = psi0_hat(xi, imaginary_axis);
  return h * h;
}

double fourier(const TestFunction& f, double xi, bool imaginary_axis) {
  // f^(xi) = T phi0^(T xi); on the imaginary axis xi is the value of t.
  return f.T * fourier_phi0(f.T * xi, imaginary_axis);
}

// ---------------------------------------------------------- length spectra

LengthSpectrum spectrum_from_csv(const std::string& text,
                                 const std::string& source) {
  LengthSpectrum sp;
  sp.source = source;
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    line = line.substr(b, e - b + 1);
    if (!header_seen) {
      std::string squashed;
      for (char ch : line)
        if (!isspace((unsigned char)ch)) squashed += (char)tolower(ch);
      if (squashed != "length,primitive_length,multiplicity")
        throw std::domain_error(
            "spectrum csv: missing header length,primitive_length,multiplicity");
      header_seen = true;
      continue;
    }
    SpectrumEntry rec;
    char extra;
    if (sscanf(line.c_str(), "%lf , %lf , %lld %c", &rec.length,
               &rec.primitive_length, &rec.multiplicity, &extra) != 3)
      throw std::domain_error("spectrum csv: malformed line " +
                              std::to_string(lineno));
    if (rec.length <= 0 || rec.primitive_length <= 0 || rec.multiplicity <= 0)
      throw std::domain_error("spectrum csv: non-positive field at line " +
                              std::to_string(lineno));
    if (rec.primitive_length > rec.length + 1e-12)
      throw std::domain_error("spectrum csv: Lambda > l at line " +
                              std::to_string(lineno));
    double ratio = rec.length / rec.primitive_length;
    if (std::abs(ratio - std::llround(ratio)) > 1e-6)
      throw std::domain_error(
          "spectrum csv: l / Lambda is not near an integer at line " +
          std::to_string(lineno));
    sp.entries.push_back(rec);
  }
  if (!header_seen)
    throw std::domain_error("spectrum csv: empty input");
  return sp;
}

LengthSpectrum spectrum_from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open spectrum file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return spectrum_from_csv(buf.str(), path);
}

// -------------------------------------------------------- geometric side

GeometricSide geometric_side(const LengthSpectrum& spectrum, double T,
                             const std::map<double, double>& discrepancy) {
  TestFunction phi = build_phi(T);
  GeometricSide out;
  for (const auto& rec : spectrum.entries) {
    if (rec.length >= T) continue;  // phi_T support
    double value = 0.0;
    auto it = discrepancy.find(rec.length);
    if (it != discrepancy.end()) {
      value = it->second;
    } else {
      if (out.missing == 0)
        std::fprintf(stderr,
                     "geometric_side: missing discrepancy entries default to "
                     "0 (first at length %.9g)\n",
                     rec.length);
      ++out.missing;
      continue;
    }
    double weight = phi(rec.length) / (2.0 * std::sinh(rec.length / 2.0));
    if (rec.primitive())
      out.primitive_sum += rec.multiplicity * value * rec.length * weight;
    else
      out.nonprimitive_sum += rec.multiplicity * value * weight;
  }
  return out;
}

// ---------------------------------------------------- bound pipeline demo

std::string BoundPipelineReport::to_json() const {
  nlohmann::json j{{"n", n},
                   {"c", c},
                   {"A", A},
                   {"T", T},
                   {"word_length_cutoff", word_length_cutoff},
                   {"integral_term", integral_term},
                   {"nonprimitive_term", nonprimitive_term},
                   {"primitive_term", primitive_term},
                   {"total", total},
                   {"label", label}};
  return j.dump(2);
}

BoundPipelineReport bound_pipeline_demo(const LengthSpectrum& spectrum,
                                        double n, double c, double A) {
  if (n <= 1.0) throw std::domain_error("bound_pipeline_demo: need n > 1");
  BoundPipelineReport rep;
  rep.n = n;
  rep.c = c;
  rep.A = A;
  rep.T = 4.0 * std::log(n);
  rep.word_length_cutoff = c * std::log(n);
  rep.label =
      "DEMONSTRATION: assembles the bound chain on the supplied spectrum; "
      "no probabilistic claim";
  TestFunction phi = build_phi(rep.T);

  // integral term: |int r phi_T^(r) tanh(pi r) dr| <= (2/T) int_0^inf
  // |r' phi0^(r')| dr'; the integrand is Schwartz, truncate where negligible
  auto decay = [](double r) { return std::abs(r) * fourier_phi0(r, false); };
  rep.integral_term = 2.0 / rep.T * integrate(decay, 0.0, 60.0, 1e-9);

  // non-primitive corrections bounded by n * sum over primitive gamma of
  // sum_{k >= 2} phi_T(k l) k l / (2 sinh(k l / 2))
  for (const auto& rec : spectrum.entries) {
    if (!rec.primitive()) continue;
    for (int k = 2; k * rec.length < rep.T; ++k) {
      double kl = k * rec.length;
      rep.nonprimitive_term +=
          n * rec.multiplicity * phi(kl) * kl / (2.0 * std::sinh(kl / 2.0));
    }
  }

  // primitive sum with the expectation bound (log n)^A / n plugged in
  double plug = std::pow(std::log(n), A) / n;
  for (const auto& rec : spectrum.entries) {
    if (!rec.primitive() || rec.length >= rep.T) continue;
    rep.primitive_term += plug * rec.multiplicity * phi(rec.length) *
                          rec.length / (2.0 * std::sinh(rec.length / 2.0));
  }

  rep.total = rep.integral_term + rep.nonprimitive_term + rep.primitive_term;
  return rep;
}

}  // namespace cover
