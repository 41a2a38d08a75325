#pragma once
// Numerical Selberg-trace-formula machinery: the compactly supported test
// function phi_T built from a smooth bump, Fourier evaluation on the real
// and imaginary axes, the geometric side of the trace-formula difference
// over an ingested length spectrum, and a clearly labeled demonstration of
// the spectral-gap bound pipeline.  All numerics are binary64 with adaptive
// Simpson quadrature (tolerance 1e-10, subdivision cap 2^20).

#include <map>
#include <string>
#include <vector>

namespace cover {

// The bump psi_0(x) = exp(-1/(1/4 - x^2)) on (-1/2, 1/2), 0 outside.
double psi0(double x);

// phi_0 = psi_0 convolved with itself: even, non-negative, support (-1, 1).
double phi0(double x);

// int_{1-eps}^{1} phi_0, the constructive constant of the Fourier lower
// bound phi_T^(it) >= C_eps T e^{T(1-eps)t}.
double c_eps(double eps);

struct TestFunction {
  double T = 1.0;     // phi_T(x) = phi_0(x / T), support (-T, T)
  double tol = 1e-10;
  double operator()(double x) const;
};

TestFunction build_phi(double T);  // throws std::domain_error if T <= 0

// Fourier transform f^(xi) = int f(x) e^{-i x xi} dx evaluated at a real
// frequency (imaginary_axis = false) or at xi = i*t (imaginary_axis = true,
// pass t).  Computed as T * psi0^(T xi)^2 via the convolution theorem, with
// psi0^ by adaptive quadrature; this makes the result exactly non-negative
// on both axes, as the construction requires.  Throws std::runtime_error if
// the quadrature fails to converge within the subdivision cap.
double fourier(const TestFunction& f, double xi, bool imaginary_axis = false);
double fourier_phi0(double xi, bool imaginary_axis = false);

// ---------------------------------------------------------- length spectra

struct SpectrumEntry {
  double length = 0;            // l(gamma) > 0
  double primitive_length = 0;  // Lambda(gamma) = l of the primitive root
  long long multiplicity = 1;
  bool primitive() const { return length == primitive_length; }
};

struct LengthSpectrum {
  std::vector<SpectrumEntry> entries;
  std::string source;
};

// CSV with header `length,primitive_length,multiplicity`; `#` comments and
// blank lines skipped.  Validates positivity, Lambda <= l, and l/Lambda
// within 1e-6 of a positive integer (std::domain_error otherwise).
LengthSpectrum spectrum_from_csv(const std::string& text,
                                 const std::string& source = "");
LengthSpectrum spectrum_from_csv_file(const std::string& path);

// -------------------------------------------------------- geometric side

// The geodesic sums of the trace-formula difference.  `discrepancy` is
// keyed by the entry's length:
//   * primitive entries: value = fix(gamma~) - 1 (dimensionless; the term
//     is value * l / (2 sinh(l/2)) * phi_T(l)),
//   * non-primitive entries: value = (sum of Lambda over the fiber) -
//     Lambda(gamma) (a length; term is value / (2 sinh(l/2)) * phi_T(l)).
// Missing keys default to 0 (counted in `missing`, warned once to stderr).
struct GeometricSide {
  double primitive_sum = 0;
  double nonprimitive_sum = 0;
  int missing = 0;
  double total() const { return primitive_sum + nonprimitive_sum; }
};

GeometricSide geometric_side(const LengthSpectrum& spectrum, double T,
                             const std::map<double, double>& discrepancy);

// ---------------------------------------------------- bound pipeline demo

// Assembles each term of the expectation-bound chain with explicit numbers
// for T = 4 log n: the integral term bound (2/T) int_0^inf |r phi0^(r)| dr,
// the non-primitive correction bound n * sum_{primitive, k>=2} ..., and the
// primitive sum weighted by the plugged-in expectation bound (log n)^A / n.
// This is a DEMONSTRATION of the shape of the argument on supplied spectrum
// data; it makes no probabilistic claim.
struct BoundPipelineReport {
  double n = 0, c = 0, A = 0;
  double T = 0;                   // 4 log n
  double word_length_cutoff = 0;  // c log n
  double integral_term = 0;       // area-independent factor bound
  double nonprimitive_term = 0;
  double primitive_term = 0;
  double total = 0;
  std::string label;  // always flags the demonstration status
  std::string to_json() const;
};

BoundPipelineReport bound_pipeline_demo(const LengthSpectrum& spectrum,
                                        double n, double c = 1.0,
                                        double A = 1.0);

}  // namespace cover
