#pragma once

#include <vector>

namespace qbound {

// Out-of-domain policy for the extremal curves.
//  Strict      — error beyond a 1e-12 edge tolerance.
//  Clamped     — project the argument onto the curve's domain (default for
//                physically impossible measured values).
//  PaperCompat — accept arguments above the domain: the segment index
//                k = floor(2/(2-x^2)) is taken as-is (it may exceed d-1) and
//                square-root arguments are clamped at zero. Reproduces the
//                reference experiment's arithmetic for lambda1 > 1 at d = 2.
enum class EvalMode { Strict, Clamped, PaperCompat };

// H2(x) = -x log2 x - (1-x) log2(1-x); arguments within 1e-12 of [0,1] are
// clamped, anything further is an error.
double binary_entropy(double x);

// Minimal spectrum entropy at fixed sqrt-linear-entropy lambda:
// R_L(lambda) = H2[k a] + k a log2 k, a = [1 + sqrt(1-(k+1)lambda^2/(2k))]/(k+1),
// k = floor(2/(2-lambda^2)). Domain lambda in [0, sqrt(2(d-1)/d)].
double r_lower(int d, double lambda, EvalMode mode = EvalMode::Clamped);

// Maximal spectrum entropy at fixed lambda:
// R_U = H2[b] + (1-b) log2(d-1), b = [1 + sqrt((d-1)^2 - d(d-1)lambda^2/2)]/d.
double r_upper(int d, double lambda, EvalMode mode = EvalMode::Clamped);

// Same extremal curves against the linear entropy tau = lambda^2 itself.
// Domain tau in [0, 2(d-1)/d]; F_U(d, lambda^2) == R_U(d, lambda) and
// F_L(d, lambda^2) == R_L(d, lambda).
double f_upper(int d, double tau, EvalMode mode = EvalMode::Clamped);
double f_lower(int d, double tau, EvalMode mode = EvalMode::Clamped);

// Convex hull of R_L: the H2 arc on [0,1], then the chords between the knots
// (sqrt(2(k-1)/k), log2 k) -> (sqrt(2k/(k+1)), log2(k+1)), k = 2..d-1.
double co_r_lower(int d, double lambda);

// Concave envelope of F_U: F_U itself for d = 2; for d >= 3, F_U on
// [0, tau*] followed by the tangent line through (2(d-1)/d, log2 d).
double ca_f_upper(int d, double tau);

// Tangency data for ca[F_U], d >= 3: tau* = (4d-6)/(d(d-1)),
// slope a = (d-1)/(2d-4) * log2(d-1).
struct TangentData {
  double tau_star;
  double slope;
};
TangentData ca_tangent(int d);

// Delta(y) = ln[(d-1)y] - (1-1/d)y - (1-2/d) + 1/(dy); its unique root right
// of y = 2/d locates the inflection of F_U. Natural logarithm: the root of
// F_U'' is independent of the entropy's log base, and only the natural-log
// form reproduces it.
double delta_curve(int d, double y);

struct InflectionPoint {
  double y0;
  double tau0;
};
// Bisection on [2/d + eps, Y], Y doubled until the sign change; |Delta(y0)|
// ends below 1e-9 (tolerance 1e-12 in y).
InflectionPoint find_inflection(int d);

// Spectra attaining the extremal curves.
//  MinForm: {t, ..., t, 1-kt, 0, ..., 0}, t in [1/(k+1), 1/k]
//  MaxForm: {t, (1-t)/(d-1), ..., (1-t)/(d-1)}, t in [1/d, 1]
enum class SpectrumForm { MinForm, MaxForm };
enum class ConstraintKind { Lambda, Tau };

struct ExtremalSpectrum {
  int d;
  SpectrumForm form;
  double t;
  std::vector<double> mu;
};
ExtremalSpectrum extremal_spectrum(int d, ConstraintKind kind, double value,
                                   SpectrumForm form);

// Piecewise description of an envelope, with knots and per-segment forms.
struct CurveSegment {
  enum class Form { H2Arc, Chord, FuArc, TangentLine };
  double lo;
  double hi;
  Form form;
  int k;         // chord index (Chord segments), else 0
  double slope;  // Chord / TangentLine slope, else 0
};

struct SegmentedCurve {
  enum class Kind { CoRL, CaFU };
  int d;
  Kind kind;
  std::vector<double> knots;
  std::vector<CurveSegment> segments;

  double eval(double x) const;
};

SegmentedCurve co_curve(int d);
SegmentedCurve ca_curve(int d);

}  // namespace qbound
