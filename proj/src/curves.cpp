#include "qbound/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

constexpr double kEdgeTol = 1e-12;

double h2_unchecked(double x) {
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

void check_dim(int d) {
  if (d < 2) fail(ErrorCode::BadDimension, "curve dimension must be >= 2, got " + std::to_string(d));
}

double lambda_max(int d) { return std::sqrt(2.0 * (d - 1) / d); }
double tau_max(int d) { return 2.0 * (d - 1) / d; }

// Applies the mode policy to an argument with domain [0, top]. In
// PaperCompat only the lower edge is enforced; the caller handles what an
// over-the-top argument means for its own formula.
double prep_arg(double x, double top, EvalMode mode, const char* name) {
  switch (mode) {
    case EvalMode::Strict:
      if (x < -kEdgeTol || x > top + kEdgeTol)
        fail(ErrorCode::OutOfDomain,
             std::string(name) + " = " + std::to_string(x) + " outside [0, " + std::to_string(top) + "]");
      return std::clamp(x, 0.0, top);
    case EvalMode::Clamped:
      return std::clamp(x, 0.0, top);
    case EvalMode::PaperCompat:
      if (x < -kEdgeTol)
        fail(ErrorCode::OutOfDomain, std::string(name) + " = " + std::to_string(x) + " is negative");
      return std::max(x, 0.0);
  }
  return x;
}

// Segment index k = floor(2/(2-s)) for s = lambda^2 or tau. Outside
// PaperCompat the argument has already been projected into [0, smax], where
// k lands in [1, d]; the cap at d guards the floor against the last ulp.
long segment_index(double s, int d, EvalMode mode) {
  if (s >= 2.0)
    fail(ErrorCode::OutOfDomain,
         "segment index undefined for squared argument " + std::to_string(s) + " >= 2");
  long k = static_cast<long>(std::floor(2.0 / (2.0 - s)));
  if (k < 1) k = 1;
  if (mode != EvalMode::PaperCompat && k > d) k = d;
  return k;
}

// H2[k t] + k t log2 k with t = [1 + sqrt(1 - (k+1)s/(2k))]/(k+1).
double min_form_value(long k, double s) {
  const double arg = 1.0 - (k + 1) * s / (2.0 * k);
  const double t = (1.0 + std::sqrt(std::max(arg, 0.0))) / (k + 1);
  const double kt = std::clamp(k * t, 0.0, 1.0);
  return h2_unchecked(kt) + kt * std::log2(static_cast<double>(k));
}

// H2[t] + (1-t) log2(d-1) with t = [1 + sqrt((d-1)^2 - d(d-1)s/2)]/d.
double max_form_value(int d, double s) {
  const double arg = (d - 1.0) * (d - 1.0) - d * (d - 1.0) * s / 2.0;
  const double t = (1.0 + std::sqrt(std::max(arg, 0.0))) / d;
  return h2_unchecked(std::clamp(t, 0.0, 1.0)) + (1.0 - t) * std::log2(d - 1.0);
}

}  // namespace

double binary_entropy(double x) {
  if (x < -kEdgeTol || x > 1.0 + kEdgeTol)
    fail(ErrorCode::OutOfDomain, "binary_entropy argument " + std::to_string(x) + " outside [0, 1]");
  return h2_unchecked(std::clamp(x, 0.0, 1.0));
}

double r_lower(int d, double lambda, EvalMode mode) {
  check_dim(d);
  lambda = prep_arg(lambda, lambda_max(d), mode, "lambda");
  const long k = segment_index(lambda * lambda, d, mode);
  return min_form_value(k, lambda * lambda);
}

double r_upper(int d, double lambda, EvalMode mode) {
  check_dim(d);
  lambda = prep_arg(lambda, lambda_max(d), mode, "lambda");
  return max_form_value(d, lambda * lambda);
}

double f_upper(int d, double tau, EvalMode mode) {
  check_dim(d);
  tau = prep_arg(tau, tau_max(d), mode, "tau");
  return max_form_value(d, tau);
}

double f_lower(int d, double tau, EvalMode mode) {
  check_dim(d);
  tau = prep_arg(tau, tau_max(d), mode, "tau");
  const long k = segment_index(tau, d, mode);
  return min_form_value(k, tau);
}

double co_r_lower(int d, double lambda) {
  check_dim(d);
  lambda = prep_arg(lambda, lambda_max(d), EvalMode::Strict, "lambda");
  if (lambda <= 1.0)
    return h2_unchecked((1.0 + std::sqrt(std::max(1.0 - lambda * lambda, 0.0))) / 2.0);
  long k = segment_index(lambda * lambda, d, EvalMode::Clamped);
  if (k >= d) k = d - 1;  // right endpoint belongs to the last chord
  const double knot_lo = std::sqrt(2.0 * (k - 1) / k);
  const double knot_hi = std::sqrt(2.0 * k / (k + 1));
  const double slope = (std::log2(k + 1.0) - std::log2(static_cast<double>(k))) / (knot_hi - knot_lo);
  return std::log2(static_cast<double>(k)) + slope * (lambda - knot_lo);
}

double ca_f_upper(int d, double tau) {
  check_dim(d);
  tau = prep_arg(tau, tau_max(d), EvalMode::Strict, "tau");
  if (d == 2) return f_upper(2, tau, EvalMode::Clamped);
  const TangentData tg = ca_tangent(d);
  if (tau <= tg.tau_star) return f_upper(d, tau, EvalMode::Clamped);
  return std::log2(static_cast<double>(d)) + tg.slope * (tau - tau_max(d));
}

TangentData ca_tangent(int d) {
  if (d < 3)
    fail(ErrorCode::BadDimension, "tangent line exists only for d >= 3, got " + std::to_string(d));
  TangentData tg;
  tg.tau_star = (4.0 * d - 6.0) / (static_cast<double>(d) * (d - 1));
  tg.slope = (d - 1.0) / (2.0 * d - 4.0) * std::log2(d - 1.0);
  return tg;
}

double delta_curve(int d, double y) {
  if (d < 3)
    fail(ErrorCode::BadDimension, "delta curve defined for d >= 3, got " + std::to_string(d));
  if (y <= 0.0)
    fail(ErrorCode::OutOfDomain, "delta curve needs y > 0, got " + std::to_string(y));
  return std::log((d - 1.0) * y) - (1.0 - 1.0 / d) * y - (1.0 - 2.0 / d) + 1.0 / (d * y);
}

InflectionPoint find_inflection(int d) {
  if (d < 3)
    fail(ErrorCode::BadDimension, "inflection exists only for d >= 3, got " + std::to_string(d));
  double lo = 2.0 / d + 1e-9;
  if (delta_curve(d, lo) <= 0.0)
    fail(ErrorCode::NoBracket, "delta not positive at left bracket y = " + std::to_string(lo));
  double hi = std::max(2.0 * lo, 1.0);
  while (delta_curve(d, hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e9) fail(ErrorCode::NoBracket, "no sign change found for delta curve");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (delta_curve(d, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  InflectionPoint out;
  out.y0 = 0.5 * (lo + hi);
  const double gamma = out.y0 / (1.0 + out.y0);
  const double dg = d * gamma - 1.0;
  out.tau0 = 2.0 * ((d - 1.0) * (d - 1.0) - dg * dg) / (static_cast<double>(d) * (d - 1));
  return out;
}

ExtremalSpectrum extremal_spectrum(int d, ConstraintKind kind, double value, SpectrumForm form) {
  check_dim(d);
  const double s = kind == ConstraintKind::Lambda
                       ? [&] {
                           const double l = prep_arg(value, lambda_max(d), EvalMode::Strict, "lambda");
                           return l * l;
                         }()
                       : prep_arg(value, tau_max(d), EvalMode::Strict, "tau");
  ExtremalSpectrum out;
  out.d = d;
  out.form = form;
  out.mu.assign(d, 0.0);
  if (form == SpectrumForm::MinForm) {
    long k = segment_index(s, d, EvalMode::Clamped);
    if (k > d) k = d;
    const double arg = 1.0 - (k + 1) * s / (2.0 * k);
    out.t = (1.0 + std::sqrt(std::max(arg, 0.0))) / (k + 1);
    double rest = 1.0;
    for (long i = 0; i < k && i < d; ++i) {
      out.mu[i] = out.t;
      rest -= out.t;
    }
    if (k < d) out.mu[k] = std::max(rest, 0.0);
  } else {
    const double arg = (d - 1.0) * (d - 1.0) - d * (d - 1.0) * s / 2.0;
    out.t = (1.0 + std::sqrt(std::max(arg, 0.0))) / d;
    out.mu[0] = out.t;
    for (int i = 1; i < d; ++i) out.mu[i] = (1.0 - out.t) / (d - 1);
  }
  return out;
}

double SegmentedCurve::eval(double x) const {
  const double top = knots.back();
  if (x < -kEdgeTol || x > top + kEdgeTol)
    fail(ErrorCode::OutOfDomain,
         "argument " + std::to_string(x) + " outside envelope domain [0, " + std::to_string(top) + "]");
  x = std::clamp(x, 0.0, top);
  const CurveSegment* seg = &segments.back();
  for (const CurveSegment& s : segments) {
    if (x <= s.hi) {
      seg = &s;
      break;
    }
  }
  switch (seg->form) {
    case CurveSegment::Form::H2Arc:
      return h2_unchecked((1.0 + std::sqrt(std::max(1.0 - x * x, 0.0))) / 2.0);
    case CurveSegment::Form::Chord:
      return std::log2(static_cast<double>(seg->k)) + seg->slope * (x - seg->lo);
    case CurveSegment::Form::FuArc:
      return max_form_value(d, x);
    case CurveSegment::Form::TangentLine:
      return std::log2(static_cast<double>(d)) + seg->slope * (x - tau_max(d));
  }
  return 0.0;
}

SegmentedCurve co_curve(int d) {
  check_dim(d);
  SegmentedCurve c;
  c.d = d;
  c.kind = SegmentedCurve::Kind::CoRL;
  for (int k = 1; k <= d; ++k) c.knots.push_back(std::sqrt(2.0 * (k - 1) / k));
  CurveSegment arc;
  arc.lo = 0.0;
  arc.hi = 1.0;
  arc.form = CurveSegment::Form::H2Arc;
  arc.k = 1;
  arc.slope = 0.0;
  c.segments.push_back(arc);
  for (int k = 2; k <= d - 1; ++k) {
    CurveSegment seg;
    seg.lo = c.knots[k - 1];
    seg.hi = c.knots[k];
    seg.form = CurveSegment::Form::Chord;
    seg.k = k;
    seg.slope = (std::log2(k + 1.0) - std::log2(static_cast<double>(k))) / (seg.hi - seg.lo);
    c.segments.push_back(seg);
  }
  return c;
}

SegmentedCurve ca_curve(int d) {
  check_dim(d);
  SegmentedCurve c;
  c.d = d;
  c.kind = SegmentedCurve::Kind::CaFU;
  if (d == 2) {
    c.knots = {0.0, 1.0};
    CurveSegment arc;
    arc.lo = 0.0;
    arc.hi = 1.0;
    arc.form = CurveSegment::Form::FuArc;
    arc.k = 0;
    arc.slope = 0.0;
    c.segments.push_back(arc);
    return c;
  }
  const TangentData tg = ca_tangent(d);
  c.knots = {0.0, tg.tau_star, tau_max(d)};
  CurveSegment arc;
  arc.lo = 0.0;
  arc.hi = tg.tau_star;
  arc.form = CurveSegment::Form::FuArc;
  arc.k = 0;
  arc.slope = 0.0;
  c.segments.push_back(arc);
  CurveSegment line;
  line.lo = tg.tau_star;
  line.hi = tau_max(d);
  line.form = CurveSegment::Form::TangentLine;
  line.k = 0;
  line.slope = tg.slope;
  c.segments.push_back(line);
  return c;
}

}  // namespace qbound
