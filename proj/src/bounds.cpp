#include "qbound/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

// The envelopes are strict-domain functions; under Clamped and PaperCompat
// the bound evaluators project the measured argument onto the domain first.
// (The PaperCompat segment extension applies to R_L/R_U only — the envelope
// chords end at the last knot and have no continuation.)
double env_arg(double x, double top, EvalMode mode) {
  if (mode == EvalMode::Strict) return x;
  return std::clamp(x, 0.0, top);
}

double lambda_top(int d) { return std::sqrt(2.0 * (d - 1) / d); }
double tau_top(int d) { return 2.0 * (d - 1) / d; }

void add_common_flags(BoundInterval& b, const LambdaSet& lam) {
  if (!lam.physical_inputs) b.flags.push_back(BoundFlag::OutOfPhysicalDomain);
}

}  // namespace

bool BoundInterval::has_flag(BoundFlag f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

BoundInterval eof_bounds(const LambdaSet& lam, EvalMode mode) {
  const int n = std::min(lam.m, lam.n);
  BoundInterval b;
  b.quantity = Quantity::EntanglementOfFormation;
  b.mode = mode;
  b.raw_lower = co_r_lower(n, env_arg(lam.lambda5, lambda_top(n), mode));
  b.lower = std::max(0.0, b.raw_lower);
  b.upper = ca_f_upper(n, env_arg(lam.lambda6, tau_top(n), mode));
  add_common_flags(b, lam);
  if (lam.two_qubit_special_lambda6) b.flags.push_back(BoundFlag::TwoQubitLambda6Used);
  if (b.upper > std::log2(static_cast<double>(n)) + 1e-9)
    b.flags.push_back(BoundFlag::UpperExceedsLogDim);
  return b;
}

DiscordLower discord_lower(const LambdaSet& lam, EvalMode mode) {
  const int m = lam.m;
  const int n = lam.n;
  const int mn = m * n;
  DiscordLower out;
  out.raw = r_lower(m, lam.lambda1, mode) - r_upper(mn, lam.lambda2, mode) +
            co_r_lower(n, env_arg(lam.lambda3, lambda_top(n), mode));
  out.floored = std::max(0.0, out.raw);
  return out;
}

double discord_upper(const LambdaSet& lam, EvalMode mode) {
  const int m = lam.m;
  const int n = lam.n;
  const int mn = m * n;
  return r_upper(m, lam.lambda1, mode) - r_lower(mn, lam.lambda2, mode) +
         ca_f_upper(n, env_arg(lam.lambda4, tau_top(n), mode));
}

BoundInterval discord_bounds(const LambdaSet& lam, EvalMode mode) {
  BoundInterval b;
  b.quantity = Quantity::DiscordA;
  b.mode = mode;
  const DiscordLower lo = discord_lower(lam, mode);
  b.raw_lower = lo.raw;
  b.lower = lo.floored;
  b.upper = discord_upper(lam, mode);
  add_common_flags(b, lam);
  if (b.upper > std::log2(static_cast<double>(lam.m)) + 1e-9)
    b.flags.push_back(BoundFlag::UpperExceedsLogDim);
  return b;
}

FullReport full_report_from_purities(const PurityTriple& p, int m, int n, EvalMode mode) {
  FullReport rep;
  rep.purities = p;
  rep.lambdas = lambdas_from_purities(p, m, n);
  rep.eof = eof_bounds(rep.lambdas, mode);
  rep.discord = discord_bounds(rep.lambdas, mode);
  return rep;
}

FullReport full_report(const BipartiteDensityMatrix& rho, EvalMode mode) {
  return full_report_from_purities(purities(rho), rho.m, rho.n, mode);
}

FullReport full_report_from_probs(const CorrelationMeasurementRecord& rec, int m, int n,
                                  EvalMode mode) {
  return full_report_from_purities(purities_from_probs(rec, m, n), m, n, mode);
}

}  // namespace qbound
