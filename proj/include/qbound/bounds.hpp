#pragma once

#include <vector>

#include "qbound/curves.hpp"
#include "qbound/density.hpp"
#include "qbound/observables.hpp"

namespace qbound {

enum class Quantity { EntanglementOfFormation, DiscordA };

enum class BoundFlag {
  OutOfPhysicalDomain,   // input purities below their maximally-mixed floors
  TwoQubitLambda6Used,   // the two-qubit lambda6 variant entered the bound
  UpperExceedsLogDim,    // upper bound above log2 of the relevant dimension
};

struct BoundInterval {
  Quantity quantity = Quantity::EntanglementOfFormation;
  double lower = 0.0;      // max(0, raw_lower)
  double upper = 0.0;
  double raw_lower = 0.0;  // before the floor at zero
  EvalMode mode = EvalMode::Clamped;
  std::vector<BoundFlag> flags;

  bool has_flag(BoundFlag f) const;
};

// co[R_L^(n)](lambda5) <= EOF <= ca[F_U^(n)](lambda6) with n the smaller
// subsystem dimension (EOF is symmetric, the theorem wants m >= n; the
// subsystems are relabeled if needed).
BoundInterval eof_bounds(const LambdaSet& lam, EvalMode mode = EvalMode::Clamped);

struct DiscordLower {
  double raw = 0.0;
  double floored = 0.0;
};

// R_L^(m)(lambda1) - R_U^(mn)(lambda2) + co[R_L^(n)](lambda3). A is the
// measured subsystem; no relabeling.
DiscordLower discord_lower(const LambdaSet& lam, EvalMode mode = EvalMode::Clamped);

// R_U^(m)(lambda1) - R_L^(mn)(lambda2) + ca[F_U^(n)](lambda4).
double discord_upper(const LambdaSet& lam, EvalMode mode = EvalMode::Clamped);

BoundInterval discord_bounds(const LambdaSet& lam, EvalMode mode = EvalMode::Clamped);

struct FullReport {
  PurityTriple purities;
  LambdaSet lambdas;
  BoundInterval eof;
  BoundInterval discord;
};

FullReport full_report(const BipartiteDensityMatrix& rho, EvalMode mode = EvalMode::Clamped);
FullReport full_report_from_purities(const PurityTriple& p, int m, int n,
                                     EvalMode mode = EvalMode::Clamped);
FullReport full_report_from_probs(const CorrelationMeasurementRecord& rec, int m, int n,
                                  EvalMode mode = EvalMode::Clamped);

}  // namespace qbound
