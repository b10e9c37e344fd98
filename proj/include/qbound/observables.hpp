#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "qbound/density.hpp"

namespace qbound {

// Outcome probabilities of the two-copy antisymmetric-projector measurement:
// p_ab = Tr[(rho x rho)(P_a on the A copies x P_b on the B copies)] with
// a, b in {-, +}. p_pp is optional on input records (it is 1 minus the rest).
struct CorrelationMeasurementRecord {
  double p_mm = 0.0;
  double p_mp = 0.0;
  double p_pm = 0.0;
  std::optional<double> p_pp;
  std::optional<long long> shot_count;
  // Set when p_mm + p_mp or p_mm + p_pm exceeds 1/2: the implied subsystem
  // purity falls below its floor. Flagged, not rejected — measured data may
  // do this.
  bool marginals_flagged = false;
};

CorrelationMeasurementRecord make_record(double p_mm, double p_mp, double p_pm,
                                         std::optional<double> p_pp = std::nullopt,
                                         std::optional<long long> shot_count = std::nullopt);

struct TwoCopyExpectations {
  CorrelationMeasurementRecord record;
  double v1 = 0.0;  // 4(p_mm - p_pm) = 2(Tr rho^2 - Tr rho_A^2)
  double v2 = 0.0;  // 4(p_mm - p_mp) = 2(Tr rho^2 - Tr rho_B^2)
  double k1 = 0.0;  // 4(p_mm + p_mp) = 2(1 - Tr rho_A^2)
  double k2 = 0.0;  // 4(p_mm + p_pm) = 2(1 - Tr rho_B^2)
};

// Projector (1 - SWAP)/2 onto the antisymmetric subspace of C^d x C^d.
Eigen::MatrixXd antisym_projector(int d);

// The four p_ab by explicit contraction of rho x rho against the projectors,
// with the copy reordering A1 B1 A2 B2 -> (A1 A2)(B1 B2) done index-wise (the
// doubled matrix is never materialized).
TwoCopyExpectations twocopy_expectations(const BipartiteDensityMatrix& rho);

// Inverts the probability identities for the two-qubit setting:
// Tr rho_A^2 = 1 - 2(p_mm + p_mp), Tr rho_B^2 = 1 - 2(p_mm + p_pm),
// Tr rho^2 = Tr rho_A^2 + 2(p_mm - p_pm), cross-checked against the
// Tr rho_B^2 route.
PurityTriple purities_from_probs(const CorrelationMeasurementRecord& rec, int m, int n);

struct LambdaSet {
  int m = 2;
  int n = 2;
  double lambda1 = 0.0;  // sqrt(2(1 - Tr rho_A^2))
  double lambda2 = 0.0;  // sqrt(2(1 - Tr rho^2))
  double lambda3 = 0.0;  // sqrt(max{0, 2(Tr rho_A^2 - Tr rho_B^2), 2(Tr rho_A^2 - Tr rho^2)})
  double lambda4 = 0.0;  // min{2(1 - Tr rho_B^2), 2(1 - Tr rho^2)}
  double lambda5 = 0.0;  // sqrt(max{0, 2(Tr rho^2 - Tr rho_A^2), 2(Tr rho^2 - Tr rho_B^2)})
  double lambda6 = 0.0;  // min{2(1 - Tr rho_A^2), 2(1 - Tr rho_B^2)} (+ two-qubit variant)
  bool two_qubit_special_lambda6 = false;
  // False when the purities fall below their floors (1/m, 1/n, 1/(mn)) —
  // possible for measured data, never for a valid state.
  bool physical_inputs = true;
};

LambdaSet lambdas_from_purities(const PurityTriple& p, int m, int n);
LambdaSet lambdas_from_state(const BipartiteDensityMatrix& rho);

// Multinomial draw over the four outcome probabilities; the returned record
// holds the observed frequencies and the shot count.
CorrelationMeasurementRecord simulate_shots(const BipartiteDensityMatrix& rho, long long shots,
                                            std::uint64_t seed);

}  // namespace qbound
