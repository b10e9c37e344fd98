#pragma once

#include "qbound/density.hpp"

namespace qbound {

// Two-qubit concurrence: C = max{0, l1 - l2 - l3 - l4} with l_i the
// descending square roots of the eigenvalues of rho * rho_tilde,
// rho_tilde = (sy x sy) conj(rho) (sy x sy), computed through the Hermitian
// product sqrt(rho) rho_tilde sqrt(rho).
double concurrence_2q(const BipartiteDensityMatrix& rho);

// H2((1 + sqrt(1 - C^2))/2).
double eof_2q(const BipartiteDensityMatrix& rho);

// Pure-state value: the von Neumann entropy of the A marginal.
double eof_pure(const PureState& psi);

// Rank-1 measurement direction on a qubit A: projector (1 + u.sigma)/2 with
// u = (sin t cos p, sin t sin p, cos t).
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;
};

struct DiscordResult {
  double value = 0.0;
  MeasurementBasis argmin;
  int grid = 0;
  bool refined = false;
};

// Measured-on-A discord by exhaustive search over von Neumann measurements:
// min over a (grid+1) x 2*grid (theta, phi) lattice — poles included — of
// sum_k p_k S(rho_B|k) + S(rho_A) - S(rho), then optional coordinate-wise
// golden-section descent from the best lattice point. Upper estimate of the
// true minimum; nonincreasing as the grid refines (the lattice is nested
// under doubling). Requires m = 2.
DiscordResult discord_bruteforce(const BipartiteDensityMatrix& rho, int grid = 64,
                                 bool refine = true);

// Discord of a rank <= 2 two-qubit state through the purification identity:
// D_A = E_F(rho_BC) + S(rho_A) - S(rho_AB), with C a qubit so E_F(rho_BC)
// is the closed-form two-qubit value.
double discord_kw_rank2(const BipartiteDensityMatrix& rho);

// Residual of the purification identity given an external E_F(rho_BC):
// D_A(brute force) - S(rho_A) + S(rho_AB) - eof_bc.
double check_kw(const BipartiteDensityMatrix& rho, double eof_bc, int grid = 128);

}  // namespace qbound
