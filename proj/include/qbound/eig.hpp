#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qbound {

struct EigResult {
  std::vector<double> values;   // ascending
  Eigen::MatrixXcd vectors;     // columns match values; unitary
};

// Cyclic Jacobi diagonalization for complex Hermitian matrices (dim <= 64).
// Each rotation removes a phase, then applies a real Rutishauser rotation.
// Converges when the off-diagonal Frobenius mass drops below 1e-13; throws
// Error(NoConvergence) after 100 sweeps, Error(NotHermitian) on bad input.
EigResult eig_hermitian(const Eigen::MatrixXcd& h);

// Eigenvalues only (same algorithm, skips accumulating the basis).
std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& h);

}  // namespace qbound
