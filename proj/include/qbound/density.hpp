#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace qbound {

// Composite index convention everywhere: i = a*n + b for |a>_A |b>_B
// (A-major, row-major storage). Partial traces and the two-copy
// permutation in observables.cpp depend on it.

struct BipartiteDensityMatrix {
  int m = 0;
  int n = 0;
  Eigen::MatrixXcd mat;
  std::string label;

  int dim() const { return m * n; }
};

struct PureState {
  int m = 0;
  int n = 0;
  Eigen::VectorXcd amp;

  BipartiteDensityMatrix projector() const;
};

struct PurityTriple {
  double tr_rho2 = 0.0;
  double tr_rhoA2 = 0.0;
  double tr_rhoB2 = 0.0;
  enum class Source { FromState, FromProbabilities } source = Source::FromState;
  bool physical = true;  // FromProbabilities may carry impossible values
};

struct PurificationTriple {
  PureState psi_abc;              // on A x (B x C), index ((a*n)+b)*dim_c + c
  int dim_c = 0;                  // numerical rank of the input
  BipartiteDensityMatrix rho_bc;  // dims (n, dim_c); dim_c may be 1
};

// Validates Hermiticity (1e-10), unit trace (1e-10), positivity
// (min eigenvalue >= -1e-10), 2 <= m,n and mn <= 64.
BipartiteDensityMatrix make_density(const Eigen::MatrixXcd& matrix, int m, int n,
                                    const std::string& label = "");

// Same checks except the dimension bounds: factors of size 1 are allowed.
// Needed for purifications of pure states, where C is trivial.
BipartiteDensityMatrix make_density_relaxed(const Eigen::MatrixXcd& matrix,
                                            int m, int n,
                                            const std::string& label = "");

PureState make_pure(const Eigen::VectorXcd& amplitudes, int m, int n);

enum class Subsystem { A, B };
Eigen::MatrixXcd partial_trace(const BipartiteDensityMatrix& rho, Subsystem keep);

double purity(const Eigen::MatrixXcd& rho);
PurityTriple purities(const BipartiteDensityMatrix& rho);

// Range-checks a triple (each value in (0, 1], 1e-9 edge tolerance) and
// marks whether it respects the maximally-mixed floors 1/m, 1/n, 1/(mn).
// Measured triples may fall below the floors; that is flagged, not rejected.
PurityTriple make_purity_triple(double tr_rho2, double tr_rhoA2, double tr_rhoB2,
                                PurityTriple::Source source, int m, int n);

// S_V = -Tr(rho log2 rho); eigenvalues clamped into [0,1], 0 log 0 := 0.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);
double shannon_bits(const std::vector<double>& mu);

// S_L = 2(1 - Tr rho^2).
double linear_entropy(const Eigen::MatrixXcd& rho);

// |psi>_ABC = sum_r sqrt(mu_r) |v_r>_AB |r>_C over eigenvalues mu_r > 1e-10.
PurificationTriple purify(const BipartiteDensityMatrix& rho);

int numerical_rank(const BipartiteDensityMatrix& rho, double threshold = 1e-10);

}  // namespace qbound
