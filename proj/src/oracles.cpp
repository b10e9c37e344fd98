#include "qbound/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "qbound/curves.hpp"
#include "qbound/eig.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

constexpr double kPi = 3.14159265358979323846;

Eigen::MatrixXcd matrix_sqrt_psd(const Eigen::MatrixXcd& h) {
  const EigResult e = eig_hermitian(h);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
  for (int i = 0; i < h.rows(); ++i) {
    const double mu = std::max(0.0, e.values[i]);
    s += std::sqrt(mu) * (e.vectors.col(i) * e.vectors.col(i).adjoint());
  }
  return s;
}

// sy x sy in the composite index convention: antidiagonal (-1, 1, 1, -1).
Eigen::MatrixXd spin_flip_matrix() {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  return y;
}

// Golden-section minimization on [a, b]; f must be unimodal near the
// minimum. Returns the midpoint of the final bracket.
double golden_min(const std::function<double(double)>& f, double a, double b, int iters) {
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a);
  double x2 = a + gr * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-8; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  return 0.5 * (a + b);
}

// sum_k p_k S(rho_B|k) for the projective measurement along (theta, phi) on
// A. Outcomes with p_k < 1e-12 contribute zero (removable singularity).
double conditional_entropy(const BipartiteDensityMatrix& rho, const Eigen::MatrixXcd& rho_b,
                           double theta, double phi) {
  const int n = rho.n;
  const std::complex<double> u0(std::cos(0.5 * theta), 0.0);
  const std::complex<double> u1 = std::polar(std::sin(0.5 * theta), phi);
  Eigen::MatrixXcd m_u = Eigen::MatrixXcd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int bp = 0; bp < n; ++bp)
      m_u(b, bp) = std::conj(u0) * u0 * rho.mat(b, bp) + std::conj(u0) * u1 * rho.mat(b, n + bp) +
                   std::conj(u1) * u0 * rho.mat(n + b, bp) +
                   std::conj(u1) * u1 * rho.mat(n + b, n + bp);
  const Eigen::MatrixXcd m_perp = rho_b - m_u;

  double total = 0.0;
  const Eigen::MatrixXcd* parts[2] = {&m_u, &m_perp};
  for (const Eigen::MatrixXcd* mk : parts) {
    const std::vector<double> eta = eigvals_hermitian(*mk);
    double pk = 0.0;
    for (double x : eta) pk += std::max(0.0, x);
    if (pk < 1e-12) continue;
    double s = 0.0;
    for (double x : eta) {
      const double nu = std::clamp(x / pk, 0.0, 1.0);
      if (nu > 0.0) s -= nu * std::log2(nu);
    }
    total += pk * s;
  }
  return total;
}

}  // namespace

double concurrence_2q(const BipartiteDensityMatrix& rho) {
  if (rho.m != 2 || rho.n != 2)
    fail(ErrorCode::BadDimension, "concurrence is defined for 2x2 states");
  const Eigen::MatrixXd y = spin_flip_matrix();
  const Eigen::MatrixXcd tilde = y * rho.mat.conjugate() * y;
  const Eigen::MatrixXcd root = matrix_sqrt_psd(rho.mat);
  const EigResult e = eig_hermitian(root * tilde * root);
  // Ascending eigenvalues of an operator similar to rho * rho_tilde.
  double c = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double l = std::sqrt(std::max(0.0, e.values[i]));
    c += (i == 3 ? l : -l);
  }
  return std::clamp(c, 0.0, 1.0);
}

double eof_2q(const BipartiteDensityMatrix& rho) {
  const double c = concurrence_2q(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double eof_pure(const PureState& psi) {
  return von_neumann_entropy(partial_trace(psi.projector(), Subsystem::A));
}

DiscordResult discord_bruteforce(const BipartiteDensityMatrix& rho, int grid, bool refine) {
  if (rho.m != 2)
    fail(ErrorCode::BadDimension,
         "brute-force discord requires a qubit on the measured side, got m = " +
             std::to_string(rho.m));
  if (grid < 32) fail(ErrorCode::OutOfDomain, "grid must be >= 32");

  const Eigen::MatrixXcd rho_b = partial_trace(rho, Subsystem::B);
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_ab = von_neumann_entropy(rho.mat);
  const auto objective = [&](double theta, double phi) {
    return conditional_entropy(rho, rho_b, theta, phi);
  };

  double best = 0.0;
  MeasurementBasis arg;
  bool first = true;
  for (int i = 0; i <= grid; ++i) {
    const double theta = kPi * i / grid;
    for (int j = 0; j < 2 * grid; ++j) {
      const double phi = kPi * j / grid;
      const double v = objective(theta, phi);
      if (first || v < best) {
        first = false;
        best = v;
        arg.theta = theta;
        arg.phi = phi;
      }
    }
  }

  if (refine) {
    const double step = kPi / grid;
    for (int round = 0; round < 2; ++round) {
      arg.theta = golden_min([&](double t) { return objective(t, arg.phi); },
                             std::max(0.0, arg.theta - step), std::min(kPi, arg.theta + step), 50);
      arg.phi = golden_min([&](double p) { return objective(arg.theta, p); },
                           arg.phi - step, arg.phi + step, 50);
      const double v = objective(arg.theta, arg.phi);
      if (v < best) best = v;
    }
  }

  DiscordResult out;
  out.value = std::max(0.0, best + s_a - s_ab);
  out.argmin = arg;
  out.grid = grid;
  out.refined = refine;
  return out;
}

double discord_kw_rank2(const BipartiteDensityMatrix& rho) {
  if (rho.m != 2 || rho.n != 2)
    fail(ErrorCode::BadDimension, "purification shortcut is implemented for 2x2 states");
  const int rank = numerical_rank(rho);
  if (rank > 2)
    fail(ErrorCode::RankTooHigh,
         "purifying system must be a qubit; state has rank " + std::to_string(rank));
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_ab = von_neumann_entropy(rho.mat);
  double ef_bc = 0.0;
  if (rank == 2) {
    const PurificationTriple p = purify(rho);
    ef_bc = eof_2q(p.rho_bc);
  }
  return ef_bc + s_a - s_ab;
}

double check_kw(const BipartiteDensityMatrix& rho, double eof_bc, int grid) {
  const DiscordResult d = discord_bruteforce(rho, grid, true);
  const double s_a = von_neumann_entropy(partial_trace(rho, Subsystem::A));
  const double s_ab = von_neumann_entropy(rho.mat);
  return d.value - s_a + s_ab - eof_bc;
}

}  // namespace qbound
