#include "qbound/sampling.hpp"

#include <cmath>
#include <string>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

Eigen::MatrixXcd ginibre(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      g(r, c) = std::complex<double>(rng.normal(), rng.normal()) / std::sqrt(2.0);
  return g;
}

Eigen::VectorXcd haar_vector(int dim, Rng& rng) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = std::complex<double>(rng.normal(), rng.normal());
  return v / v.norm();
}

Eigen::MatrixXcd hs_matrix(int dim, int rank, Rng& rng) {
  const Eigen::MatrixXcd g = ginibre(dim, rank, rng);
  Eigen::MatrixXcd rho = g * g.adjoint();
  return rho / rho.trace().real();
}

BipartiteDensityMatrix window_item(int m, int n, double lo, double hi, Rng& rng) {
  const int mn = m * n;
  if (hi <= 1e-6) {
    const Eigen::VectorXcd phi = haar_vector(mn, rng);
    return make_density(phi * phi.adjoint(), m, n);
  }
  const double p_low = 1.0 - hi * hi;
  const double p_high = 1.0 - lo * lo;
  for (int attempt = 0; attempt < 100; ++attempt) {
    // Target drawn inside the middle 96% of the purity window so that the
    // closed-form solve cannot land on an edge through rounding.
    const double t = p_low + (0.02 + 0.96 * rng.uniform()) * (p_high - p_low);
    const Eigen::MatrixXcd rho0 = hs_matrix(mn, mn, rng);
    const double p0 = purity(rho0);
    Eigen::MatrixXcd sigma;
    if (t >= p0) {
      // (1-w)|phi><phi| + w rho0; purity is a convex parabola in w with
      // P(0) = 1 and P(1) = p0 <= t, so the first crossing lies in [0, 1].
      const Eigen::VectorXcd phi = haar_vector(mn, rng);
      const double c = (phi.adjoint() * rho0 * phi).value().real();
      const double qa = 1.0 - 2.0 * c + p0;
      const double qb = 2.0 * (c - 1.0);
      const double qc = 1.0 - t;
      const double disc = qb * qb - 4.0 * qa * qc;
      if (disc < 0.0 || qa <= 0.0) continue;
      const double w = (-qb - std::sqrt(disc)) / (2.0 * qa);
      sigma = (1.0 - w) * (phi * phi.adjoint()) + w * rho0;
    } else {
      // (1-v) rho0 + v I/mn; purity decreases monotonically to 1/mn.
      const double span = p0 - 1.0 / mn;
      if (span <= 0.0) continue;
      const double v = 1.0 - std::sqrt(std::max(0.0, (t - 1.0 / mn) / span));
      sigma = (1.0 - v) * rho0 +
              (v / mn) * Eigen::MatrixXcd::Identity(mn, mn);
    }
    const double sl = std::sqrt(std::max(0.0, 1.0 - purity(sigma)));
    if (sl >= lo && sl <= hi) return make_density(sigma, m, n);
  }
  fail(ErrorCode::WindowInfeasible,
       "no state with sqrt(1 - purity) in [" + std::to_string(lo) + ", " + std::to_string(hi) +
           "] for " + std::to_string(m) + "x" + std::to_string(n) + " after 100 attempts");
}

}  // namespace

BipartiteDensityMatrix sample_state(int m, int n, int rank, std::uint64_t seed) {
  if (m < 2 || n < 2 || m * n > 64)
    fail(ErrorCode::BadDimension, "sampling needs 2 <= m, n and mn <= 64");
  if (rank < 1 || rank > m * n)
    fail(ErrorCode::BadRank,
         "rank " + std::to_string(rank) + " outside [1, " + std::to_string(m * n) + "]");
  Rng rng(seed);
  return make_density(hs_matrix(m * n, rank, rng), m, n);
}

PureState sample_pure(int m, int n, std::uint64_t seed) {
  if (m < 2 || n < 2 || m * n > 64)
    fail(ErrorCode::BadDimension, "sampling needs 2 <= m, n and mn <= 64");
  Rng rng(seed);
  return make_pure(haar_vector(m * n, rng), m, n);
}

std::vector<BipartiteDensityMatrix> sample_in_window(int m, int n, double lo, double hi,
                                                     int count, std::uint64_t seed) {
  if (m < 2 || n < 2 || m * n > 64)
    fail(ErrorCode::BadDimension, "sampling needs 2 <= m, n and mn <= 64");
  if (count < 1) fail(ErrorCode::OutOfDomain, "count must be >= 1");
  const int mn = m * n;
  const double top = std::sqrt((mn - 1.0) / mn);
  if (!(lo >= 0.0 && lo < hi && hi <= top + 1e-12))
    fail(ErrorCode::OutOfDomain,
         "window [" + std::to_string(lo) + ", " + std::to_string(hi) +
             "] invalid; need 0 <= lo < hi <= " + std::to_string(top));
  std::vector<BipartiteDensityMatrix> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Rng rng(seed + static_cast<std::uint64_t>(i));
    out.push_back(window_item(m, n, lo, std::min(hi, top), rng));
  }
  return out;
}

std::vector<double> sample_simplex(int d, Rng& rng) {
  if (d < 2) fail(ErrorCode::BadDimension, "simplex dimension must be >= 2");
  std::vector<double> mu(d);
  double total = 0.0;
  for (int i = 0; i < d; ++i) {
    mu[i] = -std::log(1.0 - rng.uniform());
    total += mu[i];
  }
  for (double& x : mu) x /= total;
  return mu;
}

}  // namespace qbound
