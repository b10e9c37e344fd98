#include "qbound/eig.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "qbound/errors.hpp"

namespace qbound {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kOffTol = 1e-13;
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const Eigen::MatrixXcd& a) {
  double s = 0.0;
  const int n = static_cast<int>(a.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

void check_hermitian(const Eigen::MatrixXcd& h) {
  if (h.rows() != h.cols())
    fail(ErrorCode::DimensionMismatch, "matrix is not square");
  if (h.rows() > 64)
    fail(ErrorCode::BadDimension, "dimension exceeds 64");
  double dev = 0.0;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      dev = std::max(dev, std::abs(h(i, j) - std::conj(h(j, i))));
  if (dev > kHermTol)
    fail(ErrorCode::NotHermitian,
         "max |H(i,j) - conj(H(j,i))| = " + std::to_string(dev));
}

EigResult jacobi(const Eigen::MatrixXcd& h, bool want_vectors) {
  check_hermitian(h);
  const int n = static_cast<int>(h.rows());
  Eigen::MatrixXcd a = (h + h.adjoint()) / 2.0;  // symmetrize roundoff away
  Eigen::MatrixXcd v;
  if (want_vectors) v = Eigen::MatrixXcd::Identity(n, n);

  int sweep = 0;
  while (offdiag_frobenius(a) >= kOffTol) {
    if (++sweep > kMaxSweeps)
      fail(ErrorCode::NoConvergence,
           "Jacobi sweeps exceeded " + std::to_string(kMaxSweeps) +
               ", off-diagonal mass " + std::to_string(offdiag_frobenius(a)));
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        // Phase e^{i phi} = apq / |apq|; the rotation below zeroes a(p,q).
        const std::complex<double> phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        // Smaller-magnitude root of t^2 - 2 theta t - 1 = 0: the rotation
        // U = [[c, -s phi], [s conj(phi), c]] then zeroes a(p,q) exactly.
        const double t = (theta >= 0.0 ? -1.0 : 1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const std::complex<double> aip = a(i, p);
          const std::complex<double> aiq = a(i, q);
          a(i, p) = c * aip + s * std::conj(phase) * aiq;
          a(i, q) = -s * phase * aip + c * aiq;
          a(p, i) = std::conj(a(i, p));
          a(q, i) = std::conj(a(i, q));
        }
        a(p, p) = app + t * r;
        a(q, q) = aqq - t * r;
        a(p, q) = a(q, p) = 0.0;

        if (want_vectors) {
          for (int i = 0; i < n; ++i) {
            const std::complex<double> vip = v(i, p);
            const std::complex<double> viq = v(i, q);
            v(i, p) = c * vip + s * std::conj(phase) * viq;
            v(i, q) = -s * phase * vip + c * viq;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigResult res;
  res.values.resize(n);
  for (int i = 0; i < n; ++i) res.values[i] = a(order[i], order[i]).real();
  if (want_vectors) {
    res.vectors.resize(n, n);
    for (int i = 0; i < n; ++i) res.vectors.col(i) = v.col(order[i]);
  }
  return res;
}

}  // namespace

EigResult eig_hermitian(const Eigen::MatrixXcd& h) { return jacobi(h, true); }

std::vector<double> eigvals_hermitian(const Eigen::MatrixXcd& h) {
  return jacobi(h, false).values;
}

}  // namespace qbound
