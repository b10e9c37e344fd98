#include "qbound/density.hpp"

#include <algorithm>
#include <cmath>

#include "qbound/eig.hpp"
#include "qbound/errors.hpp"

namespace qbound {

namespace {

constexpr double kTol = 1e-10;

BipartiteDensityMatrix validate(const Eigen::MatrixXcd& matrix, int m, int n,
                                const std::string& label, bool relaxed) {
  if (m < 1 || n < 1 || (!relaxed && (m < 2 || n < 2)))
    fail(ErrorCode::BadDimension,
         "subsystem dimensions must be at least 2 (got " + std::to_string(m) +
             "x" + std::to_string(n) + ")");
  if (m * n > 64)
    fail(ErrorCode::BadDimension, "total dimension exceeds 64");
  if (matrix.rows() != matrix.cols() || matrix.rows() != m * n)
    fail(ErrorCode::DimensionMismatch,
         "matrix size " + std::to_string(matrix.rows()) + "x" +
             std::to_string(matrix.cols()) + " does not equal mn = " +
             std::to_string(m * n));

  double herm_dev = 0.0;
  for (int i = 0; i < matrix.rows(); ++i)
    for (int j = 0; j < matrix.cols(); ++j)
      herm_dev = std::max(herm_dev,
                          std::abs(matrix(i, j) - std::conj(matrix(j, i))));
  if (herm_dev > kTol)
    fail(ErrorCode::NotHermitian,
         "max |M(i,j) - conj(M(j,i))| = " + std::to_string(herm_dev));

  const std::complex<double> tr = matrix.trace();
  if (std::abs(tr - 1.0) > kTol)
    fail(ErrorCode::NotUnitTrace, "Tr M = " + std::to_string(tr.real()) +
                                      (tr.imag() >= 0 ? "+" : "") +
                                      std::to_string(tr.imag()) + "i");

  const std::vector<double> ev = eigvals_hermitian(matrix);
  if (!ev.empty() && ev.front() < -kTol)
    fail(ErrorCode::NotPSD,
         "smallest eigenvalue " + std::to_string(ev.front()));

  BipartiteDensityMatrix rho;
  rho.m = m;
  rho.n = n;
  rho.mat = (matrix + matrix.adjoint()) / 2.0;
  rho.label = label;
  return rho;
}

}  // namespace

BipartiteDensityMatrix make_density(const Eigen::MatrixXcd& matrix, int m,
                                    int n, const std::string& label) {
  return validate(matrix, m, n, label, false);
}

BipartiteDensityMatrix make_density_relaxed(const Eigen::MatrixXcd& matrix,
                                            int m, int n,
                                            const std::string& label) {
  return validate(matrix, m, n, label, true);
}

PureState make_pure(const Eigen::VectorXcd& amplitudes, int m, int n) {
  if (amplitudes.size() != m * n)
    fail(ErrorCode::DimensionMismatch, "amplitude vector length mismatch");
  const double nrm = amplitudes.norm();
  if (std::abs(nrm - 1.0) > kTol)
    fail(ErrorCode::NotUnitTrace, "norm " + std::to_string(nrm));
  PureState psi;
  psi.m = m;
  psi.n = n;
  psi.amp = amplitudes;
  return psi;
}

BipartiteDensityMatrix PureState::projector() const {
  BipartiteDensityMatrix rho;
  rho.m = m;
  rho.n = n;
  rho.mat = amp * amp.adjoint();
  return rho;
}

Eigen::MatrixXcd partial_trace(const BipartiteDensityMatrix& rho,
                               Subsystem keep) {
  const int m = rho.m, n = rho.n;
  if (keep == Subsystem::A) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(m, m);
    for (int a = 0; a < m; ++a)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b = 0; b < n; ++b) out(a, a2) += rho.mat(a * n + b, a2 * n + b);
    return out;
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int b = 0; b < n; ++b)
    for (int b2 = 0; b2 < n; ++b2)
      for (int a = 0; a < m; ++a) out(b, b2) += rho.mat(a * n + b, a * n + b2);
  return out;
}

double purity(const Eigen::MatrixXcd& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (int i = 0; i < rho.rows(); ++i)
    for (int j = 0; j < rho.cols(); ++j) s += std::norm(rho(i, j));
  return s;
}

PurityTriple purities(const BipartiteDensityMatrix& rho) {
  PurityTriple p;
  p.tr_rho2 = purity(rho.mat);
  p.tr_rhoA2 = purity(partial_trace(rho, Subsystem::A));
  p.tr_rhoB2 = purity(partial_trace(rho, Subsystem::B));
  p.source = PurityTriple::Source::FromState;
  p.physical = true;
  return p;
}

PurityTriple make_purity_triple(double tr_rho2, double tr_rhoA2, double tr_rhoB2,
                                PurityTriple::Source source, int m, int n) {
  if (m < 2 || n < 2)
    fail(ErrorCode::BadDimension,
         "purity triple needs subsystem dimensions >= 2, got " + std::to_string(m) + "x" +
             std::to_string(n));
  const auto checked = [](double v, const char* name) {
    if (v <= 0.0 || v > 1.0 + 1e-9)
      fail(ErrorCode::OutOfDomain,
           std::string(name) + " = " + std::to_string(v) + " outside (0, 1]");
    return std::min(v, 1.0);
  };
  PurityTriple p;
  p.tr_rho2 = checked(tr_rho2, "tr_rho2");
  p.tr_rhoA2 = checked(tr_rhoA2, "tr_rhoA2");
  p.tr_rhoB2 = checked(tr_rhoB2, "tr_rhoB2");
  p.source = source;
  p.physical = p.tr_rhoA2 >= 1.0 / m - 1e-9 && p.tr_rhoB2 >= 1.0 / n - 1e-9 &&
               p.tr_rho2 >= 1.0 / (m * n) - 1e-9;
  return p;
}

double shannon_bits(const std::vector<double>& mu) {
  double h = 0.0;
  for (double x : mu) {
    const double c = std::clamp(x, 0.0, 1.0);
    if (c > 0.0) h -= c * std::log2(c);
  }
  return h;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  return shannon_bits(eigvals_hermitian(rho));
}

double linear_entropy(const Eigen::MatrixXcd& rho) {
  return 2.0 * (1.0 - purity(rho));
}

int numerical_rank(const BipartiteDensityMatrix& rho, double threshold) {
  int r = 0;
  for (double ev : eigvals_hermitian(rho.mat))
    if (ev > threshold) ++r;
  return r;
}

PurificationTriple purify(const BipartiteDensityMatrix& rho) {
  const EigResult eig = eig_hermitian(rho.mat);
  const int d = rho.dim();

  std::vector<int> kept;
  for (int i = 0; i < d; ++i)
    if (eig.values[i] > 1e-10) kept.push_back(i);
  const int r = static_cast<int>(kept.size());

  PurificationTriple out;
  out.dim_c = r;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(d * r);
  for (int c = 0; c < r; ++c) {
    const double w = std::sqrt(eig.values[kept[c]]);
    for (int i = 0; i < d; ++i) psi(i * r + c) = w * eig.vectors(i, kept[c]);
  }
  psi /= psi.norm();
  out.psi_abc.m = rho.m;
  out.psi_abc.n = rho.n * r;  // B x C as one factor, index b*r + c
  out.psi_abc.amp = psi;

  // rho_BC = Tr_A |psi><psi| with composite index (b*r + c).
  const int nbc = rho.n * r;
  Eigen::MatrixXcd bc = Eigen::MatrixXcd::Zero(nbc, nbc);
  for (int a = 0; a < rho.m; ++a)
    for (int i = 0; i < nbc; ++i)
      for (int j = 0; j < nbc; ++j)
        bc(i, j) += psi(a * nbc + i) * std::conj(psi(a * nbc + j));
  out.rho_bc = make_density_relaxed(bc, rho.n, r, rho.label);
  return out;
}

}  // namespace qbound
