#include "qbound/observables.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qbound/errors.hpp"
#include "qbound/rng.hpp"

namespace qbound {

namespace {

constexpr double kProbTol = 1e-9;

double checked_prob(double p, const char* name) {
  if (p < -kProbTol || p > 1.0 + kProbTol)
    fail(ErrorCode::InconsistentRecord,
         std::string(name) + " = " + std::to_string(p) + " is not a probability");
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace

CorrelationMeasurementRecord make_record(double p_mm, double p_mp, double p_pm,
                                         std::optional<double> p_pp,
                                         std::optional<long long> shot_count) {
  CorrelationMeasurementRecord rec;
  rec.p_mm = checked_prob(p_mm, "p_mm");
  rec.p_mp = checked_prob(p_mp, "p_mp");
  rec.p_pm = checked_prob(p_pm, "p_pm");
  const double partial = rec.p_mm + rec.p_mp + rec.p_pm;
  if (partial > 1.0 + 1e-6)
    fail(ErrorCode::InconsistentRecord,
         "probabilities sum to " + std::to_string(partial) + " > 1");
  if (p_pp) {
    rec.p_pp = checked_prob(*p_pp, "p_pp");
    const double total = partial + *rec.p_pp;
    if (std::abs(total - 1.0) > 1e-6)
      fail(ErrorCode::InconsistentRecord,
           "four outcome probabilities sum to " + std::to_string(total) + ", expected 1");
  }
  if (shot_count) {
    if (*shot_count < 1) fail(ErrorCode::InconsistentRecord, "shot count must be >= 1");
    rec.shot_count = shot_count;
  }
  rec.marginals_flagged =
      rec.p_mm + rec.p_mp > 0.5 + kProbTol || rec.p_mm + rec.p_pm > 0.5 + kProbTol;
  return rec;
}

Eigen::MatrixXd antisym_projector(int d) {
  if (d < 2 || d > 8)
    fail(ErrorCode::BadDimension,
         "antisymmetric projector supported for 2 <= d <= 8, got " + std::to_string(d));
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i * d + j, j * d + i) -= 1.0;
  return 0.5 * p;
}

TwoCopyExpectations twocopy_expectations(const BipartiteDensityMatrix& rho) {
  const int m = rho.m;
  const int n = rho.n;
  const Eigen::MatrixXd pa = antisym_projector(m);
  const Eigen::MatrixXd pb = antisym_projector(n);

  // p_ab = sum rho(a1 n + b1, a1' n + b1') rho(a2 n + b2, a2' n + b2')
  //            * Pa(a1' m + a2', a1 m + a2) * Pb(b1' n + b2', b1 n + b2),
  // the trace of (rho x rho) against the projectors after reordering the
  // copies A1 B1 A2 B2 -> (A1 A2)(B1 B2). The minus/plus split uses
  // P_+ = 1 - P_-, applied per factor inside the loop.
  std::complex<double> s_mm = 0.0, s_mp = 0.0, s_pm = 0.0, s_pp = 0.0;
  for (int a1 = 0; a1 < m; ++a1)
    for (int b1 = 0; b1 < n; ++b1)
      for (int a2 = 0; a2 < m; ++a2)
        for (int b2 = 0; b2 < n; ++b2)
          for (int a1p = 0; a1p < m; ++a1p)
            for (int b1p = 0; b1p < n; ++b1p)
              for (int a2p = 0; a2p < m; ++a2p)
                for (int b2p = 0; b2p < n; ++b2p) {
                  const std::complex<double> w =
                      rho.mat(a1 * n + b1, a1p * n + b1p) * rho.mat(a2 * n + b2, a2p * n + b2p);
                  const double am = pa(a1p * m + a2p, a1 * m + a2);
                  const double bm = pb(b1p * n + b2p, b1 * n + b2);
                  const double ap = (a1p == a1 && a2p == a2 ? 1.0 : 0.0) - am;
                  const double bp = (b1p == b1 && b2p == b2 ? 1.0 : 0.0) - bm;
                  s_mm += w * (am * bm);
                  s_mp += w * (am * bp);
                  s_pm += w * (ap * bm);
                  s_pp += w * (ap * bp);
                }

  TwoCopyExpectations out;
  out.record.p_mm = s_mm.real();
  out.record.p_mp = s_mp.real();
  out.record.p_pm = s_pm.real();
  out.record.p_pp = s_pp.real();
  out.record.marginals_flagged = false;
  out.v1 = 4.0 * (out.record.p_mm - out.record.p_pm);
  out.v2 = 4.0 * (out.record.p_mm - out.record.p_mp);
  out.k1 = 4.0 * (out.record.p_mm + out.record.p_mp);
  out.k2 = 4.0 * (out.record.p_mm + out.record.p_pm);
  return out;
}

PurityTriple purities_from_probs(const CorrelationMeasurementRecord& rec, int m, int n) {
  if (m != 2 || n != 2)
    fail(ErrorCode::BadDimension,
         "the three-probability inversion is defined for 2x2 only; general dimensions need the "
         "state-side path");
  const double tr_a2 = 1.0 - 2.0 * (rec.p_mm + rec.p_mp);
  const double tr_b2 = 1.0 - 2.0 * (rec.p_mm + rec.p_pm);
  const double tr2_via_a = tr_a2 + 2.0 * (rec.p_mm - rec.p_pm);
  const double tr2_via_b = tr_b2 + 2.0 * (rec.p_mm - rec.p_mp);
  if (std::abs(tr2_via_a - tr2_via_b) > 1e-6)
    fail(ErrorCode::InconsistentRecord,
         "full-purity reconstructions disagree: " + std::to_string(tr2_via_a) + " vs " +
             std::to_string(tr2_via_b));
  return make_purity_triple(0.5 * (tr2_via_a + tr2_via_b), tr_a2, tr_b2,
                            PurityTriple::Source::FromProbabilities, m, n);
}

LambdaSet lambdas_from_purities(const PurityTriple& p, int m, int n) {
  if (m < 2 || n < 2)
    fail(ErrorCode::BadDimension, "lambda set needs subsystem dimensions >= 2");
  const double r = p.tr_rho2;
  const double a = p.tr_rhoA2;
  const double b = p.tr_rhoB2;
  LambdaSet lam;
  lam.m = m;
  lam.n = n;
  lam.lambda1 = std::sqrt(std::max(0.0, 2.0 * (1.0 - a)));
  lam.lambda2 = std::sqrt(std::max(0.0, 2.0 * (1.0 - r)));
  lam.lambda3 = std::sqrt(std::max({0.0, 2.0 * (a - b), 2.0 * (a - r)}));
  lam.lambda4 = std::max(0.0, std::min(2.0 * (1.0 - b), 2.0 * (1.0 - r)));
  lam.lambda5 = std::sqrt(std::max({0.0, 2.0 * (r - a), 2.0 * (r - b)}));
  double l6 = std::min(2.0 * (1.0 - a), 2.0 * (1.0 - b));
  if (m == 2 && n == 2) {
    l6 = std::min(l6, 1.0 - a - b + r);
    lam.two_qubit_special_lambda6 = true;
  }
  lam.lambda6 = std::max(0.0, l6);
  lam.physical_inputs = a >= 1.0 / m - 1e-9 && b >= 1.0 / n - 1e-9 && r >= 1.0 / (m * n) - 1e-9;
  return lam;
}

LambdaSet lambdas_from_state(const BipartiteDensityMatrix& rho) {
  return lambdas_from_purities(purities(rho), rho.m, rho.n);
}

CorrelationMeasurementRecord simulate_shots(const BipartiteDensityMatrix& rho, long long shots,
                                            std::uint64_t seed) {
  if (shots < 1) fail(ErrorCode::OutOfDomain, "shot count must be >= 1");
  const TwoCopyExpectations ex = twocopy_expectations(rho);
  double probs[4] = {std::max(0.0, ex.record.p_mm), std::max(0.0, ex.record.p_mp),
                     std::max(0.0, ex.record.p_pm), std::max(0.0, *ex.record.p_pp)};
  const double total = probs[0] + probs[1] + probs[2] + probs[3];
  for (double& q : probs) q /= total;

  long long counts[4] = {0, 0, 0, 0};
  Rng rng(seed);
  for (long long s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    double acc = 0.0;
    int bin = 3;
    for (int k = 0; k < 3; ++k) {
      acc += probs[k];
      if (u < acc) {
        bin = k;
        break;
      }
    }
    ++counts[bin];
  }

  CorrelationMeasurementRecord rec;
  rec.p_mm = static_cast<double>(counts[0]) / shots;
  rec.p_mp = static_cast<double>(counts[1]) / shots;
  rec.p_pm = static_cast<double>(counts[2]) / shots;
  rec.p_pp = static_cast<double>(counts[3]) / shots;
  rec.shot_count = shots;
  rec.marginals_flagged =
      rec.p_mm + rec.p_mp > 0.5 + kProbTol || rec.p_mm + rec.p_pm > 0.5 + kProbTol;
  return rec;
}

}  // namespace qbound
