#include "qbound/figures.hpp"

#include <cmath>

#include "qbound/curves.hpp"
#include "qbound/errors.hpp"
#include "qbound/io.hpp"
#include "qbound/sampling.hpp"

namespace qbound {

namespace {

// Separates the per-window seed streams; sample_in_window advances by one
// seed per item, so windows stay disjoint for any count below the stride.
constexpr std::uint64_t kWindowSeedStride = 1000003;

template <std::size_t N>
std::vector<std::vector<double>> to_csv_rows(const std::vector<std::array<double, N>>& rows) {
  std::vector<std::vector<double>> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

}  // namespace

std::vector<PurityWindow> default_windows() {
  return {{0.10, 0.11}, {0.20, 0.21}, {0.30, 0.31}};
}

std::vector<std::array<double, 4>> figure_intervals(Quantity q, int m, int n,
                                                    const std::vector<PurityWindow>& windows,
                                                    int count_per_window, std::uint64_t seed,
                                                    const std::string& out_path) {
  if (windows.empty()) fail(ErrorCode::OutOfDomain, "need at least one purity window");
  if (count_per_window < 1) fail(ErrorCode::OutOfDomain, "count per window must be >= 1");
  std::vector<std::array<double, 4>> rows;
  rows.reserve(windows.size() * count_per_window);
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto states = sample_in_window(m, n, windows[w].lo, windows[w].hi, count_per_window,
                                         seed + kWindowSeedStride * w);
    for (const auto& rho : states) {
      const LambdaSet lam = lambdas_from_state(rho);
      const BoundInterval b = q == Quantity::EntanglementOfFormation
                                  ? eof_bounds(lam, EvalMode::Clamped)
                                  : discord_bounds(lam, EvalMode::Clamped);
      rows.push_back({windows[w].lo, windows[w].hi, b.lower, b.upper});
    }
  }
  if (!out_path.empty())
    write_csv(out_path, {"window_lo", "window_hi", "lower", "upper"}, to_csv_rows(rows));
  return rows;
}

std::vector<std::array<double, 4>> figure_scatter(bool lambda_axis, int d, int count,
                                                  std::uint64_t seed,
                                                  const std::string& out_path) {
  if (d < 2) fail(ErrorCode::BadDimension, "spectrum dimension must be >= 2");
  if (count < 1) fail(ErrorCode::OutOfDomain, "count must be >= 1");
  const double tau_top = 2.0 * (d - 1) / d;
  Rng rng(seed);
  std::vector<std::array<double, 4>> rows;
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    const std::vector<double> mu = sample_simplex(d, rng);
    double sum_sq = 0.0;
    for (double x : mu) sum_sq += x * x;
    const double tau = std::clamp(2.0 * (1.0 - sum_sq), 0.0, tau_top);
    const double sv = shannon_bits(mu);
    if (lambda_axis) {
      const double lambda = std::sqrt(tau);
      rows.push_back({lambda, sv, r_lower(d, lambda, EvalMode::Clamped),
                      r_upper(d, lambda, EvalMode::Clamped)});
    } else {
      rows.push_back(
          {tau, sv, f_lower(d, tau, EvalMode::Clamped), f_upper(d, tau, EvalMode::Clamped)});
    }
  }
  if (!out_path.empty()) {
    const std::vector<std::string> header =
        lambda_axis ? std::vector<std::string>{"lambda", "entropy", "r_lower", "r_upper"}
                    : std::vector<std::string>{"tau", "entropy", "f_lower", "f_upper"};
    write_csv(out_path, header, to_csv_rows(rows));
  }
  return rows;
}

std::vector<std::array<double, 3>> figure_delta(int d, int samples, const std::string& out_path) {
  if (samples < 2) fail(ErrorCode::OutOfDomain, "need at least 2 samples");
  const InflectionPoint ip = find_inflection(d);
  const double y_lo = 1.0 / (d - 1);
  const double y_hi = 2.5 * ip.y0;
  std::vector<std::array<double, 3>> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    const double y = y_lo + (y_hi - y_lo) * i / (samples - 1);
    rows.push_back({y, delta_curve(d, y), ip.y0});
  }
  if (!out_path.empty())
    write_csv(out_path, {"y", "delta", "root"}, to_csv_rows(rows));
  return rows;
}

}  // namespace qbound
