#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qbound/bounds.hpp"

namespace qbound {

struct PurityWindow {
  double lo = 0.0;
  double hi = 0.0;
};

// Weak / intermediate / strong mixing on sqrt(1 - Tr rho^2).
std::vector<PurityWindow> default_windows();

// One row per sampled state: (window_lo, window_hi, lower, upper) for the
// chosen quantity, Clamped mode. Writes CSV when out_path is nonempty and
// always returns the rows.
std::vector<std::array<double, 4>> figure_intervals(Quantity q, int m, int n,
                                                    const std::vector<PurityWindow>& windows,
                                                    int count_per_window, std::uint64_t seed,
                                                    const std::string& out_path);

// Random-spectrum scatter against the boundary curves. Rows are
// (tau, entropy, f_lower, f_upper), or with lambda_axis
// (sqrt(tau), entropy, r_lower, r_upper).
std::vector<std::array<double, 4>> figure_scatter(bool lambda_axis, int d, int count,
                                                  std::uint64_t seed,
                                                  const std::string& out_path);

// (y, delta(y), y0) samples over [1/(d-1), 2.5 y0]; the root column repeats
// the computed inflection location.
std::vector<std::array<double, 3>> figure_delta(int d, int samples, const std::string& out_path);

}  // namespace qbound
