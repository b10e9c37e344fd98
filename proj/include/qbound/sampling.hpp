#pragma once

#include <cstdint>
#include <vector>

#include "qbound/density.hpp"
#include "qbound/rng.hpp"

namespace qbound {

// rho = G G^dag / Tr(G G^dag) with G an mn x rank complex Gaussian factor
// (induced / Hilbert-Schmidt-style ensemble). Deterministic per seed.
BipartiteDensityMatrix sample_state(int m, int n, int rank, std::uint64_t seed);

// Haar-random pure state on C^m x C^n.
PureState sample_pure(int m, int n, std::uint64_t seed);

// `count` states with sqrt(1 - Tr rho^2) inside [lo, hi]. Item i is a pure
// function of seed + i. Each state is a two-point mixture whose mixing
// weight solves a quadratic for a purity target drawn inside the window:
// (1-w)|phi><phi| + w rho0 when the window is purer than rho0, otherwise
// (1-v) rho0 + v I/(mn). Windows with hi <= 1e-6 take the pure-state path.
std::vector<BipartiteDensityMatrix> sample_in_window(int m, int n, double lo, double hi,
                                                     int count, std::uint64_t seed);

// Uniform draw from the probability simplex (normalized exponentials).
std::vector<double> sample_simplex(int d, Rng& rng);

}  // namespace qbound
