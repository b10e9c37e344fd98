// Acceptance gate: each criterion prints exactly one PASS/FAIL line and the
// process exits nonzero if any selected criterion fails. Tolerances are
// pinned here, next to the checks, so the gate cannot drift silently.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qbound/bounds.hpp"
#include "qbound/curves.hpp"
#include "qbound/density.hpp"
#include "qbound/figures.hpp"
#include "qbound/observables.hpp"
#include "qbound/oracles.hpp"
#include "qbound/rng.hpp"
#include "qbound/sampling.hpp"

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

void append(Outcome& o, const std::string& msg) {
  if (!o.detail.empty()) o.detail += "; ";
  o.detail += msg;
}

void check(Outcome& o, bool ok, const std::string& fail_msg) {
  if (!ok) {
    o.pass = false;
    append(o, fail_msg);
  }
}

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), pattern, args...);
  return std::string(buf);
}

qbound::LambdaSet reference_lambdas() {
  const auto rec = qbound::make_record(0.208, 0.050, 0.061);
  const auto p = qbound::purities_from_probs(rec, 2, 2);
  return qbound::lambdas_from_purities(p, 2, 2);
}

// 1. Measured-probability pipeline: the six functionals round to the
//    published three-decimal values. Runtime < 1 s.
Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const qbound::LambdaSet lam = reference_lambdas();
  const long expected[6] = {1016, 666, 210, 444, 795, 832};
  const double values[6] = {lam.lambda1, lam.lambda2, lam.lambda3,
                            lam.lambda4, lam.lambda5, lam.lambda6};
  for (int i = 0; i < 6; ++i) {
    const long rounded = std::lround(values[i] * 1000.0);
    check(o, rounded == expected[i],
          fmt("lambda%d rounds to %ld, expected %ld", i + 1, rounded, expected[i]));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(o, secs < 1.0, fmt("pipeline took %.3f s, limit 1 s", secs));
  if (o.pass) {
    append(o, "all six functionals match at 3 decimals");
  }
  return o;
}

// 2. Entanglement interval from the measured record: [0.715, 0.875] +/- 0.001.
Outcome criterion2() {
  Outcome o;
  const auto eof = qbound::eof_bounds(reference_lambdas());
  check(o, std::abs(eof.lower - 0.715) <= 1e-3,
        fmt("lower = %.6f, expected 0.715 +/- 0.001", eof.lower));
  check(o, std::abs(eof.upper - 0.875) <= 1e-3,
        fmt("upper = %.6f, expected 0.875 +/- 0.001", eof.upper));
  if (o.pass) append(o, fmt("interval [%.4f, %.4f]", eof.lower, eof.upper));
  return o;
}

// 3. Discord lower bound, compat mode: 0.470 +/- 0.001, and the three printed
//    components sit within 5e-4 of this implementation's own evaluation.
Outcome criterion3() {
  Outcome o;
  const auto dl = qbound::discord_lower(reference_lambdas(), qbound::EvalMode::PaperCompat);
  check(o, std::abs(dl.floored - 0.470) <= 1e-3,
        fmt("lower = %.6f, expected 0.470 +/- 0.001", dl.floored));

  // High-precision component values, frozen from a 50-digit evaluation of
  // the closed forms; the published prints are 4-decimal roundings of these.
  const double comp1 = qbound::r_lower(2, std::sqrt(1.032), qbound::EvalMode::PaperCompat);
  const double comp2 = qbound::r_upper(4, 0.666, qbound::EvalMode::Clamped);
  const double comp3 = qbound::co_r_lower(2, 0.210);
  check(o, std::abs(comp1 - 1.1043374963518294) < 1e-9,
        fmt("component 1 drifted: %.12f", comp1));
  check(o, std::abs(comp2 - 0.7221512783061109) < 1e-9,
        fmt("component 2 drifted: %.12f", comp2));
  check(o, std::abs(comp3 - 0.0883195100723479) < 1e-9,
        fmt("component 3 drifted: %.12f", comp3));
  check(o, std::abs(comp1 - 1.1043) <= 5e-4, fmt("component 1 = %.6f vs 1.1043", comp1));
  check(o, std::abs(comp2 - 0.7222) <= 5e-4, fmt("component 2 = %.6f vs 0.7222", comp2));
  check(o, std::abs(comp3 - 0.0883) <= 5e-4, fmt("component 3 = %.6f vs 0.0883", comp3));
  if (o.pass) {
    append(o, fmt("lower = %.4f, components (%.4f, %.4f, %.4f)", dl.floored, comp1,
                  comp2, comp3));
  }
  return o;
}

// 4. Discord upper bound, default (clamped) mode: equals an independent
//    re-derivation written out below to 1e-9, lands at ~1.000, and the
//    unphysical-input condition is carried in the interval flags.
Outcome criterion4() {
  Outcome o;
  const auto rec = qbound::make_record(0.208, 0.050, 0.061);
  const auto rep = qbound::full_report_from_probs(rec, 2, 2, qbound::EvalMode::Clamped);

  // Hand re-derivation from the three probabilities, no library calls.
  const double a2 = 1.0 - 2.0 * (0.208 + 0.050);          // Tr rho_A^2 = 0.484
  const double b2 = 1.0 - 2.0 * (0.208 + 0.061);          // Tr rho_B^2 = 0.462
  const double r2 = a2 + 2.0 * (0.208 - 0.061);           // Tr rho^2   = 0.778
  auto h2 = [](double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
  };
  // Term 1: maximal curve at d=2 of sqrt(2(1-a2)) = 1.016, clamped to the
  // domain edge 1, where the curve reaches log2(2) = 1.
  const double term1 = 1.0;
  // Term 2: minimal curve at d=4 of lambda2 = sqrt(2(1-r2)), first segment.
  const double lam2sq = 2.0 * (1.0 - r2);
  const double alpha = 0.5 * (1.0 + std::sqrt(1.0 - lam2sq));
  const double term2 = h2(alpha);
  // Term 3: concave envelope at d=2 of min{2(1-b2), 2(1-r2)} = 0.444; for
  // d=2 the envelope is the curve itself.
  const double tau = std::min(2.0 * (1.0 - b2), 2.0 * (1.0 - r2));
  const double gamma = 0.5 * (1.0 + std::sqrt(1.0 - tau));
  const double term3 = h2(gamma);
  const double hand = term1 - term2 + term3;

  check(o, std::abs(rep.discord.upper - hand) < 1e-9,
        fmt("library %.12f vs re-derivation %.12f", rep.discord.upper, hand));
  check(o, std::abs(rep.discord.upper - 1.000) <= 1e-3,
        fmt("upper = %.6f, expected ~1.000", rep.discord.upper));
  check(o, rep.discord.has_flag(qbound::BoundFlag::OutOfPhysicalDomain),
        "missing OutOfPhysicalDomain flag");
  if (o.pass) {
    append(o, fmt("upper = %.9f, re-derivation diff %.1e, unphysical inputs flagged",
                  rep.discord.upper, std::abs(rep.discord.upper - hand)));
  }
  return o;
}

// 5. Entanglement sandwich: 5000 seeded two-qubit states across the three
//    mixedness windows; the closed-form value sits inside the interval at
//    1e-7 slack. Runtime < 30 s.
Outcome criterion5() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto windows = qbound::default_windows();
  const int per_window[3] = {1667, 1667, 1666};
  int violations = 0;
  double worst = 0.0;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const auto states = qbound::sample_in_window(2, 2, windows[w].lo, windows[w].hi,
                                                 per_window[w], 42 + 1000003 * w);
    for (const auto& rho : states) {
      const auto eof = qbound::eof_bounds(qbound::lambdas_from_state(rho));
      const double exact = qbound::eof_2q(rho);
      const double breach =
          std::max(eof.lower - exact, exact - eof.upper);
      worst = std::max(worst, breach);
      if (breach > 1e-7) ++violations;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(o, violations == 0, fmt("%d violations, worst breach %.3e", violations, worst));
  check(o, secs < 30.0, fmt("took %.1f s, limit 30 s", secs));
  if (o.pass) append(o, fmt("5000 states, worst slack breach %.2e, %.1f s", worst, secs));
  return o;
}

// 6. Discord sandwich: 500 seeded two-qubit states; brute-force reference
//    (grid 128, refined) inside [floored lower, upper] at 1e-4 slack.
Outcome criterion6() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  int violations = 0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const auto rho = qbound::sample_state(2, 2, 1 + i % 4, 7 + static_cast<std::uint64_t>(i));
    const auto di = qbound::discord_bounds(qbound::lambdas_from_state(rho));
    const double brute = qbound::discord_bruteforce(rho, 128, true).value;
    const double breach = std::max(di.lower - brute, brute - di.upper);
    worst = std::max(worst, breach);
    if (breach > 1e-4) ++violations;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check(o, violations == 0, fmt("%d violations, worst breach %.3e", violations, worst));
  check(o, secs < 600.0, fmt("took %.1f s, limit 600 s", secs));
  if (o.pass) append(o, fmt("500 states, worst slack breach %.2e, %.1f s", worst, secs));
  return o;
}

// 7. Pure-state collapse: for 1000 pure states per n in {2,3,4} on 2xn, all
//    four bounds coincide with the marginal entropy within 1e-9.
Outcome criterion7() {
  Outcome o;
  double spread = 0.0;
  for (int n : {2, 3, 4}) {
    for (int i = 0; i < 1000; ++i) {
      const auto rho =
          qbound::sample_pure(2, n, 100000 * n + static_cast<std::uint64_t>(i)).projector();
      const double sa =
          qbound::von_neumann_entropy(qbound::partial_trace(rho, qbound::Subsystem::A));
      const auto lam = qbound::lambdas_from_state(rho);
      const auto eof = qbound::eof_bounds(lam);
      const auto di = qbound::discord_bounds(lam);
      for (double v : {eof.lower, eof.upper, di.lower, di.upper}) {
        spread = std::max(spread, std::abs(v - sa));
      }
    }
  }
  check(o, spread <= 1e-9, fmt("max |bound - S(rho_A)| = %.3e > 1e-9", spread));
  if (o.pass) append(o, fmt("3000 pure states, max spread %.2e", spread));
  return o;
}

// 8. Two-copy identities: 1000 states over {2x2, 2x3, 2x4, 3x3}; the four
//    observable/purity identities hold to 1e-10.
Outcome criterion8() {
  Outcome o;
  double worst = 0.0;
  const std::vector<std::pair<int, int>> dims = {{2, 2}, {2, 3}, {2, 4}, {3, 3}};
  for (std::size_t k = 0; k < dims.size(); ++k) {
    for (int i = 0; i < 250; ++i) {
      const auto rho = qbound::sample_state(dims[k].first, dims[k].second,
                                            dims[k].first * dims[k].second,
                                            11 + 1000 * k + static_cast<std::uint64_t>(i));
      const auto e = qbound::twocopy_expectations(rho);
      const auto p = qbound::purities(rho);
      worst = std::max({worst, std::abs(e.v1 - 2.0 * (p.tr_rho2 - p.tr_rhoA2)),
                        std::abs(e.v2 - 2.0 * (p.tr_rho2 - p.tr_rhoB2)),
                        std::abs(e.k1 - 2.0 * (1.0 - p.tr_rhoA2)),
                        std::abs(e.k2 - 2.0 * (1.0 - p.tr_rhoB2))});
    }
  }
  check(o, worst <= 1e-10, fmt("worst identity residual %.3e > 1e-10", worst));
  if (o.pass) append(o, fmt("1000 states, worst residual %.2e", worst));
  return o;
}

// 9. Spectrum boundaries: 50000 random spectra at d=4 stay between the
//    extremal curves at 1e-9 slack; envelope laws hold on 2000-point grids
//    for d in {2,...,6}.
Outcome criterion9() {
  Outcome o;
  qbound::Rng rng(13);
  int violations = 0;
  for (int i = 0; i < 50000; ++i) {
    const std::vector<double> mu = qbound::sample_simplex(4, rng);
    double s2 = 0.0;
    for (double v : mu) s2 += v * v;
    const double tau = std::clamp(2.0 * (1.0 - s2), 0.0, 1.5);
    const double h = qbound::shannon_bits(mu);
    const double lam = std::sqrt(tau);
    if (h < qbound::f_lower(4, tau) - 1e-9 || h > qbound::f_upper(4, tau) + 1e-9 ||
        h < qbound::r_lower(4, lam) - 1e-9 || h > qbound::r_upper(4, lam) + 1e-9) {
      ++violations;
    }
  }
  check(o, violations == 0, fmt("%d spectra escaped the curves", violations));

  for (int d = 2; d <= 6; ++d) {
    const double lam_top = std::sqrt(2.0 * (d - 1) / d);
    const double tau_top = 2.0 * (d - 1) / d;
    const int grid = 2000;
    std::vector<double> co(grid + 1), ca(grid + 1);
    bool co_below = true, ca_above = true, co_convex = true, ca_concave = true;
    for (int i = 0; i <= grid; ++i) {
      const double lam = lam_top * i / grid;
      const double tau = tau_top * i / grid;
      co[i] = qbound::co_r_lower(d, lam);
      ca[i] = qbound::ca_f_upper(d, tau);
      if (co[i] > qbound::r_lower(d, lam) + 1e-12) co_below = false;
      if (ca[i] < qbound::f_upper(d, tau) - 1e-12) ca_above = false;
    }
    for (int i = 0; i + 2 <= grid; ++i) {
      if (co[i] + co[i + 2] - 2.0 * co[i + 1] < -1e-9) co_convex = false;
      if (ca[i] + ca[i + 2] - 2.0 * ca[i + 1] > 1e-9) ca_concave = false;
    }
    check(o, co_below, fmt("co hull exceeds the curve at d=%d", d));
    check(o, ca_above, fmt("ca envelope dips below the curve at d=%d", d));
    check(o, co_convex, fmt("co hull fails midpoint convexity at d=%d", d));
    check(o, ca_concave, fmt("ca envelope fails midpoint concavity at d=%d", d));
  }
  if (o.pass) append(o, "50000 spectra inside the curves, envelope laws hold for d=2..6");
  return o;
}

// 10. Tangency data within 1e-7 for d in {3,...,8}, and the d=3 inflection
//     root equals the pinned literal 1.40845 within 1e-5.
Outcome criterion10() {
  Outcome o;
  for (int d = 3; d <= 8; ++d) {
    const auto tg = qbound::ca_tangent(d);
    const double tau_top = 2.0 * (d - 1) / d;
    const double line = tg.slope * (tg.tau_star - tau_top) + std::log2(double(d));
    const double curve = qbound::f_upper(d, tg.tau_star);
    check(o, std::abs(line - curve) <= 1e-7,
          fmt("d=%d tangency value residual %.3e", d, std::abs(line - curve)));
    const double h = 1e-6;
    const double fd =
        (qbound::f_upper(d, tg.tau_star + h) - qbound::f_upper(d, tg.tau_star - h)) /
        (2.0 * h);
    check(o, std::abs(fd - tg.slope) <= 1e-7,
          fmt("d=%d tangency slope residual %.3e", d, std::abs(fd - tg.slope)));
  }

  const double y0 = qbound::find_inflection(3).y0;
  check(o, std::abs(y0 - 1.40845) <= 1e-5,
        fmt("find_inflection(3).y0 = %.10f, pinned literal 1.40845 +/- 1e-5, "
            "difference %.2e",
            y0, std::abs(y0 - 1.40845)));
  if (o.pass) append(o, fmt("tangency ok for d=3..8, y0 = %.10f", y0));
  return o;
}

// 11. Purification identity: 200 random rank-2 two-qubit states; the residual
//     against the brute-force discord stays below 2e-3.
Outcome criterion11() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto rho = qbound::sample_state(2, 2, 2, 17 + static_cast<std::uint64_t>(i));
    const double eof_bc = qbound::eof_2q(qbound::purify(rho).rho_bc);
    worst = std::max(worst, std::abs(qbound::check_kw(rho, eof_bc, 128)));
  }
  check(o, worst <= 2e-3, fmt("worst residual %.3e > 2e-3", worst));
  if (o.pass) append(o, fmt("200 rank-2 states, worst residual %.2e", worst));
  return o;
}

// 12. Interval figures at desk scale: 1000 states per window for both
//     quantities; CSV written, upper >= lower on every row, and the mean
//     interval width strictly increases across the three windows.
Outcome criterion12() {
  Outcome o;
  const auto windows = qbound::default_windows();
  const struct {
    qbound::Quantity q;
    const char* path;
    const char* name;
  } figs[2] = {{qbound::Quantity::EntanglementOfFormation, "acceptance_fig1.csv", "eof"},
               {qbound::Quantity::DiscordA, "acceptance_fig2.csv", "discord"}};

  for (const auto& fig : figs) {
    const auto rows = qbound::figure_intervals(fig.q, 2, 4, windows, 1000, 7, fig.path);
    check(o, rows.size() == 3000,
          fmt("%zu rows, expected 3000", rows.size()));
    std::vector<double> mean(windows.size(), 0.0);
    std::vector<int> count(windows.size(), 0);
    bool ordered = true;
    for (const auto& row : rows) {
      if (row[3] < row[2]) ordered = false;
      for (std::size_t w = 0; w < windows.size(); ++w) {
        if (std::abs(row[0] - windows[w].lo) < 1e-15) {
          mean[w] += row[3] - row[2];
          ++count[w];
          break;
        }
      }
    }
    check(o, ordered, std::string(fig.name) + ": a row has upper < lower");
    for (std::size_t w = 0; w < windows.size(); ++w) {
      check(o, count[w] == 1000, std::string(fig.name) + ": window row count drifted");
      if (count[w] > 0) mean[w] /= count[w];
    }
    check(o, mean[0] < mean[1] && mean[1] < mean[2],
          std::string(fig.name) +
              fmt(": widths (%.4f, %.4f, %.4f) not increasing", mean[0], mean[1], mean[2]));
    std::FILE* f = std::fopen(fig.path, "rb");
    check(o, f != nullptr, std::string(fig.name) + ": CSV not written");
    if (f) std::fclose(f);
  }
  if (o.pass) append(o, "both figures: 3000 rows each, widths increase with mixing");
  return o;
}

using CriterionFn = Outcome (*)();

const CriterionFn kCriteria[12] = {criterion1, criterion2, criterion3,  criterion4,
                                   criterion5, criterion6, criterion7,  criterion8,
                                   criterion9, criterion10, criterion11, criterion12};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;  // 0 = run all
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
      if (only < 1 || only > 12) {
        std::fprintf(stderr, "criterion index must be 1..12\n");
        return 2;
      }
    } else {
      std::fprintf(stderr, "usage: acceptance [--criterion N]\n");
      return 2;
    }
  }

  bool all_pass = true;
  for (int k = 1; k <= 12; ++k) {
    if (only != 0 && k != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = kCriteria[k - 1]();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s (%s; %.2f s)\n", k, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
