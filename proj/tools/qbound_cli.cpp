#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbound/bounds.hpp"
#include "qbound/curves.hpp"
#include "qbound/density.hpp"
#include "qbound/errors.hpp"
#include "qbound/figures.hpp"
#include "qbound/io.hpp"
#include "qbound/observables.hpp"
#include "qbound/oracles.hpp"
#include "qbound/sampling.hpp"

namespace {

using nlohmann::json;
using namespace qbound;

EvalMode parse_mode(const std::string& s) {
  if (s == "strict") return EvalMode::Strict;
  if (s == "clamped") return EvalMode::Clamped;
  if (s == "paper-compat") return EvalMode::PaperCompat;
  fail(ErrorCode::UsageError, "unknown mode '" + s + "'");
}

const char* mode_name(EvalMode m) {
  switch (m) {
    case EvalMode::Strict: return "strict";
    case EvalMode::Clamped: return "clamped";
    case EvalMode::PaperCompat: return "paper-compat";
  }
  return "?";
}

const char* flag_name(BoundFlag f) {
  switch (f) {
    case BoundFlag::OutOfPhysicalDomain: return "OutOfPhysicalDomain";
    case BoundFlag::TwoQubitLambda6Used: return "TwoQubitLambda6Used";
    case BoundFlag::UpperExceedsLogDim: return "UpperExceedsLogDim";
  }
  return "?";
}

std::pair<int, int> parse_dims(const std::string& s) {
  const auto pos = s.find_first_of("xX");
  if (pos == std::string::npos || pos == 0 || pos + 1 >= s.size())
    fail(ErrorCode::UsageError, "--dims expects MxN, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 1))};
  } catch (const std::exception&) {
    fail(ErrorCode::UsageError, "--dims expects integers, got '" + s + "'");
  }
}

json interval_json(const BoundInterval& b) {
  json flags = json::array();
  for (BoundFlag f : b.flags) flags.push_back(flag_name(f));
  return json{{"lower", b.lower},
              {"upper", b.upper},
              {"raw_lower", b.raw_lower},
              {"flags", std::move(flags)}};
}

json report_json(const FullReport& rep, EvalMode mode, int m, int n) {
  json doc;
  doc["mode"] = mode_name(mode);
  doc["dims"] = {{"m", m}, {"n", n}};
  doc["purities"] = {{"tr_rho2", rep.purities.tr_rho2},
                     {"tr_rhoA2", rep.purities.tr_rhoA2},
                     {"tr_rhoB2", rep.purities.tr_rhoB2},
                     {"physical", rep.purities.physical}};
  doc["lambdas"] = {{"lambda1", rep.lambdas.lambda1},
                    {"lambda2", rep.lambdas.lambda2},
                    {"lambda3", rep.lambdas.lambda3},
                    {"lambda4", rep.lambdas.lambda4},
                    {"lambda5", rep.lambdas.lambda5},
                    {"lambda6", rep.lambdas.lambda6},
                    {"two_qubit_special_lambda6", rep.lambdas.two_qubit_special_lambda6},
                    {"physical_inputs", rep.lambdas.physical_inputs}};
  doc["eof"] = interval_json(rep.eof);
  doc["discord"] = interval_json(rep.discord);
  return doc;
}

struct BoundsArgs {
  std::string state;
  std::vector<double> purities;
  std::vector<double> probs;
  std::string dims;
  std::string mode = "clamped";
};

void run_bounds(const BoundsArgs& a) {
  const int given = (!a.state.empty() ? 1 : 0) + (a.purities.empty() ? 0 : 1) +
                    (a.probs.empty() ? 0 : 1);
  if (given != 1)
    fail(ErrorCode::UsageError, "give exactly one of --state, --purities, --probs");
  const EvalMode mode = parse_mode(a.mode);
  FullReport rep;
  int m = 0, n = 0;
  if (!a.state.empty()) {
    const BipartiteDensityMatrix rho = read_state_json(a.state);
    m = rho.m;
    n = rho.n;
    rep = full_report(rho, mode);
  } else {
    if (a.dims.empty())
      fail(ErrorCode::UsageError, "--dims is required with --purities/--probs");
    std::tie(m, n) = parse_dims(a.dims);
    if (!a.purities.empty()) {
      const PurityTriple p = make_purity_triple(a.purities[0], a.purities[1], a.purities[2],
                                                PurityTriple::Source::FromProbabilities, m, n);
      rep = full_report_from_purities(p, m, n, mode);
    } else {
      rep = full_report_from_probs(make_record(a.probs[0], a.probs[1], a.probs[2]), m, n, mode);
    }
  }
  std::cout << report_json(rep, mode, m, n).dump(2) << "\n";
}

struct ExperimentArgs {
  double pmm = -1.0, pmp = -1.0, ppm = -1.0, ppp = -1.0;
  std::string state;
  long long shots = 0;
  std::uint64_t seed = 1;
  std::string dims = "2x2";
};

void print_interval(const char* name, const BoundInterval& b) {
  std::printf("  %-7s : [%.3f, %.3f]   raw lower = %.3f\n", name, b.lower, b.upper, b.raw_lower);
}

void run_experiment(const ExperimentArgs& a) {
  CorrelationMeasurementRecord rec;
  int m = 0, n = 0;
  if (!a.state.empty()) {
    if (a.shots < 1)
      fail(ErrorCode::UsageError, "--state needs --shots to simulate a measurement record");
    const BipartiteDensityMatrix rho = read_state_json(a.state);
    m = rho.m;
    n = rho.n;
    rec = simulate_shots(rho, a.shots, a.seed);
  } else {
    if (a.pmm < 0.0 || a.pmp < 0.0 || a.ppm < 0.0)
      fail(ErrorCode::UsageError, "give --pmm --pmp --ppm (or --state with --shots)");
    std::tie(m, n) = parse_dims(a.dims);
    rec = make_record(a.pmm, a.pmp, a.ppm,
                      a.ppp >= 0.0 ? std::optional<double>(a.ppp) : std::nullopt);
  }

  std::printf("two-copy measurement record\n");
  std::printf("  p_mm = %.6f\n", rec.p_mm);
  std::printf("  p_mp = %.6f\n", rec.p_mp);
  std::printf("  p_pm = %.6f\n", rec.p_pm);
  if (rec.p_pp)
    std::printf("  p_pp = %.6f\n", *rec.p_pp);
  else
    std::printf("  p_pp = %.6f (inferred)\n", 1.0 - rec.p_mm - rec.p_mp - rec.p_pm);
  if (rec.shot_count) std::printf("  shots = %lld\n", *rec.shot_count);

  const PurityTriple p = purities_from_probs(rec, m, n);
  std::printf("purities\n");
  std::printf("  tr_rho2  = %.6f\n", p.tr_rho2);
  std::printf("  tr_rhoA2 = %.6f\n", p.tr_rhoA2);
  std::printf("  tr_rhoB2 = %.6f\n", p.tr_rhoB2);
  std::printf("  physical = %s\n", p.physical ? "yes" : "no");

  const LambdaSet lam = lambdas_from_purities(p, m, n);
  std::printf("lambda functionals (m = %d, n = %d)\n", m, n);
  std::printf("  lambda1 = %.3f\n", lam.lambda1);
  std::printf("  lambda2 = %.3f\n", lam.lambda2);
  std::printf("  lambda3 = %.3f\n", lam.lambda3);
  std::printf("  lambda4 = %.3f\n", lam.lambda4);
  std::printf("  lambda5 = %.3f\n", lam.lambda5);
  std::printf("  lambda6 = %.3f%s\n", lam.lambda6,
              lam.two_qubit_special_lambda6 ? "  (two-qubit variant)" : "");

  for (const EvalMode mode : {EvalMode::Clamped, EvalMode::PaperCompat}) {
    const BoundInterval eof_b = eof_bounds(lam, mode);
    const BoundInterval dis_b = discord_bounds(lam, mode);
    std::printf("bounds, %s mode\n", mode_name(mode));
    print_interval("eof", eof_b);
    print_interval("discord", dis_b);
    std::string flags;
    for (const BoundInterval* b : {&eof_b, &dis_b})
      for (BoundFlag f : b->flags) {
        const std::string name = flag_name(f);
        if (flags.find(name) == std::string::npos) flags += (flags.empty() ? "" : ", ") + name;
      }
    std::printf("  flags   : %s\n", flags.empty() ? "none" : flags.c_str());
  }
}

struct OracleArgs {
  std::string kind;
  std::string state;
  int grid = 128;
  bool refine = false;
};

void run_oracle(const OracleArgs& a) {
  const BipartiteDensityMatrix rho = read_state_json(a.state);
  if (a.kind == "eof") {
    std::printf("eof = %.12f\n", eof_2q(rho));
  } else {
    const DiscordResult d = discord_bruteforce(rho, a.grid, a.refine);
    std::printf("discord = %.12f\n", d.value);
    std::printf("argmin theta = %.6f, phi = %.6f\n", d.argmin.theta, d.argmin.phi);
    std::printf("grid = %d, refined = %s\n", d.grid, d.refined ? "yes" : "no");
  }
}

struct SampleArgs {
  std::string dims;
  std::string window;
  int count = 1;
  int rank = 0;
  std::uint64_t seed = 0;
  std::string out = ".";
};

void run_sample(const SampleArgs& a) {
  const auto [m, n] = parse_dims(a.dims);
  std::vector<BipartiteDensityMatrix> states;
  if (!a.window.empty()) {
    const auto pos = a.window.find(':');
    if (pos == std::string::npos)
      fail(ErrorCode::UsageError, "--window expects lo:hi, got '" + a.window + "'");
    double lo = 0.0, hi = 0.0;
    try {
      lo = std::stod(a.window.substr(0, pos));
      hi = std::stod(a.window.substr(pos + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::UsageError, "--window expects numbers, got '" + a.window + "'");
    }
    states = sample_in_window(m, n, lo, hi, a.count, a.seed);
  } else {
    const int rank = a.rank > 0 ? a.rank : m * n;
    for (int i = 0; i < a.count; ++i)
      states.push_back(sample_state(m, n, rank, a.seed + static_cast<std::uint64_t>(i)));
  }
  std::filesystem::create_directories(a.out);
  for (std::size_t i = 0; i < states.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof(name), "state_%04zu.json", i);
    const std::string path = a.out + "/" + name;
    write_state_json(states[i], path);
    std::printf("%s\n", path.c_str());
  }
}

struct FigureArgs {
  std::string id;
  std::string out;
  int count = 0;
  std::uint64_t seed = 7;
  int d = 0;
  std::string dims = "2x4";
};

void run_figure(const FigureArgs& a) {
  if (a.id == "fig1" || a.id == "fig2") {
    const auto [m, n] = parse_dims(a.dims);
    const int count = a.count > 0 ? a.count : 1000;
    const Quantity q =
        a.id == "fig1" ? Quantity::EntanglementOfFormation : Quantity::DiscordA;
    const auto rows = figure_intervals(q, m, n, default_windows(), count, a.seed, a.out);
    std::printf("%zu rows -> %s\n", rows.size(), a.out.c_str());
  } else if (a.id == "fig3" || a.id == "fig4") {
    const int d = a.d > 0 ? a.d : 4;
    const int count = a.count > 0 ? a.count : 50000;
    const auto rows = figure_scatter(a.id == "fig4", d, count, a.seed, a.out);
    std::printf("%zu rows -> %s\n", rows.size(), a.out.c_str());
  } else {
    const int d = a.d > 0 ? a.d : 3;
    const int count = a.count > 0 ? a.count : 200;
    const auto rows = figure_delta(d, count, a.out);
    std::printf("%zu rows -> %s (root = %.6f)\n", rows.size(), a.out.c_str(), rows[0][2]);
  }
}

struct CurvesArgs {
  int d = 0;
  std::string curve;
  int samples = 200;
  std::string out;
};

void run_curves(const CurvesArgs& a) {
  if (a.samples < 2) fail(ErrorCode::UsageError, "--samples must be >= 2");
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  if (a.curve == "coRL") {
    header = {"lambda", "r_lower", "co_r_lower", "r_upper"};
    const double top = std::sqrt(2.0 * (a.d - 1) / a.d);
    for (int i = 0; i < a.samples; ++i) {
      const double x = top * i / (a.samples - 1);
      rows.push_back({x, r_lower(a.d, x, EvalMode::Clamped), co_r_lower(a.d, x),
                      r_upper(a.d, x, EvalMode::Clamped)});
    }
  } else {
    header = {"tau", "f_lower", "f_upper", "ca_f_upper"};
    const double top = 2.0 * (a.d - 1) / a.d;
    for (int i = 0; i < a.samples; ++i) {
      const double x = top * i / (a.samples - 1);
      rows.push_back({x, f_lower(a.d, x, EvalMode::Clamped), f_upper(a.d, x, EvalMode::Clamped),
                      ca_f_upper(a.d, x)});
    }
  }
  if (a.out.empty()) {
    for (std::size_t i = 0; i < header.size(); ++i)
      std::printf("%s%s", i ? "," : "", header[i].c_str());
    std::printf("\n");
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        std::printf("%s%s", i ? "," : "", format_cell(row[i]).c_str());
      std::printf("\n");
    }
  } else {
    write_csv(a.out, header, rows);
    std::printf("%zu rows -> %s\n", rows.size(), a.out.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Observable lower and upper bounds on entanglement of formation and quantum "
               "discord from two-copy measurement data"};
  app.require_subcommand(1);
  const auto mode_check = CLI::IsMember({"strict", "clamped", "paper-compat"});

  BoundsArgs bounds_args;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Bound report as JSON");
  bounds_cmd->add_option("--state", bounds_args.state, "Density-matrix JSON file");
  bounds_cmd->add_option("--purities", bounds_args.purities,
                         "tr_rho2,tr_rhoA2,tr_rhoB2")
      ->delimiter(',')
      ->expected(3);
  bounds_cmd->add_option("--probs", bounds_args.probs, "p_mm,p_mp,p_pm")
      ->delimiter(',')
      ->expected(3);
  bounds_cmd->add_option("--dims", bounds_args.dims, "MxN (with --purities/--probs)");
  bounds_cmd->add_option("--mode", bounds_args.mode, "strict|clamped|paper-compat")
      ->check(mode_check);
  bounds_cmd->callback([&] { run_bounds(bounds_args); });

  ExperimentArgs exp_args;
  CLI::App* exp_cmd = app.add_subcommand(
      "experiment", "Replicate the two-copy measurement pipeline with a formatted report");
  exp_cmd->add_option("--pmm", exp_args.pmm, "p_mm outcome probability");
  exp_cmd->add_option("--pmp", exp_args.pmp, "p_mp outcome probability");
  exp_cmd->add_option("--ppm", exp_args.ppm, "p_pm outcome probability");
  exp_cmd->add_option("--ppp", exp_args.ppp, "p_pp outcome probability (optional)");
  exp_cmd->add_option("--state", exp_args.state, "Simulate the record from this state");
  exp_cmd->add_option("--shots", exp_args.shots, "Shot count for --state");
  exp_cmd->add_option("--seed", exp_args.seed, "Seed for --shots");
  exp_cmd->add_option("--dims", exp_args.dims, "MxN for probability input (default 2x2)");
  exp_cmd->callback([&] { run_experiment(exp_args); });

  OracleArgs oracle_args;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "Ground-truth values (two-qubit EOF, brute-force discord)");
  oracle_cmd->add_option("kind", oracle_args.kind, "eof|discord")
      ->required()
      ->check(CLI::IsMember({"eof", "discord"}));
  oracle_cmd->add_option("--state", oracle_args.state, "Density-matrix JSON file")->required();
  oracle_cmd->add_option("--grid", oracle_args.grid, "Angle lattice resolution (>= 32)");
  oracle_cmd->add_flag("--refine", oracle_args.refine, "Golden-section descent after the grid");
  oracle_cmd->callback([&] { run_oracle(oracle_args); });

  SampleArgs sample_args;
  CLI::App* sample_cmd = app.add_subcommand("sample", "Write random states as JSON files");
  sample_cmd->add_option("--dims", sample_args.dims, "MxN")->required();
  sample_cmd->add_option("--window", sample_args.window, "lo:hi on sqrt(1 - purity)");
  sample_cmd->add_option("--count", sample_args.count, "Number of states");
  sample_cmd->add_option("--rank", sample_args.rank, "Factor rank (default mn)");
  sample_cmd->add_option("--seed", sample_args.seed, "Base seed (item i uses seed + i)");
  sample_cmd->add_option("--out", sample_args.out, "Output directory");
  sample_cmd->callback([&] { run_sample(sample_args); });

  FigureArgs figure_args;
  CLI::App* figure_cmd = app.add_subcommand("figure", "Regenerate figure data as CSV");
  figure_cmd->add_option("--id", figure_args.id, "fig1|fig2|fig3|fig4|delta")
      ->required()
      ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4", "delta"}));
  figure_cmd->add_option("--out", figure_args.out, "Output CSV path")->required();
  figure_cmd->add_option("--count", figure_args.count,
                         "States per window / spectra / samples (0 = default)");
  figure_cmd->add_option("--seed", figure_args.seed, "Seed");
  figure_cmd->add_option("--d", figure_args.d, "Spectrum dimension (fig3/fig4/delta)");
  figure_cmd->add_option("--dims", figure_args.dims, "MxN for fig1/fig2 (default 2x4)");
  figure_cmd->callback([&] { run_figure(figure_args); });

  CurvesArgs curves_args;
  CLI::App* curves_cmd = app.add_subcommand("curves", "Emit curve/envelope samples as CSV");
  curves_cmd->add_option("--d", curves_args.d, "Spectrum dimension")
      ->required()
      ->check(CLI::Range(2, 64));
  curves_cmd->add_option("--curve", curves_args.curve, "coRL|caFU")
      ->required()
      ->check(CLI::IsMember({"coRL", "caFU"}));
  curves_cmd->add_option("--samples", curves_args.samples, "Grid point count");
  curves_cmd->add_option("--out", curves_args.out, "CSV path (stdout when omitted)");
  curves_cmd->callback([&] { run_curves(curves_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::UsageError) return 2;
    return e.is_numerical() ? 4 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
