// gmix: command-line front end for the Gaussian-mixing entanglement toolkit.
//
// Subcommands:
//   check          criterion + oracle for one explicit pair (JSON)
//   sweep          scenario sweep over transmission or thermal content (CSV)
//   critical-t     critical transmission of a scenario
//   verify-oracle  randomized criterion-vs-oracle equivalence run
//   asymptote      large-squeezing limit of the critical transmission
//
// Exit codes: 0 success; 2 contract error (bad flags or non-physical
// inputs); 3 verify-oracle found a disagreement.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gmix/scenario.hpp"
#include "gmix/validation.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_contract = 2;
constexpr int exit_disagreement = 3;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct PairArgs {
  double r_c = 0.0;
  double theta_c = 0.0;
  double n_c = 0.0;
  double r_d = 0.0;
  double theta_d = std::numbers::pi / 2.0;
  double n_d = 0.0;
  double tau = 0.5;
  bool literal_offdiag = false;
};

struct SweepArgs {
  std::string scenario;
  std::string abscissa = "t";
  double r = 0.0;
  double tau = 0.5;
  double n_th = 0.0;
  double ratio = 0.9;
  int grid = 201;
  double t_min = 0.005;
  double t_max = 1.0;
  double nth_min = 0.0;
  double nth_max = 0.5;
  bool literal_offdiag = false;
  std::string out_path;
};

struct CriticalArgs {
  std::string scenario;
  double r = 0.0;
  double tau = 0.5;
  double n_th = 0.0;
  double ratio = 0.9;
};

struct VerifyArgs {
  long long trials = 100000;
  std::uint64_t seed = 1;
  double band = 1e-9;
};

gmix::ScenarioSpec build_spec(const std::string& name, double r, double tau,
                              double n_th, double ratio) {
  const auto kind = gmix::scenario_from_string(name);
  if (!kind) {
    throw std::invalid_argument("unknown scenario '" + name + "'");
  }
  gmix::ScenarioSpec spec;
  spec.kind = *kind;
  spec.r = r;
  spec.tau = tau;
  spec.n_th = n_th;
  spec.ratio = ratio;
  gmix::validate(spec);
  return spec;
}

int run_check(const PairArgs& args) {
  const gmix::SingleModeCM sigma_c =
      gmix::make_cm({args.r_c, args.theta_c, args.n_c});
  const gmix::SingleModeCM sigma_d =
      gmix::make_cm({args.r_d, args.theta_d, args.n_d});
  const auto form = args.literal_offdiag ? gmix::OffDiagForm::Literal
                                         : gmix::OffDiagForm::Symplectic;
  const gmix::CriterionReport report =
      gmix::check_pair(sigma_c, sigma_d, args.tau, form);

  nlohmann::ordered_json j;
  j["f_cd"] = report.verdict.f_cd;
  j["f_th"] = report.verdict.f_th;
  j["entangled_predicted"] = report.verdict.entangled_predicted;
  j["margin"] = report.verdict.margin;
  j["nu_minus"] = report.oracle.nu_minus;
  j["log_negativity"] = report.oracle.log_negativity;
  j["entangled"] = report.oracle.entangled;
  j["agreement"] = report.agreement;
  std::cout << j.dump(2) << '\n';
  return exit_ok;
}

int run_sweep(const SweepArgs& args) {
  const auto form = args.literal_offdiag ? gmix::OffDiagForm::Literal
                                         : gmix::OffDiagForm::Symplectic;

  std::vector<gmix::SweepRow> rows;
  if (args.abscissa == "nth") {
    rows = gmix::thermal_content_sweep(
        args.r, {args.grid, args.nth_min, args.nth_max}, args.tau, form);
  } else {
    if (args.scenario.empty()) {
      throw std::invalid_argument("sweep over t requires --scenario");
    }
    const gmix::ScenarioSpec spec =
        build_spec(args.scenario, args.r, args.tau, args.n_th, args.ratio);
    rows = gmix::sweep(spec, {args.grid, args.t_min, args.t_max}, form);
  }

  if (args.out_path.empty()) {
    gmix::write_csv(std::cout, rows);
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
      throw std::invalid_argument("cannot open output file '" +
                                  args.out_path + "'");
    }
    gmix::write_csv(out, rows);
  }
  return exit_ok;
}

int run_critical(const CriticalArgs& args) {
  const gmix::ScenarioSpec spec =
      build_spec(args.scenario, args.r, args.tau, args.n_th, args.ratio);
  const auto t_c = gmix::critical_transmission(spec);
  if (t_c) {
    std::cout << g17(*t_c) << '\n';
  } else {
    std::cout << "none\n";
  }
  return exit_ok;
}

int run_verify(const VerifyArgs& args) {
  const gmix::EquivalenceReport report =
      gmix::verify_criterion_vs_ppt(args.trials, args.seed, args.band);
  std::cout << "trials=" << report.trials
            << " disagreements=" << report.disagreements
            << " boundary_cases=" << report.boundary_cases
            << " worst_mismatch_margin=" << g17(report.worst_mismatch_margin)
            << " min_abs_margin=" << g17(report.min_abs_margin) << '\n';
  return report.disagreements > 0 ? exit_disagreement : exit_ok;
}

int run_asymptote(double n_th) {
  std::cout << g17(gmix::critical_transmission_asymptote(n_th)) << '\n';
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pre-assesses whether mixing two single-mode Gaussian states at a "
      "beam splitter produces entanglement (vacuum covariance = I/2)."};
  app.require_subcommand(1);

  PairArgs pair;
  auto* check = app.add_subcommand(
      "check", "Evaluate the criterion for one pair; prints JSON");
  check->add_option("--rc", pair.r_c, "squeezing of mode c")->required();
  check->add_option("--theta-c", pair.theta_c,
                    "rotation of mode c (default 0)");
  check->add_option("--nc", pair.n_c, "thermal occupation of mode c");
  check->add_option("--rd", pair.r_d, "squeezing of mode d")->required();
  check->add_option("--theta-d", pair.theta_d,
                    "rotation of mode d (default pi/2)");
  check->add_option("--nd", pair.n_d, "thermal occupation of mode d");
  check->add_option("--tau", pair.tau, "beam-splitter transmissivity")
      ->capture_default_str();
  check->add_flag("--literal-offdiag", pair.literal_offdiag,
                  "use tau*(1-tau) for the cross block (negative control)");

  SweepArgs sw;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Scenario sweep; prints or writes CSV");
  sweep_cmd->add_option("--scenario", sw.scenario,
                        "symmetric|symmetric-thermal|asymmetric-ratio|"
                        "fully-asymmetric|fully-asymmetric-thermal");
  sweep_cmd
      ->add_option("--abscissa", sw.abscissa,
                   "sweep variable: t (transmission) or nth (thermal content)")
      ->check(CLI::IsMember({"t", "nth"}))
      ->capture_default_str();
  sweep_cmd->add_option("--r", sw.r, "initial squeezing")->required();
  sweep_cmd->add_option("--tau", sw.tau, "beam-splitter transmissivity")
      ->capture_default_str();
  sweep_cmd->add_option("--nth", sw.n_th, "bath occupation on mode d")
      ->capture_default_str();
  sweep_cmd->add_option("--ratio", sw.ratio, "asymmetric-ratio factor")
      ->capture_default_str();
  sweep_cmd->add_option("--grid", sw.grid, "number of grid points")
      ->capture_default_str();
  sweep_cmd->add_option("--tmin", sw.t_min, "lowest transmission")
      ->capture_default_str();
  sweep_cmd->add_option("--tmax", sw.t_max, "highest transmission")
      ->capture_default_str();
  sweep_cmd->add_option("--nth-min", sw.nth_min, "lowest thermal content")
      ->capture_default_str();
  sweep_cmd->add_option("--nth-max", sw.nth_max, "highest thermal content")
      ->capture_default_str();
  sweep_cmd->add_flag("--literal-offdiag", sw.literal_offdiag,
                      "use tau*(1-tau) for the cross block (negative control)");
  sweep_cmd->add_option("--out", sw.out_path, "write CSV to this file");

  CriticalArgs crit;
  auto* critical = app.add_subcommand(
      "critical-t", "Critical transmission of a scenario; prints T or none");
  critical->add_option("--scenario", crit.scenario, "scenario name")
      ->required();
  critical->add_option("--r", crit.r, "initial squeezing")->required();
  critical->add_option("--tau", crit.tau, "beam-splitter transmissivity")
      ->capture_default_str();
  critical->add_option("--nth", crit.n_th, "bath occupation on mode d")
      ->capture_default_str();
  critical->add_option("--ratio", crit.ratio, "asymmetric-ratio factor")
      ->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand(
      "verify-oracle",
      "Randomized criterion-vs-oracle equivalence run; exit 3 on "
      "disagreement");
  verify_cmd->add_option("--trials", verify.trials, "number of random pairs")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "RNG seed")
      ->capture_default_str();
  verify_cmd
      ->add_option("--band", verify.band,
                   "boundary band on |f_cd - f_th| excluded from the tally")
      ->capture_default_str();

  double asym_nth = 0.0;
  auto* asym = app.add_subcommand(
      "asymptote", "Large-squeezing critical-transmission limit");
  asym->add_option("--nth", asym_nth, "bath occupation")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_contract;
  }

  try {
    if (check->parsed()) return run_check(pair);
    if (sweep_cmd->parsed()) return run_sweep(sw);
    if (critical->parsed()) return run_critical(crit);
    if (verify_cmd->parsed()) return run_verify(verify);
    if (asym->parsed()) return run_asymptote(asym_nth);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_contract;
  }
  return exit_ok;
}
