// Command line front end: run simulations, scan stability, produce
// convergence tables and verify the lattice moment identities.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "lee/errors.hpp"
#include "lee/harness.hpp"
#include "lee/io.hpp"
#include "lee/reference.hpp"
#include "lee/solver.hpp"
#include "lee/stability.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct LatticeArgs {
  std::string name = "d1q3";
  double rho0 = 1.0;
  double theta0 = 0.0;
  double alpha = 0.0;
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& args) {
  cmd->add_option("--lattice", args.name,
                  "built-in set (d1q3, d2q5, d2q5-diatomic, d3q7, d3q9, d3q13, d3q19, d3q7-diatomic) "
                  "or d3q-family for a custom cubic-family set")
      ->required();
  cmd->add_option("--rho0", args.rho0, "background density for --lattice d3q-family");
  cmd->add_option("--theta0", args.theta0, "background temperature for --lattice d3q-family");
  cmd->add_option("--alpha", args.alpha, "corner weight parameter for --lattice d3q-family");
}

lee::VelocitySet resolve_lattice(const LatticeArgs& args) {
  if (args.name == "d3q-family") {
    if (!(args.theta0 > 0)) throw lee::UnknownLattice("d3q-family needs --theta0 > 0");
    return lee::build_d3q_family(args.rho0, args.theta0, args.alpha);
  }
  return lee::make_set(args.name);
}

int resolve_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("LEE_LBM_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return 1;
}

void warn_tau(double tau) {
  if (tau != 0.5)
    std::cerr << "warning: tau=" << lee::format_g17(tau)
              << " forfeits second-order consistency (tau=0.5 cancels the leading flux error)\n";
}

// gauss1d | gauss2d | gauss3d | file:<snapshot.csv>
struct IcArgs {
  std::string spec = "gauss1d";
};

lee::MacroField make_ic_field(const IcArgs& ic, const lee::VelocitySet& set, int n) {
  if (ic.spec.rfind("file:", 0) == 0) {
    const std::string path = ic.spec.substr(5);
    std::ifstream in(path);
    if (!in) throw lee::IoError("cannot open initial condition file '" + path + "'");
    lee::Snapshot snap = lee::read_snapshot_csv(in);
    if (snap.field.grid.dimension != set.dimension)
      throw lee::ShapeMismatch("initial condition file dimension does not match the lattice");
    if (n > 0 && snap.field.grid.extent[0] != n)
      throw lee::ShapeMismatch("initial condition file resolution does not match -N");
    return snap.field;
  }
  int dim = 0;
  if (ic.spec == "gauss1d") dim = 1;
  else if (ic.spec == "gauss2d") dim = 2;
  else if (ic.spec == "gauss3d") dim = 3;
  else throw lee::UnknownLattice("unknown initial condition '" + ic.spec + "'");
  if (dim != set.dimension) throw lee::ShapeMismatch("initial condition dimension does not match the lattice");
  if (n < 1) throw lee::ShapeMismatch("need -N to sample a Gaussian initial condition");
  const lee::InitialCondition g = lee::ic_gauss(dim);
  return g.make(lee::Grid::uniform(dim, n, g.length, g.origin));
}

lee::InitialCondition make_ic_descriptor(const IcArgs& ic, const lee::VelocitySet& set) {
  int dim = 0;
  if (ic.spec == "gauss1d") dim = 1;
  else if (ic.spec == "gauss2d") dim = 2;
  else if (ic.spec == "gauss3d") dim = 3;
  else throw lee::UnknownLattice("convergence needs a resamplable initial condition (gauss1d/gauss2d/gauss3d)");
  if (dim != set.dimension) throw lee::ShapeMismatch("initial condition dimension does not match the lattice");
  return lee::ic_gauss(dim);
}

void write_snapshot_file(const std::string& out_dir, long long step, const lee::MacroField& field, double time,
                         const std::string& lattice) {
  std::filesystem::create_directories(out_dir);
  char name[64];
  std::snprintf(name, sizeof name, "snapshot_%06lld.csv", step);
  const std::string path = out_dir + "/" + name;
  std::ofstream os(path);
  if (!os) throw lee::IoError("cannot write '" + path + "'");
  lee::write_snapshot_csv(os, field, time, lattice);
}

int cmd_run(const LatticeArgs& lattice_args, const IcArgs& ic_args, int n, double end_time, double tau,
            int threads_flag, const std::string& out_dir, long long snapshot_every, const std::string& output) {
  if (output != "csv") throw lee::UnknownLattice("unsupported --output format '" + output + "'");
  const lee::VelocitySet set = resolve_lattice(lattice_args);
  const int threads = resolve_threads(threads_flag);
  warn_tau(tau);

  const lee::MacroField ic = make_ic_field(ic_args, set, n);
  const lee::Grid grid = ic.grid;
  lee::PopulationField f = lee::initialize_equilibrium(grid, set, ic, threads);
  const lee::StepPlan plan = lee::plan_steps(end_time, grid.eps);

  const lee::ConservedSums before = lee::conserved_sums(f);
  const bool snapshots = !out_dir.empty();
  if (snapshots) write_snapshot_file(out_dir, 0, lee::moments_field(f, threads), 0.0, set.name);

  lee::run(
      f, plan.n_steps, tau,
      [&](long long s, double time, const lee::PopulationField& cur) {
        if (!snapshots) return;
        const bool due = (snapshot_every > 0 && s % snapshot_every == 0) || s == plan.n_steps;
        if (due) write_snapshot_file(out_dir, s, lee::moments_field(cur, threads), time, set.name);
      },
      threads);
  const lee::ConservedSums after = lee::conserved_sums(f);

  std::cout << "lattice " << set.name << ", " << grid.sites() << " sites, " << plan.n_steps
            << " steps, achieved t=" << lee::format_g17(plan.achieved)
            << " (gap " << lee::format_g17(plan.gap) << ")\n";
  std::cout << "mass " << lee::format_g17(before.mass) << " -> " << lee::format_g17(after.mass)
            << ", energy " << lee::format_g17(before.energy) << " -> " << lee::format_g17(after.energy) << "\n";
  if (snapshots) std::cout << "snapshots written to " << out_dir << "\n";
  return kExitPass;
}

int cmd_stability(const LatticeArgs& lattice_args, int resolution, double tau, double kappa_cap,
                  const std::string& out_path, bool force_structure) {
  const lee::VelocitySet set = resolve_lattice(lattice_args);
  lee::ScanOptions opt;
  if (kappa_cap > 0) opt.kappa_cap = kappa_cap;
  const lee::StabilityScan scan = lee::scan_stability(set, resolution, tau, opt);

  std::optional<lee::StructureReport> structure;
  if (scan.verdict != "stable" || force_structure) {
    try {
      structure = lee::check_stability_structure(set);
    } catch (const lee::NoStructureFound& e) {
      std::cerr << "structure check: " << e.what() << "\n";
    }
  }

  const nlohmann::json j = lee::to_json(scan, structure ? &*structure : nullptr);
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw lee::IoError("cannot write '" + out_path + "'");
    os << j.dump(2) << "\n";
  }

  std::cout << "set " << scan.set_name << ": verdict " << scan.verdict
            << " (max unitary defect " << lee::format_g17(scan.max_unitary_defect)
            << ", max rho " << lee::format_g17(scan.max_rho) << ", max kappa "
            << lee::format_g17(scan.max_kappa) << ")\n";
  if (structure)
    std::cout << "structure: " << (structure->pass ? "pass" : "fail")
              << " (projection defect " << lee::format_g17(structure->projection_defect)
              << ", symmetry defect " << lee::format_g17(structure->symmetry_defect) << ")\n";

  const bool ok = scan.verdict == "stable" || (structure && structure->pass);
  return ok ? kExitPass : kExitFail;
}

int cmd_convergence(const LatticeArgs& lattice_args, const IcArgs& ic_args, const std::string& resolutions_csv,
                    int fine_n, double end_time, double tau, int threads_flag, const std::string& out_path,
                    double min_order, double max_error) {
  const lee::VelocitySet set = resolve_lattice(lattice_args);
  const int threads = resolve_threads(threads_flag);
  warn_tau(tau);

  std::vector<int> resolutions;
  for (const auto& piece : [&] {
         std::vector<std::string> parts;
         std::string cur;
         for (char ch : resolutions_csv) {
           if (ch == ',') {
             parts.push_back(cur);
             cur.clear();
           } else {
             cur += ch;
           }
         }
         parts.push_back(cur);
         return parts;
       }()) {
    try {
      resolutions.push_back(std::stoi(piece));
    } catch (const std::logic_error&) {
      throw lee::NonNestedResolutions("bad resolution '" + piece + "'");
    }
  }

  const lee::InitialCondition ic = make_ic_descriptor(ic_args, set);
  const lee::ConvergenceTable table =
      fine_n > 0 ? lee::convergence_self(set, ic, resolutions, fine_n, end_time, tau, threads)
                 : lee::convergence_vs_analytic(set, ic, resolutions, end_time, tau, threads);

  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw lee::IoError("cannot write '" + out_path + "'");
    lee::write_convergence_csv(os, table);
  }
  lee::write_convergence_csv(std::cout, table);

  bool ok = true;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (max_error > 0 && row.error.max_all() > max_error) ok = false;
    if (min_order > 0 && r + 1 == table.rows.size() && !(row.order.rho >= min_order)) ok = false;
  }
  return ok ? kExitPass : kExitFail;
}

int cmd_moments_check(const LatticeArgs& lattice_args, int trials, std::uint64_t seed,
                      const std::string& out_path) {
  const lee::VelocitySet set = resolve_lattice(lattice_args);

  nlohmann::json j;
  bool pass = true;
  if (set.monoatomic()) {
    const lee::CompatibilityReport rep = lee::check_moment_compatibility(set);
    pass = rep.pass;
    j = lee::to_json(rep);
    j["kind"] = "moment-compatibility";
    std::cout << "set " << set.name << ": " << (pass ? "pass" : "FAIL") << " (max defect "
              << lee::format_g17(rep.max_defect) << ", " << rep.checks.size() << " conditions)\n";
  } else {
    const lee::ConstraintReport rep = lee::verify_polyatomic_constraints(set, trials, seed);
    pass = rep.pass;
    j = lee::to_json(rep);
    j["kind"] = "polyatomic-constraints";
    std::cout << "set " << set.name << ": " << (pass ? "pass" : "FAIL") << " (max defect "
              << lee::format_g17(rep.max_defect) << ", " << rep.trials << " random states)\n";
  }

  lee::MacroState probe;
  probe.rho = 0.3;
  probe.u = {0.2, set.dimension >= 2 ? -0.1 : 0.0, set.dimension >= 3 ? 0.05 : 0.0};
  probe.theta = -0.2;
  const lee::FluxReport flux = lee::verify_flux_moments(set, probe);
  pass = pass && flux.second_pass;
  j["flux"] = lee::to_json(flux);

  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw lee::IoError("cannot write '" + out_path + "'");
    os << j.dump(2) << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice Boltzmann solver for the linearized Euler equations"};
  app.require_subcommand(1);

  // run
  auto* run_cmd = app.add_subcommand("run", "advance an initial condition and write snapshots");
  LatticeArgs run_lattice;
  IcArgs run_ic;
  int run_n = 0;
  double run_T = 1.0, run_tau = 0.5;
  int run_threads = 0;
  std::string run_out;
  long long run_snap_every = 0;
  std::string run_output = "csv";
  add_lattice_options(run_cmd, run_lattice);
  run_cmd->add_option("--ic", run_ic.spec, "gauss1d | gauss2d | gauss3d | file:<snapshot.csv>");
  run_cmd->add_option("-N", run_n, "sites per axis");
  run_cmd->add_option("--end-time", run_T, "requested end time (step count is rounded)");
  run_cmd->add_option("--tau", run_tau, "relaxation time (default 0.5)");
  run_cmd->add_option("--threads", run_threads, "worker count (default: LEE_LBM_THREADS or 1)");
  run_cmd->add_option("--out", run_out, "directory for snapshot CSV files");
  run_cmd->add_option("--snapshot-every", run_snap_every, "write a snapshot every k steps (default: final only)");
  run_cmd->add_option("--output", run_output, "output format (csv)");

  // stability
  auto* st_cmd = app.add_subcommand("stability", "scan the amplification symbol over the wave-number cell");
  LatticeArgs st_lattice;
  int st_res = 33;
  double st_tau = 0.5, st_kappa_cap = 0.0;
  std::string st_out;
  bool st_structure = false;
  add_lattice_options(st_cmd, st_lattice);
  st_cmd->add_option("--resolution", st_res, "sample points per wave-number axis");
  st_cmd->add_option("--tau", st_tau, "relaxation time (default 0.5)");
  st_cmd->add_option("--kappa-cap", st_kappa_cap, "eigenvector conditioning bound (default 1e6)");
  st_cmd->add_option("--out", st_out, "write the JSON report here");
  st_cmd->add_flag("--structure", st_structure, "always run the algebraic structure check");

  // convergence
  auto* cv_cmd = app.add_subcommand("convergence", "refinement study (vs analytic in 1D, or self with --fine)");
  LatticeArgs cv_lattice;
  IcArgs cv_ic;
  std::string cv_res = "50,100,200";
  int cv_fine = 0;
  double cv_T = 1.0, cv_tau = 0.5;
  int cv_threads = 0;
  std::string cv_out;
  double cv_min_order = 0.0, cv_max_error = 0.0;
  add_lattice_options(cv_cmd, cv_lattice);
  cv_cmd->add_option("--ic", cv_ic.spec, "gauss1d | gauss2d | gauss3d");
  cv_cmd->add_option("--resolutions", cv_res, "comma-separated site counts, increasing");
  cv_cmd->add_option("--fine", cv_fine, "fine resolution for self-convergence (omit for 1D analytic mode)");
  cv_cmd->add_option("--end-time", cv_T, "requested end time");
  cv_cmd->add_option("--tau", cv_tau, "relaxation time (default 0.5)");
  cv_cmd->add_option("--threads", cv_threads, "worker count (default: LEE_LBM_THREADS or 1)");
  cv_cmd->add_option("--out", cv_out, "write the CSV table here");
  cv_cmd->add_option("--min-order", cv_min_order, "fail unless the last observed density order reaches this");
  cv_cmd->add_option("--max-error", cv_max_error, "fail if any error norm exceeds this");

  // moments-check
  auto* mc_cmd = app.add_subcommand("moments-check", "verify the lattice moment identities");
  LatticeArgs mc_lattice;
  int mc_trials = 1000;
  std::uint64_t mc_seed = 12345;
  std::string mc_out;
  add_lattice_options(mc_cmd, mc_lattice);
  mc_cmd->add_option("--trials", mc_trials, "random states for polyatomic sets");
  mc_cmd->add_option("--seed", mc_seed, "random seed");
  mc_cmd->add_option("--out", mc_out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (run_cmd->parsed())
      return cmd_run(run_lattice, run_ic, run_n, run_T, run_tau, run_threads, run_out, run_snap_every, run_output);
    if (st_cmd->parsed()) return cmd_stability(st_lattice, st_res, st_tau, st_kappa_cap, st_out, st_structure);
    if (cv_cmd->parsed())
      return cmd_convergence(cv_lattice, cv_ic, cv_res, cv_fine, cv_T, cv_tau, cv_threads, cv_out, cv_min_order,
                             cv_max_error);
    if (mc_cmd->parsed()) return cmd_moments_check(mc_lattice, mc_trials, mc_seed, mc_out);
  } catch (const lee::UnknownLattice& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lee::ShapeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lee::DomainMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lee::NonNestedResolutions& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lee::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
