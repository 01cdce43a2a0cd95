#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "lee/grid.hpp"
#include "lee/velocity_set.hpp"

namespace lee {

// One value per macroscopic variable (used for both error norms and observed
// orders).  Only the first `dimension` velocity components are meaningful.
struct PerVariable {
  int dimension = 0;
  double rho = 0;
  std::array<double, 3> u = {0, 0, 0};
  double theta = 0;
  double max_all() const;
};

// Discrete space-time L2 norm: sqrt(sum over all stored time levels and sites
// of |field|^2 * dt^(D+1)).  The series must share one grid layout; dt is the
// acoustic step (= grid spacing).
PerVariable l2_space_time(const std::vector<MacroField>& series, double dt);
// Single-time-level norm: sqrt(sum over sites of |field|^2 * dt^D).
PerVariable l2_space(const MacroField& field, double dt);

// Incremental form of l2_space_time for long runs.
struct SpaceTimeNorm {
  int dimension = 0;
  double dt = 0;
  long long levels = 0;
  double sum_rho = 0;
  std::array<double, 3> sum_u = {0, 0, 0};
  double sum_theta = 0;

  SpaceTimeNorm(int dim, double dt_) : dimension(dim), dt(dt_) {}
  void add(const MacroField& field);
  PerVariable value() const;
};

// Step counts follow the acoustic scaling: the step count is end_time/eps
// rounded to the nearest integer (half away from zero), and the gap
// requested - achieved is what the rounding costs (negative when the run
// overshoots).
struct StepPlan {
  long long n_steps = 0;
  double achieved = 0;
  double gap = 0;  // requested - achieved
};
StepPlan plan_steps(double end_time, double eps);

// Initial condition that can be sampled on any grid of its dimension.
struct InitialCondition {
  std::string name;
  int dimension = 0;
  double origin = 0;
  double length = 1;  // canonical cubic domain
  std::function<MacroField(const Grid&)> make;
};
InitialCondition ic_gauss(int dimension);

// order of accuracy observed between two rows of a refinement study
double observed_order(double err_coarse, double err_fine, int n_coarse, int n_fine);

struct ConvergenceRow {
  int n = 0;
  double eps = 0;
  long long steps = 0;
  double achieved_t = 0;
  PerVariable error;
  PerVariable order;  // NaN on the first row
};

struct ConvergenceTable {
  std::string set_name;
  std::string ic_name;
  std::string mode;  // "analytic" or "self"
  double tau = 0;
  double end_time = 0;
  std::vector<ConvergenceRow> rows;
};

// Refinement study against the exact 1D solution: for every resolution the
// solver runs to the nearest achievable end time and the space-time L2 error
// against the characteristic transport of the same sampled initial data is
// recorded.  1D sets only.
ConvergenceTable convergence_vs_analytic(const VelocitySet& set, const InitialCondition& ic,
                                         const std::vector<int>& resolutions, double end_time, double tau = 0.5,
                                         int threads = 1);

// Self-convergence against one fine run: every coarse resolution must divide
// fine_n (throws NonNestedResolutions otherwise).  Errors are single-time
// L2 norms of coarse minus fine at coinciding sites, each row compared at its
// own nearest achievable end time (which the fine grid hits exactly).
ConvergenceTable convergence_self(const VelocitySet& set, const InitialCondition& ic,
                                  const std::vector<int>& resolutions, int fine_n, double end_time,
                                  double tau = 0.5, int threads = 1);

}  // namespace lee
