#include "lee/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "lee/errors.hpp"
#include "lee/reference.hpp"
#include "lee/solver.hpp"

namespace lee {

double PerVariable::max_all() const {
  double m = std::max(rho, theta);
  for (int a = 0; a < dimension; ++a) m = std::max(m, u[static_cast<std::size_t>(a)]);
  return m;
}

void SpaceTimeNorm::add(const MacroField& field) {
  if (field.grid.dimension != dimension) throw ShapeMismatch("SpaceTimeNorm: dimension mismatch");
  const auto D = static_cast<std::size_t>(dimension);
  const std::size_t sites = field.grid.sites();
  for (std::size_t s = 0; s < sites; ++s) {
    sum_rho += field.rho[s] * field.rho[s];
    for (std::size_t a = 0; a < D; ++a) sum_u[a] += field.u[s * D + a] * field.u[s * D + a];
    sum_theta += field.theta[s] * field.theta[s];
  }
  ++levels;
}

PerVariable SpaceTimeNorm::value() const {
  const double scale = std::pow(dt, dimension + 1);
  PerVariable v;
  v.dimension = dimension;
  v.rho = std::sqrt(sum_rho * scale);
  for (int a = 0; a < dimension; ++a)
    v.u[static_cast<std::size_t>(a)] = std::sqrt(sum_u[static_cast<std::size_t>(a)] * scale);
  v.theta = std::sqrt(sum_theta * scale);
  return v;
}

PerVariable l2_space_time(const std::vector<MacroField>& series, double dt) {
  if (series.empty()) throw EmptySeries("l2_space_time: empty series");
  SpaceTimeNorm acc(series.front().grid.dimension, dt);
  for (const auto& f : series) {
    if (!f.grid.same_layout(series.front().grid)) throw ShapeMismatch("l2_space_time: mixed grid layouts");
    acc.add(f);
  }
  return acc.value();
}

PerVariable l2_space(const MacroField& field, double dt) {
  SpaceTimeNorm acc(field.grid.dimension, dt);
  acc.add(field);
  const double scale = std::pow(dt, field.grid.dimension);
  PerVariable v;
  v.dimension = field.grid.dimension;
  v.rho = std::sqrt(acc.sum_rho * scale);
  for (int a = 0; a < v.dimension; ++a)
    v.u[static_cast<std::size_t>(a)] = std::sqrt(acc.sum_u[static_cast<std::size_t>(a)] * scale);
  v.theta = std::sqrt(acc.sum_theta * scale);
  return v;
}

StepPlan plan_steps(double end_time, double eps) {
  if (!(eps > 0)) throw Error("plan_steps: eps must be positive");
  StepPlan p;
  p.n_steps = std::llround(end_time / eps);
  p.achieved = static_cast<double>(p.n_steps) * eps;
  p.gap = end_time - p.achieved;
  return p;
}

InitialCondition ic_gauss(int dimension) {
  if (dimension < 1 || dimension > 3) throw ShapeMismatch("ic_gauss: dimension must be 1, 2 or 3");
  InitialCondition ic;
  ic.name = "gauss" + std::to_string(dimension) + "d";
  ic.dimension = dimension;
  ic.origin = 0.0;
  ic.length = dimension == 1 ? 1.0 : 2.0;
  ic.make = [dimension](const Grid& g) { return gauss_pulse(dimension, g); };
  return ic;
}

double observed_order(double err_coarse, double err_fine, int n_coarse, int n_fine) {
  if (!(err_coarse > 0) || !(err_fine > 0) || n_fine <= n_coarse)
    return std::numeric_limits<double>::quiet_NaN();
  return std::log(err_coarse / err_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

namespace {

void require_increasing(const std::vector<int>& res) {
  if (res.empty()) throw NonNestedResolutions("convergence: empty resolution list");
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i] < 1 || (i > 0 && res[i] <= res[i - 1]))
      throw NonNestedResolutions("convergence: resolutions must be strictly increasing");
  }
}

PerVariable difference_order(const ConvergenceRow& prev, const ConvergenceRow& cur) {
  PerVariable o;
  o.dimension = cur.error.dimension;
  o.rho = observed_order(prev.error.rho, cur.error.rho, prev.n, cur.n);
  for (int a = 0; a < o.dimension; ++a)
    o.u[static_cast<std::size_t>(a)] = observed_order(prev.error.u[static_cast<std::size_t>(a)],
                                                      cur.error.u[static_cast<std::size_t>(a)], prev.n, cur.n);
  o.theta = observed_order(prev.error.theta, cur.error.theta, prev.n, cur.n);
  return o;
}

MacroField subtract(const MacroField& a, const MacroField& b) {
  MacroField d = a;
  for (std::size_t i = 0; i < d.rho.size(); ++i) d.rho[i] -= b.rho[i];
  for (std::size_t i = 0; i < d.u.size(); ++i) d.u[i] -= b.u[i];
  for (std::size_t i = 0; i < d.theta.size(); ++i) d.theta[i] -= b.theta[i];
  return d;
}

}  // namespace

ConvergenceTable convergence_vs_analytic(const VelocitySet& set, const InitialCondition& ic,
                                         const std::vector<int>& resolutions, double end_time, double tau,
                                         int threads) {
  if (set.dimension != 1 || ic.dimension != 1)
    throw ShapeMismatch("convergence_vs_analytic: only 1D sets have the exact transport reference");
  require_increasing(resolutions);

  ConvergenceTable table;
  table.set_name = set.name;
  table.ic_name = ic.name;
  table.mode = "analytic";
  table.tau = tau;
  table.end_time = end_time;

  for (int n : resolutions) {
    const Grid grid = Grid::uniform(1, n, ic.length, ic.origin);
    const MacroField ic_field = ic.make(grid);
    PopulationField f = initialize_equilibrium(grid, set, ic_field, threads);
    const StepPlan plan = plan_steps(end_time, grid.eps);

    SpaceTimeNorm acc(1, grid.eps);
    acc.add(subtract(moments_field(f, threads), analytic_solution_1d(ic_field, 0.0, set.rho0, set.theta0, set.gamma)));
    run(
        f, plan.n_steps, tau,
        [&](long long, double time, const PopulationField& cur) {
          acc.add(subtract(moments_field(cur, threads),
                           analytic_solution_1d(ic_field, time, set.rho0, set.theta0, set.gamma)));
        },
        threads);

    ConvergenceRow row;
    row.n = n;
    row.eps = grid.eps;
    row.steps = plan.n_steps;
    row.achieved_t = plan.achieved;
    row.error = acc.value();
    row.order.dimension = 1;
    row.order.rho = row.order.theta = row.order.u[0] = std::numeric_limits<double>::quiet_NaN();
    if (!table.rows.empty()) row.order = difference_order(table.rows.back(), row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

ConvergenceTable convergence_self(const VelocitySet& set, const InitialCondition& ic,
                                  const std::vector<int>& resolutions, int fine_n, double end_time, double tau,
                                  int threads) {
  if (set.dimension != ic.dimension) throw ShapeMismatch("convergence_self: set and ic dimension differ");
  require_increasing(resolutions);
  for (int n : resolutions) {
    if (n >= fine_n || fine_n % n != 0)
      throw NonNestedResolutions("convergence_self: every coarse resolution must divide the fine one");
  }

  const int D = set.dimension;
  ConvergenceTable table;
  table.set_name = set.name;
  table.ic_name = ic.name;
  table.mode = "self";
  table.tau = tau;
  table.end_time = end_time;

  // Each coarse row is compared at its own achieved end time; the matching
  // fine step index is exact because eps_coarse is a multiple of eps_fine.
  const Grid fine_grid = Grid::uniform(D, fine_n, ic.length, ic.origin);
  std::map<long long, MacroField> fine_at;  // fine step index -> macro field
  std::vector<long long> fine_steps_needed;
  std::vector<StepPlan> plans;
  for (int n : resolutions) {
    const double eps_c = ic.length / n;
    const StepPlan plan = plan_steps(end_time, eps_c);
    plans.push_back(plan);
    fine_steps_needed.push_back(plan.n_steps * (fine_n / n));
  }

  {
    PopulationField fine = initialize_equilibrium(fine_grid, set, ic.make(fine_grid), threads);
    const long long last = *std::max_element(fine_steps_needed.begin(), fine_steps_needed.end());
    auto want = [&](long long s) {
      return std::find(fine_steps_needed.begin(), fine_steps_needed.end(), s) != fine_steps_needed.end();
    };
    if (want(0)) fine_at.emplace(0, moments_field(fine, threads));
    run(
        fine, last, tau,
        [&](long long s, double, const PopulationField& cur) {
          if (want(s) && !fine_at.count(s)) fine_at.emplace(s, moments_field(cur, threads));
        },
        threads);
  }

  for (std::size_t r = 0; r < resolutions.size(); ++r) {
    const int n = resolutions[r];
    const int m = fine_n / n;
    const Grid grid = Grid::uniform(D, n, ic.length, ic.origin);
    PopulationField f = initialize_equilibrium(grid, set, ic.make(grid), threads);
    run(f, plans[r].n_steps, tau, {}, threads);
    const MacroField coarse = moments_field(f, threads);
    const MacroField& fine = fine_at.at(fine_steps_needed[r]);

    // restrict the fine field to the coarse sites and subtract
    MacroField err = MacroField::zeros(grid);
    const auto Dz = static_cast<std::size_t>(D);
    std::size_t s = 0;
    for (int z = 0; z < grid.extent[2]; ++z)
      for (int y = 0; y < grid.extent[1]; ++y)
        for (int x = 0; x < grid.extent[0]; ++x, ++s) {
          const std::size_t fs = fine_grid.index(x * m, D >= 2 ? y * m : 0, D >= 3 ? z * m : 0);
          err.rho[s] = coarse.rho[s] - fine.rho[fs];
          for (std::size_t a = 0; a < Dz; ++a) err.u[s * Dz + a] = coarse.u[s * Dz + a] - fine.u[fs * Dz + a];
          err.theta[s] = coarse.theta[s] - fine.theta[fs];
        }

    ConvergenceRow row;
    row.n = n;
    row.eps = grid.eps;
    row.steps = plans[r].n_steps;
    row.achieved_t = plans[r].achieved;
    row.error = l2_space(err, grid.eps);
    row.order.dimension = D;
    row.order.rho = row.order.theta = std::numeric_limits<double>::quiet_NaN();
    for (int a = 0; a < D; ++a) row.order.u[static_cast<std::size_t>(a)] = std::numeric_limits<double>::quiet_NaN();
    if (!table.rows.empty()) row.order = difference_order(table.rows.back(), row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace lee
