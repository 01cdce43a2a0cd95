#pragma once

#include <array>
#include <functional>
#include <vector>

#include "lee/grid.hpp"

namespace lee {

// Populations at the discrete equilibrium of the given macroscopic field.
// Throws ShapeMismatch when the field's layout differs from the grid or the
// set's dimension does not match.
PopulationField initialize_equilibrium(const Grid& grid, const VelocitySet& set, const MacroField& ic,
                                       int threads = 1);

// Density, velocity and temperature carried by every site.
MacroField moments_field(const PopulationField& f, int threads = 1);

// Scratch reused across steps (per-site moments of the pre-collision state).
struct StepWorkspace {
  std::vector<double> mom;
};

// One collide-and-stream update with relaxation time tau:
//   g_i(t+eps, x+eps*c_i) = (1 - 1/tau) g_i(t, x) + 1/tau geq_i(t, x)
// computed by pulling: pass 1 stores the moments of the pre-collision state,
// pass 2 gathers (1-1/tau) g_i + 1/tau geq_i from the upwind site.  Collision
// always sees the moments of the pre-collision state, and every output value
// depends only on its own site, so worker count never changes the result.
void step_into(const PopulationField& src, PopulationField& dst, double tau, StepWorkspace& ws, int threads = 1);
PopulationField step(const PopulationField& f, double tau, int threads = 1);

// Called after each update with (step index starting at 1, time = index*eps,
// the updated field).
using Observer = std::function<void(long long, double, const PopulationField&)>;

// Applies n_steps updates in place, ping-ponging one scratch buffer.
void run(PopulationField& f, long long n_steps, double tau, const Observer& observer = {}, int threads = 1);

// Globally conserved quantities: total mass sum(g), total momentum
// sum(c_i g_i) and total energy sum(1/2 (|c_i|^2 + beta_i) g_i) over all
// sites.  Accumulated serially so the value is reproducible.
struct ConservedSums {
  double mass = 0;
  std::array<double, 3> momentum = {0, 0, 0};
  double energy = 0;
};
ConservedSums conserved_sums(const PopulationField& f);

}  // namespace lee
