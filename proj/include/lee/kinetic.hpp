#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lee/velocity_set.hpp"

namespace lee {

// Macroscopic fluctuation state at one site: density rho, velocity u,
// temperature theta (all relative to the uniform background).
struct MacroState {
  double rho = 0;
  std::array<double, 3> u = {0, 0, 0};
  double theta = 0;
};

// geq_i = (a1*rho + a2*theta + b*(c_i . u) + 1/2 |c_i|^2 (c1*rho + c2*theta)) * f_i
void equilibrium_into(const VelocitySet& set, const MacroState& m, std::span<double> out);
std::vector<double> equilibrium(const VelocitySet& set, const MacroState& m);

// Inverse map: density, velocity and temperature carried by the populations.
//   rho   = sum_i g_i
//   u     = 1/rho0 sum_i c_i g_i
//   theta = 1/rho0 ((gamma - 1) sum_i 1/2 (|c_i|^2 + beta_i) g_i - theta0 rho)
MacroState moments(const VelocitySet& set, std::span<const double> g);

struct ConstraintCheck {
  std::string name;
  double max_defect = 0;
  bool pass = false;
};

struct ConstraintReport {
  std::string set_name;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<ConstraintCheck> checks;
  double max_defect = 0;
  bool pass = false;
};

// Randomized verification of the equilibrium moment identities that make the
// scheme consistent with the linearized Euler equations for a general
// adiabatic exponent: mass, momentum, energy, pressure tensor and energy flux
// of geq, plus the mass and energy of the background weights themselves.
// States are drawn uniformly from [-1,1]^(D+2) with a fixed seed.
ConstraintReport verify_polyatomic_constraints(const VelocitySet& set, int trials = 100,
                                               std::uint64_t seed = 12345, double tol = 1e-12);

struct FluxReport {
  std::string set_name;
  // sum_i c_i (x) c_i geq_i, and its defect against (theta0 rho + rho0 theta) I
  std::array<std::array<double, 3>, 3> second_moment{};
  double second_defect = 0;
  bool second_pass = false;
  // sum_i c_i (x) c_i (x) c_i geq_i, reported without a target: its residual
  // against the Euler flux is what the tau = 1/2 update cancels.
  std::array<double, 27> third_moment{};
  double third_max_abs = 0;
};

FluxReport verify_flux_moments(const VelocitySet& set, const MacroState& m, double tol = 1e-12);

}  // namespace lee
