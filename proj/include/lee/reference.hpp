#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

#include "lee/grid.hpp"

namespace lee {

// Characteristic decomposition of the linearized Euler flux in a unit
// direction.  Variables are ordered (rho, u_1..u_D, theta); the waves are the
// entropy mode, D-1 shear modes (speed 0) and the two acoustic modes with
// speed +-c, c = sqrt(gamma theta0).  Rows of `left` and columns of `right`
// are mutually bi-orthonormal, and right * diag(speeds) * left reassembles
// the flux matrix.
struct CharacteristicSystem {
  int dimension = 0;
  double sound_speed = 0;
  std::vector<double> speeds;  // ordered: 0 (entropy), 0 x (D-1) (shear), -c, +c
  Eigen::MatrixXd right;
  Eigen::MatrixXd left;
};

CharacteristicSystem characteristics(double rho0, double theta0, double gamma, int dimension,
                                     const std::array<double, 3>& direction);

// Exact solution of the 1D linearized Euler equations on the periodic grid of
// `ic` at time t: decompose into characteristic fields, advect each by its
// speed (integer site shifts are applied exactly, fractional ones by
// trigonometric interpolation), recombine.
MacroField analytic_solution_1d(const MacroField& ic, double t, double rho0, double theta0, double gamma);

// Canonical Gaussian density pulses (u = theta = 0):
//   1D on [0,1):   rho(x) = exp(-100 (x - 1/2)^2)
//   2D on [0,2)^2: rho(x) = exp(-7 |x - (1,1)|^2)
//   3D on [0,2)^3: rho(x) = exp(-15 |x - (1,1,1)|^2)
// Throws DomainMismatch off the canonical domain unless allow_custom_domain.
MacroField gauss_pulse(int dimension, const Grid& grid, bool allow_custom_domain = false);

// Reference scales connecting a dimensional problem to the nondimensional
// solver: u_ref = x_ref / t_ref and u_ref^2 = theta_ref must hold.
struct UnitSystem {
  double rho_ref = 1;
  double theta_ref = 1;
  double x_ref = 1;
  double t_ref = 1;
  double u_ref = 1;
};

void validate_units(const UnitSystem& us);  // throws InconsistentUnits

// Scales for simulating a dimensional background (rho_dim, theta_dim) with a
// set whose nondimensional background is (rho0, theta0), given x_ref.
UnitSystem units_for(double rho_dim, double theta_dim, double rho0, double theta0, double x_ref);

double to_nondim_time(const UnitSystem& us, double t_dim);
double to_dim_time(const UnitSystem& us, double t_nondim);
MacroState to_nondim(const UnitSystem& us, const MacroState& dim);
MacroState to_dim(const UnitSystem& us, const MacroState& nondim);
// Field conversions also rescale the grid geometry by x_ref (and eps with it).
MacroField to_nondim(const UnitSystem& us, const MacroField& dim);
MacroField to_dim(const UnitSystem& us, const MacroField& nondim);

}  // namespace lee
