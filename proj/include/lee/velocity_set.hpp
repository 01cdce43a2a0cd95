#pragma once

#include <array>
#include <string>
#include <vector>

namespace lee {

// Coefficients of the linearized equilibrium
//   geq_i = (a1*rho + a2*theta + b*(c_i . u) + 1/2 |c_i|^2 (c1*rho + c2*theta)) * f_i
// where rho, u, theta are the fluctuations around the uniform background
// (rho0, 0, theta0).
struct EquilibriumCoeffs {
  double a1 = 0, a2 = 0, b = 0, c1 = 0, c2 = 0;
};

// A discrete velocity set together with its background state.  Velocities are
// integer vectors (unused axes stay zero), weights f are the background
// populations normalized so that sum(f) = rho0, and beta carries the internal
// energy load per velocity (all zero for monoatomic gases).
struct VelocitySet {
  std::string name;
  int dimension = 0;
  std::vector<std::array<int, 3>> c;
  std::vector<double> f;
  std::vector<double> beta;
  double rho0 = 0;
  double theta0 = 0;
  double gamma = 0;  // adiabatic exponent
  EquilibriumCoeffs coeffs;

  int size() const { return static_cast<int>(c.size()); }
  bool monoatomic() const;
  // kinetic energy carried by velocity i: 1/2 (|c_i|^2 + beta_i)
  double energy(int i) const;
  int csqr(int i) const {
    const auto& v = c[static_cast<std::size_t>(i)];
    return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
  }
};

// D = 1, three speeds {0,-1,+1}, theta0 = 1/3, gamma = 3.
VelocitySet build_d1q3();
// D = 2, five speeds, theta0 = 1/4, gamma = 2.
VelocitySet build_d2q5_mono();
// D = 2, five speeds with internal energy (diatomic, gamma = 5/3).
VelocitySet build_d2q5_diatomic();
// The cubic 27-velocity family in 3D (gamma = 5/3).  Weights follow the
// four-class formula in center/axis/face/corner order; classes whose weight
// vanishes are pruned, and the set is named D3Q<n> by the surviving count.
// Throws NegativeWeight when a class weight comes out below zero.
VelocitySet build_d3q_family(double rho0, double theta0, double alpha);
// D = 3 seven-velocity diatomic set (gamma = 7/5) parametrized by the axis
// weight f1 > 0.  Throws NonPositiveF1 otherwise.
VelocitySet build_d3q7_diatomic(double f1);

// Named lookup used by the CLI: d1q3, d2q5, d2q5-diatomic, d3q7, d3q9,
// d3q13, d3q19, d3q7-diatomic.  Throws UnknownLattice.
VelocitySet make_set(const std::string& name);
std::vector<std::string> builtin_set_names();

// One row per scalar similarity condition: the discrete sum over the set vs
// the corresponding moment of the Maxwellian background.
struct MomentCheck {
  std::string condition;
  double discrete = 0;
  double target = 0;
  double defect = 0;
  bool pass = false;
};

struct CompatibilityReport {
  std::string set_name;
  std::vector<MomentCheck> checks;
  double max_defect = 0;
  bool pass = false;
};

// Verifies the five moment families (mass, energy, pressure tensor, energy
// flux tensor, energy square) against the Maxwellian targets.  Only defined
// for monoatomic sets; polyatomic sets use verify_polyatomic_constraints.
CompatibilityReport check_moment_compatibility(const VelocitySet& set, double tol = 1e-12);

}  // namespace lee
