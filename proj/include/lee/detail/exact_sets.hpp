#pragma once

#include <array>
#include <string>
#include <vector>

#include "lee/rational.hpp"
#include "lee/velocity_set.hpp"

// Rational-arithmetic twins of the public constructors.  The public builders
// delegate here for the named sets so every tabulated constant is an exact
// fraction rounded to double once; tests also use these to check the lattice
// identities without floating-point slack.
namespace lee::detail {

struct ExactCoeffs {
  Rational a1, a2, b, c1, c2;
};

struct ExactSet {
  std::string name;
  int dimension = 0;
  std::vector<std::array<int, 3>> c;
  std::vector<Rational> f;
  std::vector<Rational> beta;
  Rational rho0, theta0, gamma;
  ExactCoeffs coeffs;
};

ExactSet exact_d1q3();
ExactSet exact_d2q5_mono();
ExactSet exact_d2q5_diatomic();
ExactSet exact_d3q_family(Rational rho0, Rational theta0, Rational alpha);
ExactSet exact_d3q7_diatomic(Rational f1);

VelocitySet to_double(const ExactSet& e);

// The 27 velocities of the cubic family in the fixed enumeration: rest, then
// the six axis vectors, twelve face diagonals, eight corners; within each
// class a canonical sign pattern is followed by its negation.
const std::vector<std::array<int, 3>>& d3_family_velocities();

}  // namespace lee::detail
