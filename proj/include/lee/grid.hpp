#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lee/kinetic.hpp"
#include "lee/velocity_set.hpp"

namespace lee {

// Periodic cartesian grid with the acoustic scaling dx = dt = eps.  Site j
// along an axis sits at origin + j*eps; the far boundary origin + length is
// identified with the origin.  Unused axes have extent 1.
struct Grid {
  int dimension = 1;
  std::array<int, 3> extent = {1, 1, 1};
  double eps = 1.0;
  std::array<double, 3> origin = {0, 0, 0};
  std::array<double, 3> length = {1, 1, 1};

  // Cubic domain [origin, origin + len)^dim with n sites per axis.
  static Grid uniform(int dim, int n, double len, double origin = 0.0);

  std::size_t sites() const {
    return static_cast<std::size_t>(extent[0]) * static_cast<std::size_t>(extent[1]) *
           static_cast<std::size_t>(extent[2]);
  }
  double coord(int axis, int index) const { return origin[static_cast<std::size_t>(axis)] + eps * index; }
  std::size_t index(int x, int y = 0, int z = 0) const {
    return (static_cast<std::size_t>(z) * static_cast<std::size_t>(extent[1]) + static_cast<std::size_t>(y)) *
               static_cast<std::size_t>(extent[0]) +
           static_cast<std::size_t>(x);
  }
  bool same_layout(const Grid& o) const;
  // Throws ShapeMismatch when extent/eps/origin/length are inconsistent.
  void validate() const;
};

// Macroscopic fields stored per component (site-major, x fastest).
struct MacroField {
  Grid grid;
  std::vector<double> rho;
  std::vector<double> u;  // u[s*dim + a]
  std::vector<double> theta;

  static MacroField zeros(const Grid& g);
  MacroState at(std::size_t s) const;
  void set(std::size_t s, const MacroState& m);
};

// Populations g_i per site, data[s*n + i].
struct PopulationField {
  Grid grid;
  VelocitySet set;
  std::vector<double> data;

  static PopulationField zeros(const Grid& g, const VelocitySet& set);
  std::span<double> site(std::size_t s) {
    return {data.data() + s * static_cast<std::size_t>(set.size()), static_cast<std::size_t>(set.size())};
  }
  std::span<const double> site(std::size_t s) const {
    return {data.data() + s * static_cast<std::size_t>(set.size()), static_cast<std::size_t>(set.size())};
  }
};

}  // namespace lee
