#include "lee/grid.hpp"

#include <cmath>

#include "lee/errors.hpp"

namespace lee {

Grid Grid::uniform(int dim, int n, double len, double origin0) {
  if (dim < 1 || dim > 3) throw ShapeMismatch("Grid::uniform: dimension must be 1, 2 or 3");
  if (n < 1) throw ShapeMismatch("Grid::uniform: need at least one site per axis");
  Grid g;
  g.dimension = dim;
  g.eps = len / n;
  for (int a = 0; a < dim; ++a) {
    g.extent[static_cast<std::size_t>(a)] = n;
    g.origin[static_cast<std::size_t>(a)] = origin0;
    g.length[static_cast<std::size_t>(a)] = len;
  }
  return g;
}

bool Grid::same_layout(const Grid& o) const {
  if (dimension != o.dimension || extent != o.extent) return false;
  if (eps != o.eps) return false;
  for (int a = 0; a < dimension; ++a) {
    if (origin[static_cast<std::size_t>(a)] != o.origin[static_cast<std::size_t>(a)]) return false;
    if (length[static_cast<std::size_t>(a)] != o.length[static_cast<std::size_t>(a)]) return false;
  }
  return true;
}

void Grid::validate() const {
  if (dimension < 1 || dimension > 3) throw ShapeMismatch("Grid: dimension must be 1, 2 or 3");
  if (!(eps > 0)) throw ShapeMismatch("Grid: eps must be positive");
  for (int a = 0; a < 3; ++a) {
    const auto ia = static_cast<std::size_t>(a);
    if (a < dimension) {
      if (extent[ia] < 1) throw ShapeMismatch("Grid: empty axis");
      // dx*N must tile the periodic length
      if (std::abs(eps * extent[ia] - length[ia]) > 1e-12 * std::abs(length[ia]))
        throw ShapeMismatch("Grid: eps * extent does not match length");
    } else if (extent[ia] != 1) {
      throw ShapeMismatch("Grid: unused axis must have extent 1");
    }
  }
}

MacroField MacroField::zeros(const Grid& g) {
  MacroField m;
  m.grid = g;
  m.rho.assign(g.sites(), 0.0);
  m.u.assign(g.sites() * static_cast<std::size_t>(g.dimension), 0.0);
  m.theta.assign(g.sites(), 0.0);
  return m;
}

MacroState MacroField::at(std::size_t s) const {
  MacroState m;
  m.rho = rho[s];
  const auto D = static_cast<std::size_t>(grid.dimension);
  for (std::size_t a = 0; a < D; ++a) m.u[a] = u[s * D + a];
  m.theta = theta[s];
  return m;
}

void MacroField::set(std::size_t s, const MacroState& m) {
  rho[s] = m.rho;
  const auto D = static_cast<std::size_t>(grid.dimension);
  for (std::size_t a = 0; a < D; ++a) u[s * D + a] = m.u[a];
  theta[s] = m.theta;
}

PopulationField PopulationField::zeros(const Grid& g, const VelocitySet& set) {
  PopulationField f;
  f.grid = g;
  f.set = set;
  f.data.assign(g.sites() * static_cast<std::size_t>(set.size()), 0.0);
  return f;
}

}  // namespace lee
