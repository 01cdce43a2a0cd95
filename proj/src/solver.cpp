#include "lee/solver.hpp"

#include <cmath>

#include "lee/errors.hpp"
#include "lee/threading.hpp"

namespace lee {

namespace {

// Constants of the update precomputed per velocity:
//   geq_i = ar_i rho + at_i theta + au_i (c_i . u)
// with the moment weights e_i = 1/2 (|c_i|^2 + beta_i) for the energy sum.
struct KernelTables {
  int n = 0;
  std::vector<double> ar, at, au, e;
  std::vector<std::array<int, 3>> c;
  double inv_rho0 = 0, gm1 = 0, theta0 = 0;
  // wrap[a][x + 1 - c] gives the upwind coordinate on axis a
  std::array<std::vector<int>, 3> wrap;

  KernelTables(const VelocitySet& set, const Grid& grid) {
    n = set.size();
    c = set.c;
    ar.resize(c.size());
    at.resize(c.size());
    au.resize(c.size());
    e.resize(c.size());
    const auto& k = set.coeffs;
    for (int i = 0; i < n; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      const double half_csqr = 0.5 * static_cast<double>(set.csqr(i));
      ar[ii] = (k.a1 + half_csqr * k.c1) * set.f[ii];
      at[ii] = (k.a2 + half_csqr * k.c2) * set.f[ii];
      au[ii] = k.b * set.f[ii];
      e[ii] = set.energy(i);
    }
    inv_rho0 = 1.0 / set.rho0;
    gm1 = set.gamma - 1.0;
    theta0 = set.theta0;
    for (int a = 0; a < 3; ++a) {
      const int na = grid.extent[static_cast<std::size_t>(a)];
      auto& w = wrap[static_cast<std::size_t>(a)];
      w.resize(static_cast<std::size_t>(na) + 2);
      w[0] = na - 1;
      for (int x = 0; x < na; ++x) w[static_cast<std::size_t>(x) + 1] = x;
      w[static_cast<std::size_t>(na) + 1] = 0;
    }
  }
};

template <int D>
void moments_pass(const KernelTables& t, const double* g, double* mom, std::size_t begin, std::size_t end) {
  const int n = t.n;
  constexpr int nm = D + 2;
  for (std::size_t s = begin; s < end; ++s) {
    const double* gs = g + s * static_cast<std::size_t>(n);
    double rho = 0, en = 0;
    double mu[3] = {0, 0, 0};
    for (int i = 0; i < n; ++i) {
      const double gi = gs[i];
      const auto& ci = t.c[static_cast<std::size_t>(i)];
      rho += gi;
      en += t.e[static_cast<std::size_t>(i)] * gi;
      for (int a = 0; a < D; ++a) mu[a] += ci[a] * gi;
    }
    double* m = mom + s * nm;
    m[0] = rho;
    for (int a = 0; a < D; ++a) m[1 + a] = mu[a] * t.inv_rho0;
    m[D + 1] = t.inv_rho0 * (t.gm1 * en - t.theta0 * rho);
  }
}

template <int D>
void collide_stream_pass(const KernelTables& t, const Grid& grid, const double* g, const double* mom, double* out,
                         double om, std::size_t begin, std::size_t end) {
  const int n = t.n;
  constexpr int nm = D + 2;
  const double om1 = 1.0 - om;
  const int nx = grid.extent[0];
  const int ny = grid.extent[1];
  const int* wx = t.wrap[0].data();
  const int* wy = t.wrap[1].data();
  const int* wz = t.wrap[2].data();

  // decode the first flat index, then advance x with carries
  int x = static_cast<int>(begin % static_cast<std::size_t>(nx));
  int y = static_cast<int>((begin / static_cast<std::size_t>(nx)) % static_cast<std::size_t>(ny));
  int z = static_cast<int>(begin / (static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)));

  for (std::size_t s = begin; s < end; ++s) {
    double* os = out + s * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) {
      const auto& ci = t.c[static_cast<std::size_t>(i)];
      const int sx = wx[x + 1 - ci[0]];
      const int sy = D >= 2 ? wy[y + 1 - ci[1]] : 0;
      const int sz = D >= 3 ? wz[z + 1 - ci[2]] : 0;
      const std::size_t src =
          (static_cast<std::size_t>(sz) * static_cast<std::size_t>(ny) + static_cast<std::size_t>(sy)) *
              static_cast<std::size_t>(nx) +
          static_cast<std::size_t>(sx);
      const double* m = mom + src * nm;
      double ciu = 0;
      for (int a = 0; a < D; ++a) ciu += ci[a] * m[1 + a];
      const double geq =
          t.ar[static_cast<std::size_t>(i)] * m[0] + t.at[static_cast<std::size_t>(i)] * m[D + 1] +
          t.au[static_cast<std::size_t>(i)] * ciu;
      os[i] = om1 * g[src * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] + om * geq;
    }
    if (++x == nx) {
      x = 0;
      if (++y == ny) {
        y = 0;
        ++z;
      }
    }
  }
}

}  // namespace

PopulationField initialize_equilibrium(const Grid& grid, const VelocitySet& set, const MacroField& ic, int threads) {
  grid.validate();
  if (set.dimension != grid.dimension) throw ShapeMismatch("initialize_equilibrium: set and grid dimension differ");
  if (!ic.grid.same_layout(grid)) throw ShapeMismatch("initialize_equilibrium: field layout differs from grid");
  const auto sites = grid.sites();
  const auto D = static_cast<std::size_t>(grid.dimension);
  if (ic.rho.size() != sites || ic.theta.size() != sites || ic.u.size() != sites * D)
    throw ShapeMismatch("initialize_equilibrium: field arrays have wrong length");

  PopulationField f = PopulationField::zeros(grid, set);
  parallel_for(sites, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) equilibrium_into(set, ic.at(s), f.site(s));
  });
  return f;
}

MacroField moments_field(const PopulationField& f, int threads) {
  MacroField m = MacroField::zeros(f.grid);
  const auto D = static_cast<std::size_t>(f.grid.dimension);
  parallel_for(f.grid.sites(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      const MacroState ms = moments(f.set, f.site(s));
      m.rho[s] = ms.rho;
      for (std::size_t a = 0; a < D; ++a) m.u[s * D + a] = ms.u[a];
      m.theta[s] = ms.theta;
    }
  });
  return m;
}

void step_into(const PopulationField& src, PopulationField& dst, double tau, StepWorkspace& ws, int threads) {
  if (tau == 0.0) throw ZeroTau("step: tau must be nonzero");
  if (!dst.grid.same_layout(src.grid) || dst.data.size() != src.data.size())
    throw ShapeMismatch("step: destination field layout differs from source");
  const Grid& grid = src.grid;
  const std::size_t sites = grid.sites();
  const int D = grid.dimension;
  const std::size_t nm = static_cast<std::size_t>(D) + 2;
  ws.mom.resize(sites * nm);

  const KernelTables tables(src.set, grid);
  const double* g = src.data.data();
  double* mom = ws.mom.data();
  double* out = dst.data.data();
  const double om = 1.0 / tau;

  parallel_for(sites, threads, [&](std::size_t begin, std::size_t end) {
    switch (D) {
      case 1: moments_pass<1>(tables, g, mom, begin, end); break;
      case 2: moments_pass<2>(tables, g, mom, begin, end); break;
      default: moments_pass<3>(tables, g, mom, begin, end); break;
    }
  });
  parallel_for(sites, threads, [&](std::size_t begin, std::size_t end) {
    switch (D) {
      case 1: collide_stream_pass<1>(tables, grid, g, mom, out, om, begin, end); break;
      case 2: collide_stream_pass<2>(tables, grid, g, mom, out, om, begin, end); break;
      default: collide_stream_pass<3>(tables, grid, g, mom, out, om, begin, end); break;
    }
  });
}

PopulationField step(const PopulationField& f, double tau, int threads) {
  PopulationField next = PopulationField::zeros(f.grid, f.set);
  StepWorkspace ws;
  step_into(f, next, tau, ws, threads);
  return next;
}

void run(PopulationField& f, long long n_steps, double tau, const Observer& observer, int threads) {
  if (n_steps < 0) throw Error("run: negative step count");
  PopulationField scratch = PopulationField::zeros(f.grid, f.set);
  StepWorkspace ws;
  for (long long i = 1; i <= n_steps; ++i) {
    step_into(f, scratch, tau, ws, threads);
    f.data.swap(scratch.data);
    if (observer) observer(i, static_cast<double>(i) * f.grid.eps, f);
  }
}

ConservedSums conserved_sums(const PopulationField& f) {
  ConservedSums sums;
  const int n = f.set.size();
  for (std::size_t s = 0; s < f.grid.sites(); ++s) {
    const double* gs = f.data.data() + s * static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i) {
      const double gi = gs[i];
      const auto& ci = f.set.c[static_cast<std::size_t>(i)];
      sums.mass += gi;
      sums.momentum[0] += ci[0] * gi;
      sums.momentum[1] += ci[1] * gi;
      sums.momentum[2] += ci[2] * gi;
      sums.energy += f.set.energy(i) * gi;
    }
  }
  return sums;
}

}  // namespace lee
