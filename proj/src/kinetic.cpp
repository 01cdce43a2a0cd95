#include "lee/kinetic.hpp"

#include <cmath>
#include <random>

#include "lee/errors.hpp"

namespace lee {

void equilibrium_into(const VelocitySet& set, const MacroState& m, std::span<double> out) {
  const int n = set.size();
  if (out.size() != static_cast<std::size_t>(n))
    throw ShapeMismatch("equilibrium: output span has wrong length");
  const auto& k = set.coeffs;
  for (int i = 0; i < n; ++i) {
    const auto& ci = set.c[static_cast<std::size_t>(i)];
    const double ciu = ci[0] * m.u[0] + ci[1] * m.u[1] + ci[2] * m.u[2];
    const double half_csqr = 0.5 * static_cast<double>(set.csqr(i));
    out[static_cast<std::size_t>(i)] =
        (k.a1 * m.rho + k.a2 * m.theta + k.b * ciu + half_csqr * (k.c1 * m.rho + k.c2 * m.theta)) *
        set.f[static_cast<std::size_t>(i)];
  }
}

std::vector<double> equilibrium(const VelocitySet& set, const MacroState& m) {
  std::vector<double> g(static_cast<std::size_t>(set.size()));
  equilibrium_into(set, m, g);
  return g;
}

MacroState moments(const VelocitySet& set, std::span<const double> g) {
  const int n = set.size();
  if (g.size() != static_cast<std::size_t>(n)) throw ShapeMismatch("moments: population span has wrong length");
  MacroState m;
  double energy = 0;
  for (int i = 0; i < n; ++i) {
    const double gi = g[static_cast<std::size_t>(i)];
    const auto& ci = set.c[static_cast<std::size_t>(i)];
    m.rho += gi;
    m.u[0] += ci[0] * gi;
    m.u[1] += ci[1] * gi;
    m.u[2] += ci[2] * gi;
    energy += set.energy(i) * gi;
  }
  const double inv_rho0 = 1.0 / set.rho0;
  for (auto& ua : m.u) ua *= inv_rho0;
  m.theta = inv_rho0 * ((set.gamma - 1.0) * energy - set.theta0 * m.rho);
  return m;
}

namespace {

struct Defect {
  std::string name;
  double value = 0;
};

void fold(ConstraintReport& rep, const std::string& name, double defect) {
  for (auto& chk : rep.checks) {
    if (chk.name == name) {
      chk.max_defect = std::max(chk.max_defect, defect);
      return;
    }
  }
  rep.checks.push_back({name, defect, false});
}

}  // namespace

ConstraintReport verify_polyatomic_constraints(const VelocitySet& set, int trials, std::uint64_t seed, double tol) {
  const int n = set.size();
  const int D = set.dimension;
  ConstraintReport rep;
  rep.set_name = set.name;
  rep.trials = trials;
  rep.seed = seed;

  // Background checks are state independent: total mass and total energy of
  // the weights must match the uniform state they discretize.
  {
    double mass = 0, energy = 0;
    for (int i = 0; i < n; ++i) {
      mass += set.f[static_cast<std::size_t>(i)];
      energy += set.energy(i) * set.f[static_cast<std::size_t>(i)];
    }
    fold(rep, "background mass", std::abs(mass - set.rho0));
    fold(rep, "background energy", std::abs(energy - set.rho0 * set.theta0 / (set.gamma - 1.0)));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> g(static_cast<std::size_t>(n));

  for (int t = 0; t < trials; ++t) {
    MacroState m;
    m.rho = dist(rng);
    for (int a = 0; a < D; ++a) m.u[static_cast<std::size_t>(a)] = dist(rng);
    m.theta = dist(rng);
    equilibrium_into(set, m, g);

    double mass = 0, energy = 0;
    std::array<double, 3> momentum = {0, 0, 0};
    std::array<std::array<double, 3>, 3> press{};
    std::array<double, 3> eflux = {0, 0, 0};
    for (int i = 0; i < n; ++i) {
      const double gi = g[static_cast<std::size_t>(i)];
      const auto& ci = set.c[static_cast<std::size_t>(i)];
      const double ei = set.energy(i);
      mass += gi;
      energy += ei * gi;
      for (int a = 0; a < 3; ++a) {
        momentum[static_cast<std::size_t>(a)] += ci[a] * gi;
        eflux[static_cast<std::size_t>(a)] += ei * ci[a] * gi;
        for (int b = 0; b < 3; ++b) press[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += ci[a] * ci[b] * gi;
      }
    }

    const double p = set.rho0 * m.theta + set.theta0 * m.rho;  // pressure fluctuation
    fold(rep, "mass", std::abs(mass - m.rho));
    fold(rep, "energy", std::abs(energy - p / (set.gamma - 1.0)));
    double md = 0, pd = 0, fd = 0;
    for (int a = 0; a < 3; ++a) {
      const double ua = (a < D) ? m.u[static_cast<std::size_t>(a)] : 0.0;
      md = std::max(md, std::abs(momentum[static_cast<std::size_t>(a)] - set.rho0 * ua));
      fd = std::max(fd, std::abs(eflux[static_cast<std::size_t>(a)] -
                                 set.gamma / (set.gamma - 1.0) * set.rho0 * set.theta0 * ua));
      for (int b = 0; b < 3; ++b) {
        const double target = (a == b && a < D) ? p : 0.0;
        pd = std::max(pd, std::abs(press[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] - target));
      }
    }
    fold(rep, "momentum", md);
    fold(rep, "pressure tensor", pd);
    fold(rep, "energy flux", fd);
  }

  rep.max_defect = 0;
  rep.pass = true;
  for (auto& chk : rep.checks) {
    chk.pass = chk.max_defect <= tol;
    rep.max_defect = std::max(rep.max_defect, chk.max_defect);
    rep.pass = rep.pass && chk.pass;
  }
  return rep;
}

FluxReport verify_flux_moments(const VelocitySet& set, const MacroState& m, double tol) {
  const int n = set.size();
  const int D = set.dimension;
  FluxReport rep;
  rep.set_name = set.name;

  std::vector<double> g(static_cast<std::size_t>(n));
  equilibrium_into(set, m, g);

  for (int i = 0; i < n; ++i) {
    const double gi = g[static_cast<std::size_t>(i)];
    const auto& ci = set.c[static_cast<std::size_t>(i)];
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        rep.second_moment[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += ci[a] * ci[b] * gi;
        for (int c = 0; c < 3; ++c)
          rep.third_moment[static_cast<std::size_t>(9 * a + 3 * b + c)] += ci[a] * ci[b] * ci[c] * gi;
      }
  }

  const double p = set.rho0 * m.theta + set.theta0 * m.rho;
  rep.second_defect = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const double target = (a == b && a < D) ? p : 0.0;
      rep.second_defect = std::max(
          rep.second_defect,
          std::abs(rep.second_moment[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] - target));
    }
  rep.second_pass = rep.second_defect <= tol;
  for (double v : rep.third_moment) rep.third_max_abs = std::max(rep.third_max_abs, std::abs(v));
  return rep;
}

}  // namespace lee
