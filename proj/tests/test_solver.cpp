#include <doctest.h>

#include <cmath>
#include <random>

#include "lee/errors.hpp"
#include "lee/reference.hpp"
#include "lee/solver.hpp"
#include "oracles.hpp"

using lee::Grid;
using lee::MacroField;
using lee::MacroState;
using lee::PopulationField;

namespace {

PopulationField random_field(const lee::VelocitySet& set, const Grid& grid, unsigned seed) {
  auto f = PopulationField::zeros(grid, set);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto& v : f.data) v = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("uniform equilibrium is a fixed point") {
  for (const auto& n : lee::builtin_set_names()) {
    const auto set = lee::make_set(n);
    CAPTURE(n);
    const auto grid = Grid::uniform(set.dimension, 6, 1.0);
    MacroState m;
    m.rho = 0.3;
    m.u[0] = 0.1;
    if (set.dimension > 1) m.u[1] = -0.2;
    m.theta = -0.05;
    auto ic = MacroField::zeros(grid);
    for (std::size_t s = 0; s < grid.sites(); ++s) ic.set(s, m);
    auto f = lee::initialize_equilibrium(grid, set, ic);
    const auto before = f.data;
    for (int k = 0; k < 3; ++k) f = lee::step(f, 0.5);
    for (std::size_t i = 0; i < f.data.size(); ++i)
      CHECK(f.data[i] == doctest::Approx(before[i]).epsilon(1e-13).scale(1.0));
  }
}

TEST_CASE("tau = 1 impulse on d1q3 streams without collision") {
  // E leaves any population vector invariant for d1q3, so the update is a
  // pure shift along the characteristic
  const auto set = lee::build_d1q3();
  const auto grid = Grid::uniform(1, 8, 1.0);
  auto f = PopulationField::zeros(grid, set);
  f.site(2)[2] = 1.0;  // velocity +1 at site 2
  const auto g = lee::step(f, 1.0);
  for (std::size_t s = 0; s < grid.sites(); ++s)
    for (int i = 0; i < 3; ++i) {
      const double want = (s == 3 && i == 2) ? 1.0 : 0.0;
      CHECK(g.site(s)[static_cast<std::size_t>(i)] == doctest::Approx(want).scale(1.0).epsilon(1e-15));
    }
}

TEST_CASE("wraparound pulls across the periodic boundary") {
  const auto set = lee::build_d1q3();
  const auto grid = Grid::uniform(1, 5, 1.0);
  auto f = PopulationField::zeros(grid, set);
  f.site(4)[2] = 1.0;  // velocity +1 at the last site
  f.site(0)[1] = 2.0;  // velocity -1 at the first site
  const auto g = lee::step(f, 1.0);
  CHECK(g.site(0)[2] == doctest::Approx(1.0));
  CHECK(g.site(4)[1] == doctest::Approx(2.0));
}

TEST_CASE("kernel equals the dense one-step operator") {
  struct Case {
    const char* name;
    int n;
    double tau;
  };
  const Case cases[] = {{"d1q3", 8, 0.5}, {"d1q3", 8, 1.0}, {"d2q5", 8, 0.5},
                        {"d2q5-diatomic", 6, 0.7}, {"d3q7", 4, 0.5}};
  for (const auto& c : cases) {
    const auto set = lee::make_set(c.name);
    CAPTURE(c.name);
    CAPTURE(c.tau);
    const auto grid = Grid::uniform(set.dimension, c.n, 1.0);
    auto f = random_field(set, grid, 314159);
    const auto G = oracle::global_step_operator(set, grid, c.tau);
    Eigen::VectorXd v = oracle::flatten(f);
    for (int k = 0; k < 5; ++k) {
      f = lee::step(f, c.tau);
      v = G * v;
    }
    const auto w = oracle::flatten(f);
    CHECK((w - v).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("mass momentum and energy are conserved") {
  for (const auto& n : lee::builtin_set_names()) {
    const auto set = lee::make_set(n);
    CAPTURE(n);
    const int n_sites = set.dimension == 3 ? 6 : (set.dimension == 2 ? 12 : 64);
    const auto grid = Grid::uniform(set.dimension, n_sites, 1.0);
    auto f = random_field(set, grid, 2718);
    const auto before = lee::conserved_sums(f);
    lee::run(f, 100, 0.5);
    const auto after = lee::conserved_sums(f);
    const double scale = std::abs(before.mass) + std::abs(before.energy) + 1.0;
    CHECK(std::abs(after.mass - before.mass) <= 1e-12 * scale);
    CHECK(std::abs(after.energy - before.energy) <= 1e-12 * scale);
    for (int a = 0; a < set.dimension; ++a)
      CHECK(std::abs(after.momentum[static_cast<std::size_t>(a)] -
                     before.momentum[static_cast<std::size_t>(a)]) <= 1e-12 * scale);
  }
}

TEST_CASE("update is linear in the populations") {
  const auto set = lee::build_d2q5_mono();
  const auto grid = Grid::uniform(2, 7, 1.0);
  const auto a = random_field(set, grid, 1);
  const auto b = random_field(set, grid, 2);
  auto mix = PopulationField::zeros(grid, set);
  for (std::size_t i = 0; i < mix.data.size(); ++i) mix.data[i] = 0.25 * a.data[i] - 2.0 * b.data[i];
  const auto sa = lee::step(a, 0.5);
  const auto sb = lee::step(b, 0.5);
  const auto sm = lee::step(mix, 0.5);
  for (std::size_t i = 0; i < sm.data.size(); ++i)
    CHECK(sm.data[i] == doctest::Approx(0.25 * sa.data[i] - 2.0 * sb.data[i]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("d1q3 returns to the initial state after one period") {
  const auto set = lee::build_d1q3();
  const auto grid = Grid::uniform(1, 16, 1.0);
  const auto ic = lee::gauss_pulse(1, grid);
  auto f = lee::initialize_equilibrium(grid, set, ic);
  const auto start = f.data;
  lee::run(f, 16, 0.5);
  for (std::size_t i = 0; i < f.data.size(); ++i)
    CHECK(f.data[i] == doctest::Approx(start[i]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("worker count never changes the bits") {
  const auto set = lee::build_d2q5_mono();
  const auto grid = Grid::uniform(2, 20, 2.0);
  const auto ic = lee::gauss_pulse(2, grid);
  auto f1 = lee::initialize_equilibrium(grid, set, ic, 1);
  auto f3 = lee::initialize_equilibrium(grid, set, ic, 3);
  auto f8 = lee::initialize_equilibrium(grid, set, ic, 8);
  REQUIRE(f1.data == f3.data);
  lee::run(f1, 10, 0.5, {}, 1);
  lee::run(f3, 10, 0.5, {}, 3);
  lee::run(f8, 10, 0.5, {}, 8);
  CHECK(f1.data == f3.data);
  CHECK(f1.data == f8.data);
}

TEST_CASE("run reports each step to the observer") {
  const auto set = lee::build_d1q3();
  const auto grid = Grid::uniform(1, 8, 1.0);
  auto f = lee::initialize_equilibrium(grid, set, lee::gauss_pulse(1, grid));
  auto g = f;
  std::vector<long long> indices;
  std::vector<double> times;
  lee::run(f, 4, 0.5, [&](long long i, double t, const PopulationField& cur) {
    indices.push_back(i);
    times.push_back(t);
    CHECK(cur.data.size() == f.data.size());
  });
  REQUIRE(indices.size() == 4);
  for (long long i = 0; i < 4; ++i) {
    CHECK(indices[static_cast<std::size_t>(i)] == i + 1);
    CHECK(times[static_cast<std::size_t>(i)] == doctest::Approx((i + 1) * grid.eps).epsilon(1e-15));
  }
  // equals four manual steps
  for (int k = 0; k < 4; ++k) g = lee::step(g, 0.5);
  CHECK(f.data == g.data);
}

TEST_CASE("initialization round-trips through the moments") {
  for (const char* n : {"d2q5", "d2q5-diatomic"}) {
    const auto set = lee::make_set(n);
    const auto grid = Grid::uniform(2, 10, 2.0);
    const auto ic = lee::gauss_pulse(2, grid);
    const auto f = lee::initialize_equilibrium(grid, set, ic);
    const auto back = lee::moments_field(f);
    for (std::size_t s = 0; s < grid.sites(); ++s) {
      CHECK(back.rho[s] == doctest::Approx(ic.rho[s]).epsilon(1e-13).scale(1.0));
      CHECK(back.theta[s] == doctest::Approx(ic.theta[s]).epsilon(1e-13).scale(1.0));
    }
  }
}

TEST_CASE("shape and parameter errors") {
  const auto set = lee::build_d2q5_mono();
  const auto grid = Grid::uniform(2, 6, 1.0);
  const auto grid_other = Grid::uniform(2, 8, 1.0);
  const auto ic = MacroField::zeros(grid_other);
  CHECK_THROWS_AS(lee::initialize_equilibrium(grid, set, ic), lee::ShapeMismatch);
  CHECK_THROWS_AS(lee::initialize_equilibrium(Grid::uniform(1, 6, 1.0), set, MacroField::zeros(Grid::uniform(1, 6, 1.0))),
                  lee::ShapeMismatch);
  auto f = PopulationField::zeros(grid, set);
  CHECK_THROWS_AS(lee::step(f, 0.0), lee::ZeroTau);
  auto dst = PopulationField::zeros(grid_other, set);
  lee::StepWorkspace ws;
  CHECK_THROWS_AS(lee::step_into(f, dst, 0.5, ws), lee::ShapeMismatch);
}

TEST_CASE("conserved sums match direct accumulation") {
  const auto set = lee::build_d2q5_diatomic();
  const auto grid = Grid::uniform(2, 5, 1.0);
  const auto f = random_field(set, grid, 5);
  const auto sums = lee::conserved_sums(f);
  double mass = 0, energy = 0, px = 0, py = 0;
  for (std::size_t s = 0; s < grid.sites(); ++s) {
    const auto g = f.site(s);
    for (int i = 0; i < set.size(); ++i) {
      mass += g[static_cast<std::size_t>(i)];
      energy += set.energy(i) * g[static_cast<std::size_t>(i)];
      px += set.c[static_cast<std::size_t>(i)][0] * g[static_cast<std::size_t>(i)];
      py += set.c[static_cast<std::size_t>(i)][1] * g[static_cast<std::size_t>(i)];
    }
  }
  CHECK(sums.mass == doctest::Approx(mass).epsilon(1e-13));
  CHECK(sums.energy == doctest::Approx(energy).epsilon(1e-13));
  CHECK(sums.momentum[0] == doctest::Approx(px).epsilon(1e-13).scale(1.0));
  CHECK(sums.momentum[1] == doctest::Approx(py).epsilon(1e-13).scale(1.0));
}
