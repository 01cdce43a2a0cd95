#include <doctest.h>

#include <cmath>
#include <map>

#include "lee/detail/exact_sets.hpp"
#include "lee/errors.hpp"
#include "lee/velocity_set.hpp"
#include "oracles.hpp"

using lee::Rational;
using lee::VelocitySet;

TEST_CASE("d1q3 background values") {
  const auto s = lee::build_d1q3();
  REQUIRE(s.size() == 3);
  CHECK(s.dimension == 1);
  CHECK(s.c[0] == std::array<int, 3>{0, 0, 0});
  CHECK(s.c[1] == std::array<int, 3>{-1, 0, 0});
  CHECK(s.c[2] == std::array<int, 3>{1, 0, 0});
  CHECK(s.f[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(s.f[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(s.f[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(s.rho0 == 1.0);
  CHECK(s.theta0 == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK(s.gamma == 3.0);
  CHECK(s.monoatomic());
  // second moment sum c^2 f = rho0 theta0 = 1/3
  const int p[3] = {2, 0, 0};
  CHECK(oracle::discrete_moment(s, p) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("d2q5 background values") {
  const auto s = lee::build_d2q5_mono();
  REQUIRE(s.size() == 5);
  CHECK(s.f[0] == doctest::Approx(0.5).epsilon(1e-15));
  for (int i = 1; i < 5; ++i) CHECK(s.f[static_cast<std::size_t>(i)] == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(s.theta0 == 0.25);
  CHECK(s.gamma == 2.0);
  CHECK(s.coeffs.a1 == 1.0);
  CHECK(s.coeffs.a2 == -4.0);
  CHECK(s.coeffs.b == 4.0);
  CHECK(s.coeffs.c1 == 0.0);
  CHECK(s.coeffs.c2 == 16.0);
  // energy square sum (|c|^2/2)^2 f = D(D+2)/4 rho0 theta0^2 = 1/8
  const int px[3] = {4, 0, 0};
  const int pxy[3] = {2, 2, 0};
  const int py[3] = {0, 4, 0};
  const double q4 = 0.25 * (oracle::discrete_moment(s, px) + 2 * oracle::discrete_moment(s, pxy) +
                            oracle::discrete_moment(s, py));
  CHECK(q4 == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("d2q5-diatomic carries internal energy") {
  const auto s = lee::build_d2q5_diatomic();
  REQUIRE(s.size() == 5);
  CHECK(s.rho0 == doctest::Approx(20.0 / 3.0).epsilon(1e-15));
  CHECK(s.theta0 == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(s.gamma == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(s.f[0] == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK(s.beta[0] == 0.0);
  for (int i = 1; i < 5; ++i) {
    CHECK(s.f[static_cast<std::size_t>(i)] == 1.0);
    CHECK(s.beta[static_cast<std::size_t>(i)] == 0.5);
    CHECK(s.energy(i) == doctest::Approx(0.75).epsilon(1e-15));
  }
  CHECK_FALSE(s.monoatomic());
  CHECK(s.coeffs.a1 == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(s.coeffs.a2 == doctest::Approx(-5.0).epsilon(1e-15));
  CHECK(s.coeffs.b == doctest::Approx(10.0 / 3.0).epsilon(1e-15));
  CHECK(s.coeffs.c2 == doctest::Approx(50.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("d3q19 class weights") {
  const auto s = lee::make_set("d3q19");
  REQUIRE(s.size() == 19);
  CHECK(s.theta0 == doctest::Approx(0.3).epsilon(1e-15));
  std::map<int, int> by_class;
  for (int i = 0; i < s.size(); ++i) {
    ++by_class[s.csqr(i)];
    const double expect = s.csqr(i) == 0 ? 13.0 / 40.0 : (s.csqr(i) == 1 ? 3.0 / 40.0 : 3.0 / 160.0);
    CHECK(s.f[static_cast<std::size_t>(i)] == doctest::Approx(expect).epsilon(1e-15));
  }
  CHECK(by_class[0] == 1);
  CHECK(by_class[1] == 6);
  CHECK(by_class[2] == 12);
}

TEST_CASE("3D family presets prune vanished classes") {
  struct Row {
    const char* name;
    int count;
    double center;
  };
  const Row rows[] = {{"d3q7", 7, 0.4}, {"d3q9", 9, 0.4}, {"d3q13", 13, 0.4}, {"d3q19", 19, 0.325}};
  for (const auto& r : rows) {
    const auto s = lee::make_set(r.name);
    CHECK(s.size() == r.count);
    CHECK(s.name == r.name);
    CHECK(s.f[0] == doctest::Approx(r.center).epsilon(1e-15));
    for (double w : s.f) CHECK(w > 1e-15);
  }
  CHECK(lee::make_set("d3q7").theta0 == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(lee::make_set("d3q9").theta0 == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(lee::make_set("d3q13").theta0 == doctest::Approx(0.4).epsilon(1e-15));
  // d3q13 keeps only center + face diagonals
  const auto q13 = lee::make_set("d3q13");
  for (int i = 1; i < q13.size(); ++i) {
    CHECK(q13.csqr(i) == 2);
    CHECK(q13.f[static_cast<std::size_t>(i)] == doctest::Approx(0.05).epsilon(1e-15));
  }
}

TEST_CASE("family construction at generic parameters") {
  const auto s = lee::build_d3q_family(2.0, 0.35, 0.01);
  CHECK(s.size() == 27);
  double mass = 0;
  for (double w : s.f) {
    CHECK(w > 0);
    mass += w;
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
  // tiny corner weight is treated as a vanished class
  const auto pruned = lee::build_d3q_family(1.0, 0.3, 1e-20);
  CHECK(pruned.size() == 19);
}

TEST_CASE("family rejects negative class weights") {
  CHECK_THROWS_AS(lee::build_d3q_family(1.0, 0.05, 0.01), lee::NegativeWeight);
  CHECK_THROWS_AS(lee::build_d3q_family(1.0, 0.9, 0.0), lee::NegativeWeight);
  CHECK_THROWS_AS(lee::detail::exact_d3q_family(Rational(1), Rational(1, 20), Rational(1, 100)),
                  lee::NegativeWeight);
}

TEST_CASE("d3q7-diatomic parametrized by the axis weight") {
  const auto s = lee::build_d3q7_diatomic(5.0 / 42.0);
  REQUIRE(s.size() == 7);
  CHECK(s.rho0 == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(s.theta0 == doctest::Approx(5.0 / 21.0).epsilon(1e-15));
  CHECK(s.gamma == doctest::Approx(1.4).epsilon(1e-15));
  CHECK(s.f[0] == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  CHECK(s.beta[0] == 0.0);
  for (int i = 1; i < 7; ++i) {
    CHECK(s.f[static_cast<std::size_t>(i)] == doctest::Approx(5.0 / 42.0).epsilon(1e-15));
    CHECK(s.beta[static_cast<std::size_t>(i)] == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(lee::build_d3q7_diatomic(0.0), lee::NonPositiveF1);
  CHECK_THROWS_AS(lee::build_d3q7_diatomic(-0.1), lee::NonPositiveF1);
}

TEST_CASE("registry knows every built-in set") {
  const auto names = lee::builtin_set_names();
  REQUIRE(names.size() == 8);
  for (const auto& n : names) {
    const auto s = lee::make_set(n);
    CHECK(s.name == n);
    CHECK(s.size() > 0);
  }
  CHECK_THROWS_AS(lee::make_set("d9q99"), lee::UnknownLattice);
  CHECK_THROWS_AS(lee::make_set(""), lee::UnknownLattice);
}

TEST_CASE("shared background invariants") {
  for (const auto& n : lee::builtin_set_names()) {
    const auto s = lee::make_set(n);
    CAPTURE(n);
    double mass = 0, energy = 0;
    for (int i = 0; i < s.size(); ++i) {
      CHECK(s.f[static_cast<std::size_t>(i)] > 0);
      mass += s.f[static_cast<std::size_t>(i)];
      energy += s.energy(i) * s.f[static_cast<std::size_t>(i)];
    }
    CHECK(mass == doctest::Approx(s.rho0).epsilon(1e-14));
    // background energy rho0 theta0 / (gamma - 1) for every gas
    CHECK(energy == doctest::Approx(s.rho0 * s.theta0 / (s.gamma - 1.0)).epsilon(1e-14));
    // velocities come in +-c pairs with identical weight and beta
    for (int i = 0; i < s.size(); ++i) {
      const std::array<int, 3> neg = {-s.c[static_cast<std::size_t>(i)][0], -s.c[static_cast<std::size_t>(i)][1],
                                      -s.c[static_cast<std::size_t>(i)][2]};
      bool found = false;
      for (int j = 0; j < s.size(); ++j) {
        if (s.c[static_cast<std::size_t>(j)] == neg) {
          found = true;
          CHECK(s.f[static_cast<std::size_t>(j)] == s.f[static_cast<std::size_t>(i)]);
          CHECK(s.beta[static_cast<std::size_t>(j)] == s.beta[static_cast<std::size_t>(i)]);
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("exact rational identities") {
  using lee::detail::ExactSet;
  const Rational kZero(0);
  const ExactSet sets[] = {
      lee::detail::exact_d1q3(),
      lee::detail::exact_d2q5_mono(),
      lee::detail::exact_d2q5_diatomic(),
      lee::detail::exact_d3q_family(Rational(1), Rational(1, 5), kZero),
      lee::detail::exact_d3q_family(Rational(1), Rational(3, 5), Rational(3, 40)),
      lee::detail::exact_d3q_family(Rational(1), Rational(2, 5), kZero),
      lee::detail::exact_d3q_family(Rational(1), Rational(3, 10), kZero),
      lee::detail::exact_d3q7_diatomic(Rational(5, 42)),
  };
  for (const auto& e : sets) {
    CAPTURE(e.name);
    Rational mass(0), energy2(0);  // energy2 = 2 * energy to stay integral
    for (std::size_t i = 0; i < e.f.size(); ++i) {
      const auto& c = e.c[i];
      const Rational csq(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
      mass = mass + e.f[i];
      energy2 = energy2 + (csq + e.beta[i]) * e.f[i];
    }
    CHECK(mass == e.rho0);
    CHECK(energy2 == Rational(2) * e.rho0 * e.theta0 / (e.gamma - Rational(1)));
    // pressure tensor: sum c_a c_b f = rho0 theta0 delta_ab, exactly
    for (int a = 0; a < 3; ++a) {
      for (int b = a; b < 3; ++b) {
        Rational sum(0);
        for (std::size_t i = 0; i < e.f.size(); ++i) sum = sum + Rational(e.c[i][a] * e.c[i][b]) * e.f[i];
        const Rational want = (a == b && a < e.dimension) ? e.rho0 * e.theta0 : Rational(0);
        CHECK(sum == want);
      }
    }
  }
}

TEST_CASE("exact monoatomic fourth moments") {
  using lee::detail::ExactSet;
  const ExactSet sets[] = {
      lee::detail::exact_d1q3(),
      lee::detail::exact_d2q5_mono(),
      lee::detail::exact_d3q_family(Rational(1), Rational(1, 5), Rational(0)),
      lee::detail::exact_d3q_family(Rational(1), Rational(3, 5), Rational(3, 40)),
      lee::detail::exact_d3q_family(Rational(1), Rational(2, 5), Rational(0)),
      lee::detail::exact_d3q_family(Rational(1), Rational(3, 10), Rational(0)),
  };
  for (const auto& e : sets) {
    CAPTURE(e.name);
    const Rational D(e.dimension);
    // energy flux tensor: sum |c|^2/2 c_a c_b f = (D+2)/2 rho0 theta0^2 delta_ab
    for (int a = 0; a < e.dimension; ++a) {
      for (int b = a; b < e.dimension; ++b) {
        Rational sum(0);
        for (std::size_t i = 0; i < e.f.size(); ++i) {
          const auto& c = e.c[i];
          const Rational csq(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
          sum = sum + csq * Rational(c[a] * c[b]) * e.f[i] / Rational(2);
        }
        const Rational want =
            a == b ? (D + Rational(2)) / Rational(2) * e.rho0 * e.theta0 * e.theta0 : Rational(0);
        CHECK(sum == want);
      }
    }
    // energy square: sum (|c|^2/2)^2 f = D(D+2)/4 rho0 theta0^2
    Rational sq(0);
    for (std::size_t i = 0; i < e.f.size(); ++i) {
      const auto& c = e.c[i];
      const Rational csq(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
      sq = sq + csq * csq * e.f[i] / Rational(4);
    }
    CHECK(sq == D * (D + Rational(2)) / Rational(4) * e.rho0 * e.theta0 * e.theta0);
  }
}

TEST_CASE("monoatomic equilibrium coefficients follow the closed form") {
  const char* mono[] = {"d1q3", "d2q5", "d3q7", "d3q9", "d3q13", "d3q19"};
  for (const char* n : mono) {
    const auto s = lee::make_set(n);
    CAPTURE(n);
    const double D = s.dimension;
    CHECK(s.coeffs.a1 == doctest::Approx(1.0 / s.rho0).epsilon(1e-15));
    CHECK(s.coeffs.a2 == doctest::Approx(-D / (2.0 * s.theta0)).epsilon(1e-15));
    CHECK(s.coeffs.b == doctest::Approx(1.0 / s.theta0).epsilon(1e-15));
    CHECK(s.coeffs.c1 == 0.0);
    CHECK(s.coeffs.c2 == doctest::Approx(1.0 / (s.theta0 * s.theta0)).epsilon(1e-15));
    CHECK(s.gamma == doctest::Approx((D + 2.0) / D).epsilon(1e-15));
  }
}

TEST_CASE("moment compatibility against maxwellian quadrature") {
  const char* mono[] = {"d1q3", "d2q5", "d3q7", "d3q9", "d3q13", "d3q19"};
  for (const char* n : mono) {
    const auto s = lee::make_set(n);
    CAPTURE(n);
    const auto rep = lee::check_moment_compatibility(s);
    CHECK(rep.pass);
    CHECK(rep.max_defect <= 1e-12);

    // cross-check the discrete sums against quadrature of the continuum
    // Maxwellian rather than the closed-form targets
    const int D = s.dimension;
    int p[3] = {0, 0, 0};
    CHECK(oracle::discrete_moment(s, p) ==
          doctest::Approx(oracle::maxwellian_moment(s.rho0, s.theta0, p, D)).epsilon(1e-13));
    for (int a = 0; a < D; ++a) {
      for (int b = 0; b < D; ++b) {
        int q[3] = {0, 0, 0};
        q[a] += 1;
        q[b] += 1;
        const double want = oracle::maxwellian_moment(s.rho0, s.theta0, q, D);
        CHECK(oracle::discrete_moment(s, q) == doctest::Approx(want).epsilon(1e-13).scale(1.0));
        // |v|^2 v_a v_b needs the summed quadrature over components
        double cont = 0;
        for (int m = 0; m < D; ++m) {
          int t[3] = {0, 0, 0};
          t[m] += 2;
          t[a] += 1;
          t[b] += 1;
          cont += oracle::maxwellian_moment(s.rho0, s.theta0, t, D);
        }
        int td[3] = {0, 0, 0};
        td[a] += 1;
        td[b] += 1;
        double disc = 0;
        for (int i = 0; i < s.size(); ++i) {
          double term = s.f[static_cast<std::size_t>(i)] * s.csqr(i);
          for (int ax = 0; ax < 3; ++ax)
            for (int k = 0; k < td[ax]; ++k) term *= s.c[static_cast<std::size_t>(i)][ax];
          disc += term;
        }
        CHECK(disc == doctest::Approx(cont).epsilon(1e-12).scale(1.0));
      }
    }
  }
  CHECK_THROWS_AS(lee::check_moment_compatibility(lee::build_d2q5_diatomic()), lee::Error);
}

TEST_CASE("perturbed weights break moment compatibility") {
  auto s = lee::make_set("d3q19");
  s.f[1] += 1e-3;
  const auto rep = lee::check_moment_compatibility(s);
  CHECK_FALSE(rep.pass);
  CHECK(rep.max_defect > 1e-4);
}

TEST_CASE("quadrature oracle reproduces gaussian moments") {
  for (double theta0 : {1.0 / 3.0, 0.25, 0.3}) {
    CHECK(oracle::gaussian_moment(theta0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(oracle::gaussian_moment(theta0, 1) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(oracle::gaussian_moment(theta0, 2) == doctest::Approx(theta0).epsilon(1e-14));
    CHECK(oracle::gaussian_moment(theta0, 4) == doctest::Approx(3 * theta0 * theta0).epsilon(1e-14));
    CHECK(oracle::gaussian_moment(theta0, 6) == doctest::Approx(15 * theta0 * theta0 * theta0).epsilon(1e-14));
  }
}
