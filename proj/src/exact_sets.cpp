#include "lee/detail/exact_sets.hpp"

#include "lee/errors.hpp"

namespace lee::detail {

namespace {

const Rational kZero(0);

std::vector<Rational> repeat(Rational v, int n) { return std::vector<Rational>(static_cast<std::size_t>(n), v); }

}  // namespace

ExactSet exact_d1q3() {
  ExactSet s;
  s.name = "d1q3";
  s.dimension = 1;
  s.c = {{{0, 0, 0}}, {{-1, 0, 0}}, {{1, 0, 0}}};
  s.f = {Rational(2, 3), Rational(1, 6), Rational(1, 6)};
  s.beta = repeat(kZero, 3);
  s.rho0 = Rational(1);
  s.theta0 = Rational(1, 3);
  s.gamma = Rational(3);
  s.coeffs = {Rational(1), Rational(-3, 2), Rational(3), kZero, Rational(9)};
  return s;
}

ExactSet exact_d2q5_mono() {
  ExactSet s;
  s.name = "d2q5";
  s.dimension = 2;
  s.c = {{{0, 0, 0}}, {{-1, 0, 0}}, {{1, 0, 0}}, {{0, -1, 0}}, {{0, 1, 0}}};
  s.f = {Rational(1, 2), Rational(1, 8), Rational(1, 8), Rational(1, 8), Rational(1, 8)};
  s.beta = repeat(kZero, 5);
  s.rho0 = Rational(1);
  s.theta0 = Rational(1, 4);
  s.gamma = Rational(2);
  s.coeffs = {Rational(1), Rational(-4), Rational(4), kZero, Rational(16)};
  return s;
}

ExactSet exact_d2q5_diatomic() {
  ExactSet s;
  s.name = "d2q5-diatomic";
  s.dimension = 2;
  s.c = {{{0, 0, 0}}, {{-1, 0, 0}}, {{1, 0, 0}}, {{0, -1, 0}}, {{0, 1, 0}}};
  s.f = {Rational(8, 3), Rational(1), Rational(1), Rational(1), Rational(1)};
  s.beta = {kZero, Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2)};
  s.rho0 = Rational(20, 3);
  s.theta0 = Rational(3, 10);
  s.gamma = Rational(5, 3);
  s.coeffs = {Rational(3, 20), Rational(-5), Rational(10, 3), kZero, Rational(50, 3)};
  return s;
}

const std::vector<std::array<int, 3>>& d3_family_velocities() {
  static const std::vector<std::array<int, 3>> v = {
      // rest
      {{0, 0, 0}},
      // axis
      {{-1, 0, 0}},
      {{1, 0, 0}},
      {{0, -1, 0}},
      {{0, 1, 0}},
      {{0, 0, -1}},
      {{0, 0, 1}},
      // face diagonals
      {{-1, -1, 0}},
      {{1, 1, 0}},
      {{-1, 1, 0}},
      {{1, -1, 0}},
      {{-1, 0, -1}},
      {{1, 0, 1}},
      {{-1, 0, 1}},
      {{1, 0, -1}},
      {{0, -1, -1}},
      {{0, 1, 1}},
      {{0, -1, 1}},
      {{0, 1, -1}},
      // corners
      {{-1, -1, -1}},
      {{1, 1, 1}},
      {{-1, -1, 1}},
      {{1, 1, -1}},
      {{-1, 1, -1}},
      {{1, -1, 1}},
      {{-1, 1, 1}},
      {{1, -1, -1}},
  };
  return v;
}

ExactSet exact_d3q_family(Rational rho0, Rational theta0, Rational alpha) {
  // Class weights of the cubic family: center, axis, face diagonal, corner.
  const Rational w_center = rho0 * theta0 * (theta0 * Rational(15) - Rational(9)) / Rational(2) + rho0 - Rational(8) * alpha;
  const Rational w_axis = rho0 * theta0 * (Rational(2) - theta0 * Rational(5)) / Rational(2) + Rational(4) * alpha;
  const Rational w_face = rho0 * theta0 * (theta0 * Rational(5) - Rational(1)) / Rational(8) - Rational(2) * alpha;
  const Rational w_corner = alpha;

  const char* class_names[4] = {"center", "axis", "face", "corner"};
  const Rational w[4] = {w_center, w_axis, w_face, w_corner};
  for (int k = 0; k < 4; ++k) {
    if (w[k] < kZero) throw NegativeWeight(std::string("d3q family: negative ") + class_names[k] + " weight");
  }

  ExactSet s;
  s.dimension = 3;
  s.rho0 = rho0;
  s.theta0 = theta0;
  s.gamma = Rational(5, 3);
  s.coeffs = {Rational(1) / rho0, Rational(-3) / (Rational(2) * theta0), Rational(1) / theta0, kZero,
              Rational(1) / (theta0 * theta0)};
  for (const auto& ci : d3_family_velocities()) {
    const int csqr = ci[0] * ci[0] + ci[1] * ci[1] + ci[2] * ci[2];
    const Rational wi = w[csqr];  // |c|^2 in {0,1,2,3} indexes the class
    if (wi == kZero) continue;
    s.c.push_back(ci);
    s.f.push_back(wi);
    s.beta.push_back(kZero);
  }
  s.name = "d3q" + std::to_string(s.c.size());
  return s;
}

ExactSet exact_d3q7_diatomic(Rational f1) {
  if (f1 <= kZero) throw NonPositiveF1("d3q7 diatomic: axis weight f1 must be positive");
  ExactSet s;
  s.name = "d3q7-diatomic";
  s.dimension = 3;
  s.c = {{{0, 0, 0}}, {{-1, 0, 0}}, {{1, 0, 0}}, {{0, -1, 0}}, {{0, 1, 0}}, {{0, 0, -1}}, {{0, 0, 1}}};
  s.f = {Rational(12, 5) * f1, f1, f1, f1, f1, f1, f1};
  s.beta = {kZero,           Rational(2, 3), Rational(2, 3), Rational(2, 3),
            Rational(2, 3),  Rational(2, 3), Rational(2, 3)};
  s.rho0 = Rational(42, 5) * f1;
  s.theta0 = Rational(5, 21);
  s.gamma = Rational(7, 5);
  s.coeffs = {Rational(1) / s.rho0, Rational(-21, 2), Rational(21, 5), kZero, Rational(147, 5)};
  return s;
}

VelocitySet to_double(const ExactSet& e) {
  VelocitySet s;
  s.name = e.name;
  s.dimension = e.dimension;
  s.c = e.c;
  s.f.reserve(e.f.size());
  for (const auto& w : e.f) s.f.push_back(w.to_double());
  s.beta.reserve(e.beta.size());
  for (const auto& b : e.beta) s.beta.push_back(b.to_double());
  s.rho0 = e.rho0.to_double();
  s.theta0 = e.theta0.to_double();
  s.gamma = e.gamma.to_double();
  s.coeffs = {e.coeffs.a1.to_double(), e.coeffs.a2.to_double(), e.coeffs.b.to_double(), e.coeffs.c1.to_double(),
              e.coeffs.c2.to_double()};
  return s;
}

}  // namespace lee::detail
