#include "lee/velocity_set.hpp"

#include <cmath>
#include <cstdio>

#include "lee/detail/exact_sets.hpp"
#include "lee/errors.hpp"

namespace lee {

bool VelocitySet::monoatomic() const {
  for (double b : beta)
    if (b != 0.0) return false;
  return true;
}

double VelocitySet::energy(int i) const { return 0.5 * (static_cast<double>(csqr(i)) + beta[static_cast<std::size_t>(i)]); }

VelocitySet build_d1q3() { return detail::to_double(detail::exact_d1q3()); }
VelocitySet build_d2q5_mono() { return detail::to_double(detail::exact_d2q5_mono()); }
VelocitySet build_d2q5_diatomic() { return detail::to_double(detail::exact_d2q5_diatomic()); }

VelocitySet build_d3q_family(double rho0, double theta0, double alpha) {
  const double w_center = 0.5 * rho0 * theta0 * (15.0 * theta0 - 9.0) + rho0 - 8.0 * alpha;
  const double w_axis = 0.5 * rho0 * theta0 * (2.0 - 5.0 * theta0) + 4.0 * alpha;
  const double w_face = 0.125 * rho0 * theta0 * (5.0 * theta0 - 1.0) - 2.0 * alpha;
  const double w_corner = alpha;

  const char* class_names[4] = {"center", "axis", "face", "corner"};
  const double w[4] = {w_center, w_axis, w_face, w_corner};
  for (int k = 0; k < 4; ++k) {
    if (w[k] < -1e-15) {
      char msg[128];
      std::snprintf(msg, sizeof msg, "d3q family: negative %s weight %.17g", class_names[k], w[k]);
      throw NegativeWeight(msg);
    }
  }

  VelocitySet s;
  s.dimension = 3;
  s.rho0 = rho0;
  s.theta0 = theta0;
  s.gamma = 5.0 / 3.0;
  s.coeffs = {1.0 / rho0, -1.5 / theta0, 1.0 / theta0, 0.0, 1.0 / (theta0 * theta0)};
  for (const auto& ci : detail::d3_family_velocities()) {
    const int csqr = ci[0] * ci[0] + ci[1] * ci[1] + ci[2] * ci[2];
    const double wi = w[csqr];
    if (std::abs(wi) <= 1e-15) continue;  // prune empty classes, keep anything genuinely positive
    s.c.push_back(ci);
    s.f.push_back(wi);
    s.beta.push_back(0.0);
  }
  s.name = "d3q" + std::to_string(s.c.size());
  return s;
}

VelocitySet build_d3q7_diatomic(double f1) {
  if (!(f1 > 0.0)) throw NonPositiveF1("d3q7 diatomic: axis weight f1 must be positive");
  VelocitySet s;
  s.name = "d3q7-diatomic";
  s.dimension = 3;
  s.c = {{{0, 0, 0}}, {{-1, 0, 0}}, {{1, 0, 0}}, {{0, -1, 0}}, {{0, 1, 0}}, {{0, 0, -1}}, {{0, 0, 1}}};
  s.f = {2.4 * f1, f1, f1, f1, f1, f1, f1};
  s.beta = {0.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};
  s.rho0 = 8.4 * f1;
  s.theta0 = 5.0 / 21.0;
  s.gamma = 1.4;
  s.coeffs = {1.0 / s.rho0, -10.5, 4.2, 0.0, 29.4};
  return s;
}

VelocitySet make_set(const std::string& name) {
  using detail::to_double;
  if (name == "d1q3") return build_d1q3();
  if (name == "d2q5") return build_d2q5_mono();
  if (name == "d2q5-diatomic") return build_d2q5_diatomic();
  if (name == "d3q7") return to_double(detail::exact_d3q_family(Rational(1), Rational(1, 5), Rational(0)));
  if (name == "d3q9") return to_double(detail::exact_d3q_family(Rational(1), Rational(3, 5), Rational(3, 40)));
  if (name == "d3q13") return to_double(detail::exact_d3q_family(Rational(1), Rational(2, 5), Rational(0)));
  if (name == "d3q19") return to_double(detail::exact_d3q_family(Rational(1), Rational(3, 10), Rational(0)));
  if (name == "d3q7-diatomic") return to_double(detail::exact_d3q7_diatomic(Rational(5, 42)));
  throw UnknownLattice("unknown lattice '" + name + "'");
}

std::vector<std::string> builtin_set_names() {
  return {"d1q3", "d2q5", "d2q5-diatomic", "d3q7", "d3q9", "d3q13", "d3q19", "d3q7-diatomic"};
}

namespace {

const char* axis_name(int a) {
  static const char* n[3] = {"x", "y", "z"};
  return n[a];
}

void add_check(CompatibilityReport& rep, std::string cond, double discrete, double target, double tol) {
  MomentCheck chk;
  chk.condition = std::move(cond);
  chk.discrete = discrete;
  chk.target = target;
  chk.defect = std::abs(discrete - target);
  chk.pass = chk.defect <= tol;
  rep.checks.push_back(std::move(chk));
}

}  // namespace

CompatibilityReport check_moment_compatibility(const VelocitySet& set, double tol) {
  if (!set.monoatomic())
    throw Error("check_moment_compatibility: '" + set.name +
                "' carries internal energy; use verify_polyatomic_constraints instead");

  const int D = set.dimension;
  const int n = set.size();
  const double r = set.rho0;
  const double t = set.theta0;

  CompatibilityReport rep;
  rep.set_name = set.name;

  double m0 = 0, m2 = 0, m4 = 0;
  for (int i = 0; i < n; ++i) {
    const double fi = set.f[static_cast<std::size_t>(i)];
    const double cs = static_cast<double>(set.csqr(i));
    m0 += fi;
    m2 += 0.5 * cs * fi;
    m4 += 0.25 * cs * cs * fi;
  }
  add_check(rep, "1", m0, r, tol);
  add_check(rep, "|v|^2/2", m2, 0.5 * D * r * t, tol);

  for (int a = 0; a < D; ++a) {
    for (int b = a; b < D; ++b) {
      double pab = 0, qab = 0;
      for (int i = 0; i < n; ++i) {
        const double fi = set.f[static_cast<std::size_t>(i)];
        const auto& ci = set.c[static_cast<std::size_t>(i)];
        const double cab = static_cast<double>(ci[a] * ci[b]);
        pab += cab * fi;
        qab += 0.5 * static_cast<double>(set.csqr(i)) * cab * fi;
      }
      const double delta = (a == b) ? 1.0 : 0.0;
      add_check(rep, std::string("v_") + axis_name(a) + "*v_" + axis_name(b), pab, r * t * delta, tol);
      add_check(rep, std::string("|v|^2/2*v_") + axis_name(a) + "*v_" + axis_name(b), qab,
                0.5 * (D + 2) * r * t * t * delta, tol);
    }
  }
  add_check(rep, "|v|^4/4", m4, 0.25 * D * (D + 2) * r * t * t, tol);

  rep.max_defect = 0;
  rep.pass = true;
  for (const auto& chk : rep.checks) {
    rep.max_defect = std::max(rep.max_defect, chk.defect);
    rep.pass = rep.pass && chk.pass;
  }
  return rep;
}

}  // namespace lee
