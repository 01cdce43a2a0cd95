#include "lee/reference.hpp"

#include <cmath>
#include <complex>

#include "lee/errors.hpp"

namespace lee {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

CharacteristicSystem characteristics(double rho0, double theta0, double gamma, int dimension,
                                     const std::array<double, 3>& direction) {
  if (dimension < 1 || dimension > 3) throw ShapeMismatch("characteristics: dimension must be 1, 2 or 3");
  if (!(rho0 > 0) || !(theta0 > 0) || !(gamma > 1))
    throw Error("characteristics: need rho0 > 0, theta0 > 0, gamma > 1");
  const int D = dimension;
  double nrm = 0;
  for (int a = 0; a < D; ++a) nrm += direction[static_cast<std::size_t>(a)] * direction[static_cast<std::size_t>(a)];
  if (std::abs(std::sqrt(nrm) - 1.0) > 1e-9) throw Error("characteristics: direction must be a unit vector");

  CharacteristicSystem cs;
  cs.dimension = D;
  const double c = std::sqrt(gamma * theta0);
  cs.sound_speed = c;
  const int m = D + 2;
  cs.speeds.assign(static_cast<std::size_t>(m), 0.0);
  cs.speeds[static_cast<std::size_t>(m - 2)] = -c;
  cs.speeds[static_cast<std::size_t>(m - 1)] = c;

  // Tangent frame for the shear modes.
  std::array<std::array<double, 3>, 2> tang{};
  if (D == 2) {
    tang[0] = {-direction[1], direction[0], 0.0};
  } else if (D == 3) {
    // pick the coordinate axis least aligned with the direction
    int least = 0;
    for (int a = 1; a < 3; ++a)
      if (std::abs(direction[static_cast<std::size_t>(a)]) < std::abs(direction[static_cast<std::size_t>(least)]))
        least = a;
    std::array<double, 3> e = {0, 0, 0};
    e[static_cast<std::size_t>(least)] = 1.0;
    // t0 = normalize(e - (e.n) n), t1 = n x t0
    double en = 0;
    for (int a = 0; a < 3; ++a) en += e[static_cast<std::size_t>(a)] * direction[static_cast<std::size_t>(a)];
    double t0n = 0;
    for (int a = 0; a < 3; ++a) {
      tang[0][static_cast<std::size_t>(a)] = e[static_cast<std::size_t>(a)] - en * direction[static_cast<std::size_t>(a)];
      t0n += tang[0][static_cast<std::size_t>(a)] * tang[0][static_cast<std::size_t>(a)];
    }
    t0n = std::sqrt(t0n);
    for (auto& v : tang[0]) v /= t0n;
    tang[1] = {direction[1] * tang[0][2] - direction[2] * tang[0][1],
               direction[2] * tang[0][0] - direction[0] * tang[0][2],
               direction[0] * tang[0][1] - direction[1] * tang[0][0]};
  }

  // Right eigenvectors by column: entropy (rho0, 0, -theta0) carries zero
  // pressure fluctuation, shear modes are tangential velocities, acoustic
  // modes (rho0, +-c n, (gamma-1) theta0).
  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(m, m);
  R(0, 0) = rho0;
  R(m - 1, 0) = -theta0;
  for (int k = 0; k < D - 1; ++k)
    for (int a = 0; a < D; ++a) R(1 + a, 1 + k) = tang[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)];
  for (int sgn = 0; sgn < 2; ++sgn) {
    const int col = m - 2 + sgn;
    const double s = sgn == 0 ? -c : c;
    R(0, col) = rho0;
    for (int a = 0; a < D; ++a) R(1 + a, col) = s * direction[static_cast<std::size_t>(a)];
    R(m - 1, col) = (gamma - 1.0) * theta0;
  }
  cs.right = R;
  cs.left = R.partialPivLu().inverse();
  return cs;
}

namespace {

// Periodic shift of samples by a possibly fractional number of sites: values
// move delta sites to the right.  Integer shifts (within 1e-9) are exact
// index rotations; anything else goes through the trigonometric interpolant.
std::vector<double> circular_shift(const std::vector<double>& w, double delta) {
  const std::size_t n = w.size();
  const double rounded = std::round(delta);
  std::vector<double> out(n);
  if (std::abs(delta - rounded) < 1e-9) {
    const long long shift = static_cast<long long>(rounded);
    for (std::size_t j = 0; j < n; ++j) {
      long long src = (static_cast<long long>(j) - shift) % static_cast<long long>(n);
      if (src < 0) src += static_cast<long long>(n);
      out[j] = w[static_cast<std::size_t>(src)];
    }
    return out;
  }

  // real DFT, evaluated at the shifted points
  const std::size_t half = n / 2;
  std::vector<std::complex<double>> spectrum(half + 1, 0.0);
  for (std::size_t m = 0; m <= half; ++m) {
    std::complex<double> acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const double ph = -2.0 * kPi * static_cast<double>(m) * static_cast<double>(j) / static_cast<double>(n);
      acc += w[j] * std::complex<double>(std::cos(ph), std::sin(ph));
    }
    spectrum[m] = acc;
  }
  const bool even = (n % 2 == 0);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = static_cast<double>(j) - delta;
    double acc = spectrum[0].real();
    for (std::size_t m = 1; m <= half; ++m) {
      const double ph = 2.0 * kPi * static_cast<double>(m) * x / static_cast<double>(n);
      const std::complex<double> e(std::cos(ph), std::sin(ph));
      if (even && m == half) {
        acc += (spectrum[m] * e).real();  // Nyquist mode kept real-symmetric
      } else {
        acc += 2.0 * (spectrum[m] * e).real();
      }
    }
    out[j] = acc / static_cast<double>(n);
  }
  return out;
}

}  // namespace

MacroField analytic_solution_1d(const MacroField& ic, double t, double rho0, double theta0, double gamma) {
  if (ic.grid.dimension != 1) throw ShapeMismatch("analytic_solution_1d: initial condition must be 1D");
  const std::size_t n = ic.grid.sites();
  if (ic.rho.size() != n || ic.u.size() != n || ic.theta.size() != n)
    throw ShapeMismatch("analytic_solution_1d: field arrays have wrong length");

  const CharacteristicSystem cs = characteristics(rho0, theta0, gamma, 1, {1.0, 0.0, 0.0});
  const int m = 3;

  // characteristic fields w_k(x) = sum_v L(k,v) q_v(x)
  std::vector<std::vector<double>> w(m, std::vector<double>(n));
  for (int k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < n; ++j)
      w[static_cast<std::size_t>(k)][j] =
          cs.left(k, 0) * ic.rho[j] + cs.left(k, 1) * ic.u[j] + cs.left(k, 2) * ic.theta[j];
  }
  for (int k = 0; k < m; ++k) {
    const double delta = cs.speeds[static_cast<std::size_t>(k)] * t / ic.grid.eps;
    if (delta != 0.0) w[static_cast<std::size_t>(k)] = circular_shift(w[static_cast<std::size_t>(k)], delta);
  }

  MacroField out = MacroField::zeros(ic.grid);
  for (std::size_t j = 0; j < n; ++j) {
    double q[3] = {0, 0, 0};
    for (int k = 0; k < m; ++k) {
      const double wk = w[static_cast<std::size_t>(k)][j];
      for (int v = 0; v < m; ++v) q[v] += cs.right(v, k) * wk;
    }
    out.rho[j] = q[0];
    out.u[j] = q[1];
    out.theta[j] = q[2];
  }
  return out;
}

MacroField gauss_pulse(int dimension, const Grid& grid, bool allow_custom_domain) {
  if (dimension != grid.dimension) throw ShapeMismatch("gauss_pulse: dimension does not match grid");
  grid.validate();

  const double want_len = dimension == 1 ? 1.0 : 2.0;
  if (!allow_custom_domain) {
    for (int a = 0; a < dimension; ++a) {
      const auto ia = static_cast<std::size_t>(a);
      if (std::abs(grid.origin[ia]) > 1e-12 || std::abs(grid.length[ia] - want_len) > 1e-12)
        throw DomainMismatch("gauss_pulse: grid domain is not the canonical one");
    }
  }

  const double width = dimension == 1 ? 100.0 : (dimension == 2 ? 7.0 : 15.0);
  const double center = dimension == 1 ? 0.5 : 1.0;

  MacroField f = MacroField::zeros(grid);
  std::size_t s = 0;
  for (int z = 0; z < grid.extent[2]; ++z)
    for (int y = 0; y < grid.extent[1]; ++y)
      for (int x = 0; x < grid.extent[0]; ++x, ++s) {
        const int ix[3] = {x, y, z};
        double r2 = 0;
        for (int a = 0; a < dimension; ++a) {
          const double d = grid.coord(a, ix[a]) - center;
          r2 += d * d;
        }
        f.rho[s] = std::exp(-width * r2);
      }
  return f;
}

void validate_units(const UnitSystem& us) {
  if (!(us.rho_ref > 0) || !(us.theta_ref > 0) || !(us.x_ref > 0) || !(us.t_ref > 0) || !(us.u_ref > 0))
    throw InconsistentUnits("units: reference scales must be positive");
  if (std::abs(us.u_ref - us.x_ref / us.t_ref) > 1e-12 * us.u_ref)
    throw InconsistentUnits("units: u_ref must equal x_ref / t_ref");
  if (std::abs(us.u_ref * us.u_ref - us.theta_ref) > 1e-12 * us.theta_ref)
    throw InconsistentUnits("units: u_ref^2 must equal theta_ref");
}

UnitSystem units_for(double rho_dim, double theta_dim, double rho0, double theta0, double x_ref) {
  if (!(rho_dim > 0) || !(theta_dim > 0) || !(rho0 > 0) || !(theta0 > 0) || !(x_ref > 0))
    throw InconsistentUnits("units_for: backgrounds and x_ref must be positive");
  UnitSystem us;
  us.rho_ref = rho_dim / rho0;
  us.theta_ref = theta_dim / theta0;
  us.u_ref = std::sqrt(us.theta_ref);
  us.x_ref = x_ref;
  us.t_ref = x_ref / us.u_ref;
  return us;
}

double to_nondim_time(const UnitSystem& us, double t_dim) {
  validate_units(us);
  return t_dim / us.t_ref;
}

double to_dim_time(const UnitSystem& us, double t_nondim) {
  validate_units(us);
  return t_nondim * us.t_ref;
}

MacroState to_nondim(const UnitSystem& us, const MacroState& dim) {
  validate_units(us);
  MacroState m;
  m.rho = dim.rho / us.rho_ref;
  for (int a = 0; a < 3; ++a) m.u[static_cast<std::size_t>(a)] = dim.u[static_cast<std::size_t>(a)] / us.u_ref;
  m.theta = dim.theta / us.theta_ref;
  return m;
}

MacroState to_dim(const UnitSystem& us, const MacroState& nondim) {
  validate_units(us);
  MacroState m;
  m.rho = nondim.rho * us.rho_ref;
  for (int a = 0; a < 3; ++a) m.u[static_cast<std::size_t>(a)] = nondim.u[static_cast<std::size_t>(a)] * us.u_ref;
  m.theta = nondim.theta * us.theta_ref;
  return m;
}

namespace {

MacroField scale_field(const UnitSystem& us, const MacroField& in, bool to_nondim_dir) {
  validate_units(us);
  const double xs = to_nondim_dir ? 1.0 / us.x_ref : us.x_ref;
  const double rs = to_nondim_dir ? 1.0 / us.rho_ref : us.rho_ref;
  const double uscale = to_nondim_dir ? 1.0 / us.u_ref : us.u_ref;
  const double ts = to_nondim_dir ? 1.0 / us.theta_ref : us.theta_ref;

  MacroField out = in;
  out.grid.eps = in.grid.eps * xs;
  for (int a = 0; a < in.grid.dimension; ++a) {
    out.grid.origin[static_cast<std::size_t>(a)] = in.grid.origin[static_cast<std::size_t>(a)] * xs;
    out.grid.length[static_cast<std::size_t>(a)] = in.grid.length[static_cast<std::size_t>(a)] * xs;
  }
  for (auto& v : out.rho) v *= rs;
  for (auto& v : out.u) v *= uscale;
  for (auto& v : out.theta) v *= ts;
  return out;
}

}  // namespace

MacroField to_nondim(const UnitSystem& us, const MacroField& dim) { return scale_field(us, dim, true); }
MacroField to_dim(const UnitSystem& us, const MacroField& nondim) { return scale_field(us, nondim, false); }

}  // namespace lee
