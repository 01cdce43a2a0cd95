#include "lee/stability.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <tuple>

#include "lee/errors.hpp"
#include "lee/kinetic.hpp"

namespace lee {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Eigen::MatrixXd equilibrium_projector(const VelocitySet& set) {
  const int n = set.size();
  Eigen::MatrixXd E(n, n);
  std::vector<double> g(static_cast<std::size_t>(n), 0.0);
  std::vector<double> col(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    g[static_cast<std::size_t>(j)] = 1.0;
    equilibrium_into(set, moments(set, g), col);
    g[static_cast<std::size_t>(j)] = 0.0;
    for (int i = 0; i < n; ++i) E(i, j) = col[static_cast<std::size_t>(i)];
  }
  return E;
}

CollisionMatrix build_collision_matrix(const VelocitySet& set, double tau) {
  if (tau == 0.0) throw ZeroTau("build_collision_matrix: tau must be nonzero");
  CollisionMatrix cm;
  cm.set_name = set.name;
  cm.dimension = set.dimension;
  cm.tau = tau;
  cm.c = set.c;
  const int n = set.size();
  const double om = 1.0 / tau;
  cm.H = (1.0 - om) * Eigen::MatrixXd::Identity(n, n) + om * equilibrium_projector(set);
  return cm;
}

Eigen::MatrixXcd build_amplification(const CollisionMatrix& cm, const std::array<double, 3>& keps) {
  for (int a = 0; a < cm.dimension; ++a) {
    if (std::abs(keps[static_cast<std::size_t>(a)]) > kPi + 1e-12)
      throw OutOfRangeWaveNumber("build_amplification: wave number outside [-pi, pi]");
  }
  const int n = static_cast<int>(cm.c.size());
  Eigen::MatrixXcd gamma(n, n);
  for (int m = 0; m < n; ++m) {
    const auto& cm_vel = cm.c[static_cast<std::size_t>(m)];
    const double phase = -(keps[0] * cm_vel[0] + keps[1] * cm_vel[1] + keps[2] * cm_vel[2]);
    const std::complex<double> d(std::cos(phase), std::sin(phase));
    for (int j = 0; j < n; ++j) gamma(m, j) = d * cm.H(m, j);
  }
  return gamma;
}

namespace {

StabilitySample analyze_sample(const CollisionMatrix& cm, const std::array<double, 3>& keps,
                               const ScanOptions& opt) {
  StabilitySample smp;
  smp.keps = keps;
  const Eigen::MatrixXcd gamma = build_amplification(cm, keps);
  const int n = static_cast<int>(gamma.rows());

  smp.unitary_defect =
      (gamma.adjoint() * gamma - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (smp.unitary_defect <= opt.unitary_tol) {
    // Unitary symbols are power bounded with constant one; nothing to solve.
    smp.unitary = true;
    smp.rho = 1.0;
    smp.kappa = 1.0;
    smp.min_singular = 1.0;
    return smp;
  }

  {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gamma);
    smp.min_singular = svd.singularValues()(n - 1);
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(gamma, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    smp.eigen_failed = true;
    smp.defective = true;
    smp.rho = std::numeric_limits<double>::quiet_NaN();
    smp.kappa = std::numeric_limits<double>::infinity();
    return smp;
  }

  const auto& vals = es.eigenvalues();
  smp.rho = 0;
  double cluster = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    smp.rho = std::max(smp.rho, std::abs(vals(i)));
    for (int j = i + 1; j < n; ++j) cluster = std::min(cluster, std::abs(vals(i) - vals(j)));
  }

  // Eigen returns unit-norm columns, so the SVD of V measures exactly the
  // basis conditioning that enters the Bauer-Fike perturbation bound.
  Eigen::JacobiSVD<Eigen::MatrixXcd> vsvd(es.eigenvectors());
  const double smax = vsvd.singularValues()(0);
  const double smin = vsvd.singularValues()(n - 1);
  smp.kappa = smin > 0 ? smax / smin : std::numeric_limits<double>::infinity();
  smp.defective = (!std::isfinite(smp.kappa)) || (cluster < opt.cluster_tol && smp.kappa > opt.kappa_defective);
  return smp;
}

}  // namespace

StabilityScan scan_stability(const VelocitySet& set, int resolution, double tau, const ScanOptions& opt) {
  if (resolution < 1) throw Error("scan_stability: resolution must be at least 1");
  const int D = set.dimension;
  const CollisionMatrix cm = build_collision_matrix(set, tau);

  std::vector<double> axis;
  if (resolution == 1) {
    axis = {0.0};
  } else {
    axis.reserve(static_cast<std::size_t>(resolution));
    for (int j = 0; j < resolution; ++j)
      axis.push_back(kPi * (2.0 * j / (resolution - 1) - 1.0));  // exact endpoints, exact 0 for odd counts
  }
  const bool has_origin = std::any_of(axis.begin(), axis.end(), [](double v) { return v == 0.0; });

  StabilityScan scan;
  scan.set_name = set.name;
  scan.tau = tau;
  scan.resolution = resolution;
  scan.dimension = D;
  scan.options = opt;

  std::array<int, 3> idx = {0, 0, 0};
  std::array<int, 3> lim = {1, 1, 1};
  for (int a = 0; a < D; ++a) lim[static_cast<std::size_t>(a)] = static_cast<int>(axis.size());
  const std::size_t total = static_cast<std::size_t>(lim[0]) * lim[1] * lim[2];
  scan.samples.reserve(total + 1);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::array<double, 3> k = {0, 0, 0};
    for (int a = 0; a < D; ++a) k[static_cast<std::size_t>(a)] = axis[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])];
    scan.samples.push_back(analyze_sample(cm, k, opt));
    for (int a = 0; a < 3; ++a) {
      if (++idx[static_cast<std::size_t>(a)] < lim[static_cast<std::size_t>(a)]) break;
      idx[static_cast<std::size_t>(a)] = 0;
    }
  }
  if (!has_origin) scan.samples.push_back(analyze_sample(cm, {0, 0, 0}, opt));

  scan.min_singular = std::numeric_limits<double>::infinity();
  for (const auto& smp : scan.samples) {
    scan.max_unitary_defect = std::max(scan.max_unitary_defect, smp.unitary_defect);
    if (std::isfinite(smp.rho)) scan.max_rho = std::max(scan.max_rho, smp.rho);
    if (std::isfinite(smp.kappa)) scan.max_kappa = std::max(scan.max_kappa, smp.kappa);
    scan.min_singular = std::min(scan.min_singular, smp.min_singular);
    scan.any_defective = scan.any_defective || smp.defective || smp.eigen_failed;
  }
  scan.cond_regular = scan.min_singular > opt.regularity_floor;
  scan.cond_spectral = scan.max_rho <= 1.0 + opt.spectral_tol;
  scan.cond_conditioning = !scan.any_defective && scan.max_kappa <= opt.kappa_cap;

  if (!scan.cond_spectral)
    scan.verdict = "unstable";
  else if (scan.cond_regular && scan.cond_conditioning)
    scan.verdict = "stable";
  else
    scan.verdict = "indeterminate";
  return scan;
}

std::vector<double> find_diagonal_symmetrizer(const VelocitySet& set, const Eigen::MatrixXd& H, double tol) {
  const int n = set.size();
  if (H.rows() != n || H.cols() != n) throw ShapeMismatch("find_diagonal_symmetrizer: matrix size mismatch");

  // Velocity classes: same speed squared, same internal energy, same weight.
  std::map<std::tuple<int, double, double>, int> class_of_key;
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto key = std::make_tuple(set.csqr(i), set.beta[static_cast<std::size_t>(i)], set.f[static_cast<std::size_t>(i)]);
    const auto it = class_of_key.try_emplace(key, static_cast<int>(class_of_key.size())).first;
    cls[static_cast<std::size_t>(i)] = it->second;
  }
  const int K = static_cast<int>(class_of_key.size());

  auto expand = [&](const Eigen::VectorXd& p) {
    std::vector<double> a0(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a0[static_cast<std::size_t>(i)] = p(cls[static_cast<std::size_t>(i)]);
    return a0;
  };
  auto defect = [&](const std::vector<double>& a0) {
    double d = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d = std::max(d, std::abs(a0[static_cast<std::size_t>(i)] * H(i, j) - a0[static_cast<std::size_t>(j)] * H(j, i)));
    return d;
  };

  // The identity works whenever H itself is symmetric; try it before solving.
  {
    std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
    if (defect(ones) <= tol) return ones;
  }

  // Rows of M encode p_cls(i) H_ij - p_cls(j) H_ji = 0 for i < j; the best
  // class vector is the right singular vector of the smallest singular value.
  Eigen::MatrixXd M(n * (n - 1) / 2, K);
  M.setZero();
  int row = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      M(row, cls[static_cast<std::size_t>(i)]) += H(i, j);
      M(row, cls[static_cast<std::size_t>(j)]) -= H(j, i);
      ++row;
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinV);
  Eigen::VectorXd p = svd.matrixV().col(K - 1);
  int imax = 0;
  p.cwiseAbs().maxCoeff(&imax);
  if (p(imax) < 0) p = -p;
  p /= p.maxCoeff();

  for (int k = 0; k < K; ++k) {
    if (!(p(k) > 1e-8))
      throw NoStructureFound("find_diagonal_symmetrizer: least-squares solution is not positive for '" +
                             set.name + "'");
  }
  std::vector<double> a0 = expand(p);
  if (defect(a0) > tol)
    throw NoStructureFound("find_diagonal_symmetrizer: residual above tolerance for '" + set.name + "'");
  return a0;
}

StructureReport check_stability_structure(const VelocitySet& set, double projection_tol, double tol) {
  const int n = set.size();
  const int D = set.dimension;
  StructureReport rep;
  rep.set_name = set.name;
  rep.expected_zero = D + 2;
  rep.expected_minus_two = n - (D + 2);

  const Eigen::MatrixXd E = equilibrium_projector(set);
  rep.projection_defect = (E * E - E).cwiseAbs().maxCoeff();

  // Spectrum of the relaxation increment H(1/2) - I = 2(E - I): {0, -2}.
  const Eigen::MatrixXd K = 2.0 * (E - Eigen::MatrixXd::Identity(n, n));
  Eigen::EigenSolver<Eigen::MatrixXd> es(K, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw Error("check_stability_structure: eigensolver failed");
  for (int i = 0; i < n; ++i) {
    const std::complex<double> lam = es.eigenvalues()(i);
    const double d0 = std::abs(lam);
    const double d2 = std::abs(lam + 2.0);
    if (d0 <= d2) {
      ++rep.mult_zero;
      rep.spectrum_defect = std::max(rep.spectrum_defect, d0);
    } else {
      ++rep.mult_minus_two;
      rep.spectrum_defect = std::max(rep.spectrum_defect, d2);
    }
  }

  const Eigen::MatrixXd H = 2.0 * E - Eigen::MatrixXd::Identity(n, n);
  const bool is_builtin_19 = (set.name == "d3q19") && n == 19 && set.monoatomic();
  if (is_builtin_19) {
    // Documented diagonal by class: 3 for the rest velocity, 13 for the six
    // axis velocities, 52 for the twelve face diagonals.
    rep.a0_built_in = true;
    rep.a0.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      const int cs = set.csqr(i);
      rep.a0[static_cast<std::size_t>(i)] = cs == 0 ? 3.0 : (cs == 1 ? 13.0 : 52.0);
    }
  } else {
    rep.a0 = find_diagonal_symmetrizer(set, H, tol);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rep.symmetry_defect = std::max(
          rep.symmetry_defect,
          std::abs(rep.a0[static_cast<std::size_t>(i)] * H(i, j) - rep.a0[static_cast<std::size_t>(j)] * H(j, i)));

  rep.pass = rep.projection_defect <= projection_tol && rep.spectrum_defect <= tol &&
             rep.mult_zero == rep.expected_zero && rep.mult_minus_two == rep.expected_minus_two &&
             rep.symmetry_defect <= tol;
  return rep;
}

}  // namespace lee
