#pragma once

#include <Eigen/Dense>
#include <array>
#include <string>
#include <vector>

#include "lee/velocity_set.hpp"

namespace lee {

// One collide-and-stream update acts sitewise as H(tau) = (1 - 1/tau) I +
// 1/tau E, where E is the linear map populations -> equilibrium of their own
// moments.  E is a projector of rank D+2.
struct CollisionMatrix {
  std::string set_name;
  int dimension = 0;
  double tau = 0;
  std::vector<std::array<int, 3>> c;
  Eigen::MatrixXd H;
};

Eigen::MatrixXd equilibrium_projector(const VelocitySet& set);
CollisionMatrix build_collision_matrix(const VelocitySet& set, double tau);  // throws ZeroTau

// Symbol of the periodic update at wave vector keps in [-pi, pi]^D:
//   Gamma(keps) = diag(exp(-i keps . c_m)) H
// Throws OutOfRangeWaveNumber outside the fundamental cell.
Eigen::MatrixXcd build_amplification(const CollisionMatrix& cm, const std::array<double, 3>& keps);

struct ScanOptions {
  double unitary_tol = 1e-12;      // max |Gamma* Gamma - I| accepted as unitary
  double spectral_tol = 1e-12;     // rho <= 1 + spectral_tol
  double regularity_floor = 1e-12; // smallest singular value counted as regular
  double kappa_cap = 1e6;          // uniform eigenvector-conditioning bound
  // A sample whose eigenvalues cluster tighter than cluster_tol while kappa
  // exceeds kappa_defective is flagged as possibly non-diagonalizable.
  double cluster_tol = 1e-8;
  double kappa_defective = 1e8;
};

struct StabilitySample {
  std::array<double, 3> keps = {0, 0, 0};
  double unitary_defect = 0;
  double rho = 0;           // spectral radius
  double kappa = 0;         // condition number of the unit-column eigenvector matrix
  double min_singular = 0;  // regularity margin of Gamma
  bool unitary = false;
  bool defective = false;
  bool eigen_failed = false;
};

// Sufficient conditions for uniform L2 power-boundedness checked sample by
// sample: Gamma regular, spectral radius at most one, eigenvector condition
// number uniformly bounded.  Unitary samples satisfy all three outright and
// skip the eigendecomposition.
struct StabilityScan {
  std::string set_name;
  double tau = 0;
  int resolution = 0;
  int dimension = 0;
  ScanOptions options;
  std::vector<StabilitySample> samples;
  double max_unitary_defect = 0;
  double max_rho = 0;
  double max_kappa = 0;
  double min_singular = 0;
  bool cond_regular = false;
  bool cond_spectral = false;
  bool cond_conditioning = false;
  bool any_defective = false;
  // "stable" when all three conditions hold on every sample, "unstable" when
  // the spectral radius genuinely exceeds one, "indeterminate" otherwise
  // (conditioning unbounded or eigenproblem numerically defective).
  std::string verdict;
};

// Samples keps on a uniform grid over [-pi, pi]^D with `resolution` points
// per axis, endpoints included.  When the resolution is even the origin is
// not on that grid and is appended as one extra sample, so the origin and the
// cell boundary are always checked exactly.
StabilityScan scan_stability(const VelocitySet& set, int resolution, double tau = 0.5, const ScanOptions& opt = {});

// Positive diagonal A0, constant on velocity classes, with A0 H(1/2)
// symmetric.  Throws NoStructureFound when no such diagonal exists.
std::vector<double> find_diagonal_symmetrizer(const VelocitySet& set, const Eigen::MatrixXd& H, double tol = 1e-10);

// Algebraic stability certificate for sets where the scan is inconclusive:
// E is a projector, the increment H(1/2) - I = 2(E - I) has spectrum {0, -2}
// with multiplicities D+2 and n-D-2, and a positive diagonal A0 makes
// A0 H(1/2) symmetric.  For the 19-velocity set A0 is the documented diagonal
// diag(3, 13, ..., 52, ...) by class; other sets use the least-squares search.
struct StructureReport {
  std::string set_name;
  double projection_defect = 0;  // max |E^2 - E|
  double spectrum_defect = 0;    // max distance of an increment eigenvalue from {0, -2}
  int mult_zero = 0;
  int mult_minus_two = 0;
  int expected_zero = 0;
  int expected_minus_two = 0;
  std::vector<double> a0;  // per velocity
  bool a0_built_in = false;
  double symmetry_defect = 0;  // max |A0 H - (A0 H)^T| at tau = 1/2
  bool pass = false;
};

StructureReport check_stability_structure(const VelocitySet& set, double projection_tol = 1e-12,
                                          double tol = 1e-10);

}  // namespace lee
