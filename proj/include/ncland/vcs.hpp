#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ncland/fock.hpp"
#include "ncland/model.hpp"
#include "ncland/quaternion.hpp"

namespace ncland::vcs {

using Complex = std::complex<double>;

/// Label of a vector coherent state with diagonal matrix labels
/// Z = diag(z1, z2), Z'bar = diag(zp1_bar, zp2_bar).
struct VCSLabel {
  Complex z1{0.0, 0.0};
  Complex z2{0.0, 0.0};
  Complex zp1_bar{0.0, 0.0};
  Complex zp2_bar{0.0, 0.0};
  int j = 1;  // component index, 1 or 2
  int n_tilde = 0;
  int m_tilde = 0;
  double eta = 0.0;
};

/// Label of a quaternionic vector coherent state.
struct QVCSLabel {
  quaternion::Quaternion q = quaternion::make(0.0, 0.0, 0.0, 0.0);
  quaternion::Quaternion q_prime = quaternion::make(0.0, 0.0, 0.0, 0.0);
  int j = 1;
  int n_tilde = 0;
  int m_tilde = 0;
  double eta = 0.0;
};

/// The (m, n) -> C^2 coefficient grid of one QVCS member (fixed j, n~, m~).
struct QVCSState {
  Eigen::MatrixXcd up;
  Eigen::MatrixXcd down;

  double norm_squared() const { return up.squaredNorm() + down.squaredNorm(); }
};

struct NormalizationResult {
  double closed_form = 0.0;
  double brute_force = 0.0;
};

struct Quadratures {
  double px = 0.0;
  double px2 = 0.0;
  double py = 0.0;
  double py2 = 0.0;
  double x = 0.0;
  double x2 = 0.0;
  double y = 0.0;
  double y2 = 0.0;
};

/// Closed forms next to the first-principles ladder computation; the two
/// columns agree when the two quaternion axes commute and are reported
/// side by side otherwise.
struct ExpectationReport {
  Quadratures closed;
  Quadratures brute;
};

struct UncertaintyReport {
  double dpx2 = 0.0;        // (Delta P_X)^2
  double dpy2 = 0.0;        // (Delta P_Y)^2
  double product_sq = 0.0;  // dpx2 * dpy2
  double f_value = 0.0;     // F(r, theta, phi)
  double identity_dev = 0.0;  // |dpx2 dpy2 - hbar^4 F / (16 Theta^2)|
};

/// N(r, rho) = 2 e^{2 (r^2 + rho^2)}.
double qvcs_norm_closed(double r, double rho);

/// Closed form e^{2(r1^2+rho1^2)} + e^{2(r2^2+rho2^2)} next to the
/// truncated quadruple sum over (j, n~, m~, m, n).
NormalizationResult vcs_normalization(const VCSLabel& label, int n_max);

/// Coefficient grid N^{-1/2} Q^n Q'bar^m Qbar^n~ Q'^m~ e^{-i eta n} chi^j
/// / sqrt(n! m! n~! m~!). Throws TruncationError outside r^2, rho^2 <= n_max/4.
QVCSState build_qvcs(const QVCSLabel& label, const fock::FockConfig& cfg);

/// Sum over j, n~, m~ of the member norms; equals 1 within the tail bound.
double qvcs_family_norm(const QVCSLabel& label, const fock::FockConfig& cfg);

/// Moment problem of the quaternionic resolution of the identity:
/// all of 4 Int Int e^{-(r^2+rho^2)} r^{2n} rho^{2m}/(n! m!) r dr rho drho
/// for n, m <= max_index, returned as the worst |value - 1|.
double moment_problem_check(int radial_order, int max_index = 10);

/// Quadrature operator expectations in the QVCS family (fixed j, summed
/// over n~, m~), closed forms and ladder brute force side by side.
ExpectationReport quadrature_expectations(const QVCSLabel& label,
                                          const model::ModelParams& params,
                                          const fock::FockConfig& cfg);

/// Dispersions and the uncertainty function
///   F(r, theta, phi) = (2 r^2 cos^2 th + 1)(4 r^2 sin^2 th - 2 r^2 cos^2 phi sin^2 th + 1).
UncertaintyReport uncertainty_report(const QVCSLabel& label, const model::ModelParams& params);

/// Time evolution rotates the first quaternion: theta -> theta - omega* t.
QVCSLabel evolve_qvcs(const QVCSLabel& label, double t, const model::ModelParams& params);

/// Temporal probability density of the QVCS overlap,
///   (2/sqrt(N(rho,rho))) (rho^{2m}/m!)^2
///   [4 e^{2 r0 r cos(th0 - w*t) cos th} cos(2 r0 r sin(th0 - w*t) sin th)] / sqrt(N(r, r0)).
double temporal_density(const QVCSLabel& label0, double theta_probe, double r_probe, double t,
                        int m, double rho, const model::ModelParams& params);

/// Same density with the bracket evaluated through the matrix-exponential
/// trace (orthogonal-axis pairing), as an independent route.
double temporal_density_trace_route(const QVCSLabel& label0, double theta_probe, double r_probe,
                                    double t, int m, double rho,
                                    const model::ModelParams& params);

}  // namespace ncland::vcs
