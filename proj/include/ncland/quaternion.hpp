#pragma once

#include <Eigen/Dense>
#include <complex>

namespace ncland::quaternion {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

/// Hermitian, traceless axis matrix
///   sigma(phi, eta) = ((cos phi, e^{i eta} sin phi), (e^{-i eta} sin phi, -cos phi)),
/// with sigma^2 = I and det = -1.
Matrix2 sigma(double phi, double eta);

/// Quaternion as the 2x2 complex matrix r (I cos theta + i sigma(n) sin theta),
/// together with its canonical parameters.
struct Quaternion {
  Matrix2 mat = Matrix2::Identity();
  double r = 1.0;
  double theta = 0.0;  // in [0, 2pi)
  double phi = 0.0;    // axis polar angle, [0, pi]
  double eta = 0.0;    // axis azimuth, [0, 2pi)
  bool degenerate = false;  // theta in {0, pi}: axis unidentifiable

  /// Quaternionic conjugate r (I cos theta - i sigma sin theta).
  Matrix2 conjugated() const { return 2.0 * r * std::cos(theta) * Matrix2::Identity() - mat; }
};

/// Throws ParameterError for r < 0.
Quaternion make(double r, double theta, double phi, double eta);

/// Canonical parameters recovered from a quaternion-form matrix; the
/// returned convention keeps sin(theta) >= 0 and flags theta in {0, pi}
/// with phi = eta = 0.
Quaternion from_matrix(const Matrix2& mat);

/// De Moivre power r^n (I cos n theta + i sigma sin n theta).
Matrix2 power(const Quaternion& q, int n);

/// u_{xi1} u_{phi1} u_{xi2}: the SU(2) factorization used to identify
/// conjugated diagonal labels with quaternions. Unitary, det = 1.
Matrix2 su2_factor(double xi1, double phi1, double xi2);

/// Exact 2x2 matrix exponential via the trace/traceless split.
Matrix2 expm(const Matrix2& m);

/// Scaling-and-squaring Taylor exponential; oracle for expm.
Matrix2 expm_series(const Matrix2& m);

/// Tr(e^{conj(q2) q1 + q2 conj(q1)}) over the doubled diag(X, X) structure,
/// i.e. twice the 2x2 trace.
Complex trace_exp_sum(const Quaternion& q1, const Quaternion& q2);

/// 4 e^{2 r0 r cos t0 cos t} cos(2 r0 r sin t0 sin t); the closed form the
/// trace takes when the two axes are orthogonal as unit vectors.
double trace_exp_closed_form(double r, double theta, double r0, double theta0);

/// Axis angles (phi', eta') of a unit vector orthogonal to the (phi, eta) axis.
void perpendicular_axis(double phi, double eta, double& phi_out, double& eta_out);

/// Dot product of the two axis unit vectors.
double axis_dot(double phi1, double eta1, double phi2, double eta2);

}  // namespace ncland::quaternion
