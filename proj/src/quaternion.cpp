#include "ncland/quaternion.hpp"

#include <cmath>
#include <numbers>

#include "ncland/errors.hpp"

namespace ncland::quaternion {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// sinh(mu)/mu, stable near zero.
Complex sinhc(Complex mu) {
  if (std::abs(mu) < 1e-4) {
    const Complex mu2 = mu * mu;
    return 1.0 + mu2 / 6.0 + mu2 * mu2 / 120.0;
  }
  return std::sinh(mu) / mu;
}

}  // namespace

Matrix2 sigma(double phi, double eta) {
  Matrix2 s;
  const double c = std::cos(phi);
  const double sn = std::sin(phi);
  s << c, std::polar(1.0, eta) * sn, std::polar(1.0, -eta) * sn, -c;
  return s;
}

Quaternion make(double r, double theta, double phi, double eta) {
  if (r < 0.0) throw ParameterError("quaternion: r must be >= 0");
  Quaternion q;
  q.r = r;
  q.theta = wrap_angle(theta);
  q.phi = phi;
  q.eta = wrap_angle(eta);
  q.mat = r * (std::cos(q.theta) * Matrix2::Identity() +
               kI * std::sin(q.theta) * sigma(phi, q.eta));
  q.degenerate = std::abs(std::sin(q.theta)) < 1e-14;
  return q;
}

Quaternion from_matrix(const Matrix2& mat) {
  const Complex det = mat.determinant();
  const double r2 = det.real();
  if (r2 < -1e-12 || std::abs(det.imag()) > 1e-10 * (1.0 + std::abs(r2))) {
    throw ParameterError("from_matrix: not a quaternion-form matrix (det not real >= 0)");
  }
  Quaternion q;
  q.r = std::sqrt(std::max(r2, 0.0));
  if (q.r < 1e-300) {
    q.mat = Matrix2::Zero();
    q.degenerate = true;
    q.r = 0.0;
    return q;
  }
  const double cos_theta = std::clamp((mat.trace() / (2.0 * q.r)).real(), -1.0, 1.0);
  const Matrix2 traceless = mat - 0.5 * mat.trace() * Matrix2::Identity();
  const double sin_theta = std::clamp(traceless.norm() / (q.r * std::sqrt(2.0)), 0.0, 1.0);
  q.theta = std::atan2(sin_theta, cos_theta);  // convention sin(theta) >= 0
  if (sin_theta < 1e-12) {
    q.degenerate = true;
    q.phi = 0.0;
    q.eta = 0.0;
    q.theta = cos_theta >= 0.0 ? 0.0 : std::numbers::pi;
    q.mat = mat;
    return q;
  }
  const Matrix2 axis = traceless / (kI * q.r * sin_theta);
  const double cos_phi = std::clamp(axis(0, 0).real(), -1.0, 1.0);
  const double sin_phi = std::abs(axis(0, 1));
  q.phi = std::atan2(sin_phi, cos_phi);
  q.eta = sin_phi > 1e-14 ? wrap_angle(std::arg(axis(0, 1))) : 0.0;
  q.mat = mat;
  return q;
}

Matrix2 power(const Quaternion& q, int n) {
  if (n < 0) throw ParameterError("quaternion power: n must be >= 0");
  if (n == 0) return Matrix2::Identity();
  const double rn = std::pow(q.r, n);
  return rn * (std::cos(n * q.theta) * Matrix2::Identity() +
               kI * std::sin(n * q.theta) * sigma(q.phi, q.eta));
}

Matrix2 su2_factor(double xi1, double phi1, double xi2) {
  Matrix2 left = Matrix2::Zero();
  left(0, 0) = std::polar(1.0, xi1 / 2.0);
  left(1, 1) = std::polar(1.0, -xi1 / 2.0);
  Matrix2 mid;
  const double c = std::cos(phi1 / 2.0);
  const double s = std::sin(phi1 / 2.0);
  mid << c, kI * s, kI * s, c;
  Matrix2 right = Matrix2::Zero();
  right(0, 0) = std::polar(1.0, xi2 / 2.0);
  right(1, 1) = std::polar(1.0, -xi2 / 2.0);
  return left * mid * right;
}

Matrix2 expm(const Matrix2& m) {
  const Complex alpha = m.trace() / 2.0;
  const Matrix2 v = m - alpha * Matrix2::Identity();
  const Complex mu = std::sqrt(-v.determinant());  // v^2 = mu^2 I
  return std::exp(alpha) * (std::cosh(mu) * Matrix2::Identity() + sinhc(mu) * v);
}

Matrix2 expm_series(const Matrix2& m) {
  int squarings = 0;
  Matrix2 scaled = m;
  while (scaled.norm() > 0.5) {
    scaled /= 2.0;
    ++squarings;
  }
  Matrix2 out = Matrix2::Identity();
  Matrix2 term = Matrix2::Identity();
  for (int k = 1; k <= 24; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    out += term;
  }
  for (int k = 0; k < squarings; ++k) out = out * out;
  return out;
}

Complex trace_exp_sum(const Quaternion& q1, const Quaternion& q2) {
  const Matrix2 x = q2.conjugated() * q1.mat + q2.mat * q1.conjugated();
  return 2.0 * expm(x).trace();
}

double trace_exp_closed_form(double r, double theta, double r0, double theta0) {
  return 4.0 * std::exp(2.0 * r0 * r * std::cos(theta0) * std::cos(theta)) *
         std::cos(2.0 * r0 * r * std::sin(theta0) * std::sin(theta));
}

double axis_dot(double phi1, double eta1, double phi2, double eta2) {
  // Axis unit vector of sigma(phi, eta): (sin phi cos eta, -sin phi sin eta, cos phi).
  return std::sin(phi1) * std::sin(phi2) * std::cos(eta1 - eta2) +
         std::cos(phi1) * std::cos(phi2);
}

void perpendicular_axis(double phi, double eta, double& phi_out, double& eta_out) {
  // Rotate the axis by pi/2 along its meridian.
  const double kx = std::cos(phi) * std::cos(eta);
  const double ky = -std::cos(phi) * std::sin(eta);
  const double kz = -std::sin(phi);
  phi_out = std::atan2(std::hypot(kx, ky), kz);
  eta_out = wrap_angle(std::atan2(-ky, kx));
}

}  // namespace ncland::quaternion
