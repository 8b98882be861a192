#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace ncland::numerics {

using Complex = std::complex<double>;

/// Gauss-Laguerre rule for the weight e^{-x} on [0, inf).
///
/// Used throughout as the radial rule after the substitution u = r^2,
/// which turns every integrand of the form e^{-r^2} r^{2k} r dr into a
/// polynomial moment that the rule reproduces exactly.
struct RadialRule {
  int order = 0;
  std::vector<double> nodes;    // strictly increasing, all > 0
  std::vector<double> weights;  // all > 0, sum to 1
};

/// Equally spaced angular rule on [0, 2pi) with uniform weight 2pi/order.
struct AngularRule {
  int order = 0;
  std::vector<double> nodes;
  double weight = 0.0;
};

/// Gauss-Hermite rule for the weight e^{-x^2} on (-inf, inf).
struct HermiteRule {
  int order = 0;
  std::vector<double> nodes;    // symmetric about 0
  std::vector<double> weights;  // all > 0, sum to sqrt(pi)
};

/// Nodes and weights by Golub-Welsch on the Laguerre Jacobi matrix,
/// solved with an in-repo symmetric tridiagonal QL iteration.
/// Exact for polynomials of degree <= 2*order - 1. order in [1, 128].
RadialRule gauss_laguerre(int order);

HermiteRule gauss_hermite(int order);

AngularRule angular_rule(int order);

/// Quadrature approximation of (1/pi) * Integral_C f(z) d^2 z with
/// d^2 z = r dr dtheta. Radially Gauss-Laguerre in u = r^2, angularly
/// trapezoidal. f must be dominated by C*e^{r^2(1-eps)}.
/// Throws NumericError (carrying the node) on a non-finite evaluation.
Complex integrate_complex_plane(const std::function<Complex(Complex)>& f,
                                const RadialRule& radial, const AngularRule& angular);
Complex integrate_complex_plane(const std::function<Complex(Complex)>& f,
                                int radial_order, int angular_order);

/// Integral of a 2pi-periodic function over one period; spectrally
/// accurate for band-limited integrands.
Complex trapezoid_periodic(const std::function<Complex(double)>& f, int order);

/// Composite Simpson on [a, b] with n subintervals (n rounded up to even).
Complex simpson(const std::function<Complex(double)>& f, double a, double b, int n);

}  // namespace ncland::numerics
