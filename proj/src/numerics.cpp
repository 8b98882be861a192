#include "ncland/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ncland/errors.hpp"

namespace ncland::numerics {

namespace {

// Implicit-shift QL iteration for a symmetric tridiagonal matrix.
// d: diagonal, e: subdiagonal (e[i] couples i and i+1, e[n-1] scratch),
// z: row vector receiving the first component of every eigenvector.
// On return d holds the (unsorted) eigenvalues.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
  const int n = static_cast<int>(d.size());
  if (n == 1) return;
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw NumericError("tridiagonal QL iteration did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

struct GolubWelschResult {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes and weights for the measure with Jacobi diagonal `diag`,
// subdiagonal `sub` and zeroth moment mu0.
GolubWelschResult golub_welsch(std::vector<double> diag, std::vector<double> sub, double mu0) {
  const int n = static_cast<int>(diag.size());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  sub.resize(n, 0.0);
  ql_implicit(diag, sub, z);

  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return diag[a] < diag[b]; });

  GolubWelschResult out;
  out.nodes.resize(n);
  out.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    out.nodes[i] = diag[idx[i]];
    out.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
  }
  return out;
}

[[noreturn]] void throw_nonfinite(Complex z) {
  std::ostringstream msg;
  msg << "non-finite integrand value at node z = (" << z.real() << ", " << z.imag() << ")";
  throw NumericError(msg.str());
}

}  // namespace

RadialRule gauss_laguerre(int order) {
  if (order < 1 || order > 128) throw ParameterError("gauss_laguerre: order must be in [1, 128]");
  std::vector<double> diag(order);
  std::vector<double> sub(order, 0.0);
  for (int k = 0; k < order; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 0; k + 1 < order; ++k) sub[k] = static_cast<double>(k + 1);
  auto gw = golub_welsch(std::move(diag), std::move(sub), 1.0);
  RadialRule rule;
  rule.order = order;
  rule.nodes = std::move(gw.nodes);
  rule.weights = std::move(gw.weights);
  return rule;
}

HermiteRule gauss_hermite(int order) {
  if (order < 1 || order > 256) throw ParameterError("gauss_hermite: order must be in [1, 256]");
  std::vector<double> diag(order, 0.0);
  std::vector<double> sub(order, 0.0);
  for (int k = 0; k + 1 < order; ++k) sub[k] = std::sqrt((k + 1) / 2.0);
  auto gw = golub_welsch(std::move(diag), std::move(sub), std::sqrt(std::numbers::pi));
  HermiteRule rule;
  rule.order = order;
  rule.nodes = std::move(gw.nodes);
  rule.weights = std::move(gw.weights);
  return rule;
}

AngularRule angular_rule(int order) {
  if (order < 1) throw ParameterError("angular_rule: order must be >= 1");
  AngularRule rule;
  rule.order = order;
  rule.weight = 2.0 * std::numbers::pi / order;
  rule.nodes.resize(order);
  for (int k = 0; k < order; ++k) rule.nodes[k] = rule.weight * k;
  return rule;
}

Complex integrate_complex_plane(const std::function<Complex(Complex)>& f,
                                const RadialRule& radial, const AngularRule& angular) {
  // (1/pi) Int f r dr dth  =  (1/n_ang) Sum_ij w_i e^{u_i} f(sqrt(u_i) e^{i th_j}),
  // u = r^2 against the e^{-u} Laguerre weight.
  Complex acc{0.0, 0.0};
  for (int i = 0; i < radial.order; ++i) {
    const double r = std::sqrt(radial.nodes[i]);
    const double scaled = radial.weights[i] * std::exp(radial.nodes[i]);
    Complex ring{0.0, 0.0};
    for (int j = 0; j < angular.order; ++j) {
      const Complex z = std::polar(r, angular.nodes[j]);
      const Complex val = f(z);
      if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) throw_nonfinite(z);
      ring += val;
    }
    acc += scaled * ring;
  }
  return acc / static_cast<double>(angular.order);
}

Complex integrate_complex_plane(const std::function<Complex(Complex)>& f,
                                int radial_order, int angular_order) {
  return integrate_complex_plane(f, gauss_laguerre(radial_order), angular_rule(angular_order));
}

Complex trapezoid_periodic(const std::function<Complex(double)>& f, int order) {
  if (order < 1) throw ParameterError("trapezoid_periodic: order must be >= 1");
  const double h = 2.0 * std::numbers::pi / order;
  Complex acc{0.0, 0.0};
  for (int k = 0; k < order; ++k) {
    const Complex val = f(h * k);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag())) throw_nonfinite(Complex(h * k, 0.0));
    acc += val;
  }
  return acc * h;
}

Complex simpson(const std::function<Complex(double)>& f, double a, double b, int n) {
  if (n < 2) n = 2;
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  Complex acc = f(a) + f(b);
  for (int k = 1; k < n; ++k) acc += f(a + h * k) * (k % 2 ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

}  // namespace ncland::numerics
