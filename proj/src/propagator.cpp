#include "ncland/propagator.hpp"

#include <cmath>
#include <numbers>

#include "ncland/errors.hpp"
#include "ncland/numerics.hpp"

namespace ncland::propagator {

namespace {

constexpr Complex kI{0.0, 1.0};

double dimensionless_scale(const model::ModelParams& params) {
  // (1 - eB theta) / (2 eB); must be positive for the momentum map.
  const double eb = params.charge * params.b_field;
  const double value = (1.0 - eb * params.theta) / (2.0 * eb);
  if (!(value > 0.0)) {
    throw ParameterError("momentum scale (1-eB theta)/(2eB) must be positive");
  }
  return value;
}

void require_theta(const model::ModelParams& params) {
  if (!(params.theta > 0.0)) throw ParameterError("theta must be positive");
}

}  // namespace

MomentumLabel make_momentum(double p1, double p2, const model::ModelParams& params) {
  MomentumLabel out;
  out.p1 = p1;
  out.p2 = p2;
  out.p = std::sqrt(dimensionless_scale(params)) * Complex{p1, p2};
  return out;
}

Complex GaussianKernel::value(Complex z, Complex z0) const {
  return prefactor * std::exp(-exponent * std::norm(z - z0));
}

Complex cs_momentum_overlap(Complex z, const MomentumLabel& p, const model::ModelParams& params) {
  require_theta(params);
  const double h2 = params.hbar * params.hbar;
  const double amp = std::sqrt(params.theta / (2.0 * std::numbers::pi * h2));
  const double gauss = std::exp(-params.theta * std::norm(p.p) / (4.0 * h2));
  const double phase_arg =
      std::sqrt(params.theta / 2.0) * 2.0 * (p.p * std::conj(z)).real() / params.hbar;
  return amp * gauss * std::polar(1.0, phase_arg);
}

GaussianKernel short_time_kernel(double tau, const model::ModelParams& params) {
  if (!(tau >= 0.0)) throw ParameterError("short_time_kernel: tau must be >= 0");
  require_theta(params);
  model::derive(params);  // critical-point guard
  const double eb = params.charge * params.b_field;
  const double m_theta = params.mass * params.theta;
  GaussianKernel k;
  k.prefactor = m_theta / (2.0 * params.mass * eb * params.theta / (1.0 - eb * params.theta) +
                           kI * tau);
  k.exponent = 2.0 * m_theta / (2.0 * m_theta + kI * tau * (1.0 / eb - params.theta));
  return k;
}

Complex short_time_kernel_quadrature(Complex z_f, Complex z_i, double tau,
                                     const model::ModelParams& params, int hermite_order) {
  require_theta(params);
  const double lambda = dimensionless_scale(params);
  const auto rule = numerics::gauss_hermite(hermite_order);
  const double scale = params.hbar * std::sqrt(2.0 / params.theta);
  const double phase_scale = 2.0 * std::sqrt(params.theta / 2.0) / params.hbar;
  const Complex dz = z_f - z_i;
  const double kinetic = tau * lambda / (2.0 * params.mass);

  Complex acc{0.0, 0.0};
  for (int i = 0; i < rule.order; ++i) {
    for (int j = 0; j < rule.order; ++j) {
      const Complex q{scale * rule.nodes[i], scale * rule.nodes[j]};
      const double arg = -kinetic * std::norm(q) + phase_scale * (q * std::conj(dz)).real();
      acc += rule.weights[i] * rule.weights[j] * std::polar(1.0, arg);
    }
  }
  return lambda / std::numbers::pi * acc;
}

Complex plane_gaussian_integral_closed(Complex a, Complex b) {
  return std::numbers::pi / a * std::exp(std::norm(b) / a);
}

Complex plane_gaussian_integral_quadrature(Complex a, Complex b, int hermite_order) {
  if (!(a.real() > 0.0)) throw ParameterError("plane integral: Re(a) must be positive");
  const auto rule = numerics::gauss_hermite(hermite_order);
  const double s = 1.0 / std::sqrt(a.real());
  Complex acc{0.0, 0.0};
  for (int i = 0; i < rule.order; ++i) {
    for (int j = 0; j < rule.order; ++j) {
      const Complex w{s * rule.nodes[i], s * rule.nodes[j]};
      // Peel off the e^{-Re(a)|w|^2} the Hermite weight already carries.
      const Complex rest = -kI * a.imag() * std::norm(w) + b * w + std::conj(b * w);
      acc += rule.weights[i] * rule.weights[j] * std::exp(rest);
    }
  }
  return acc * s * s;
}

GaussianKernel star_compose(const GaussianKernel& k1, const GaussianKernel& k2) {
  const Complex gamma = k2.exponent / k1.exponent;
  const Complex lambda = 1.0 + gamma - k2.exponent;
  if (std::abs(lambda) < 1e-14) throw SingularCompositionError("star_compose: Lambda = 0");
  GaussianKernel out;
  out.prefactor = k1.prefactor * k2.prefactor * std::numbers::pi / (k1.exponent * lambda);
  out.exponent = k1.exponent * gamma / lambda;
  return out;
}

Complex full_propagator(Complex z_f, Complex z_0, double total_time, int n_slices,
                        const model::ModelParams& params) {
  if (n_slices < 1) throw ParameterError("full_propagator: n_slices must be >= 1");
  if (!(total_time > 0.0)) throw ParameterError("full_propagator: T must be positive");
  const double tau = total_time / (n_slices + 1);
  const GaussianKernel segment = short_time_kernel(tau, params);
  GaussianKernel chain = segment;
  for (int slice = 0; slice < n_slices; ++slice) chain = star_compose(segment, chain);

  const double eb = params.charge * params.b_field;
  const double continuum = (1.0 - eb * params.theta) / (2.0 * eb * params.theta);
  return continuum * chain.exponent * std::exp(-chain.exponent * std::norm(z_f - z_0));
}

Complex closed_form_propagator(Complex z_f, Complex z_0, double total_time,
                               const model::ModelParams& params) {
  const double eb = params.charge * params.b_field;
  const double m_theta = params.mass * params.theta;
  const Complex beta =
      2.0 * m_theta / (2.0 * m_theta + kI * total_time * (1.0 / eb - params.theta));
  const double continuum = (1.0 - eb * params.theta) / (2.0 * eb * params.theta);
  return continuum * beta * std::exp(-beta * std::norm(z_f - z_0));
}

Complex composition_bookkeeping_ratio(int n_slices, const model::ModelParams& params) {
  // Each composition multiplies the raw chain by lambda*pi relative to the
  // segment family; the 1/pi^2 measure leaves a net (lambda/pi)^n.
  const double lambda = dimensionless_scale(params);
  return std::pow(Complex{lambda / std::numbers::pi, 0.0}, n_slices);
}

}  // namespace ncland::propagator
