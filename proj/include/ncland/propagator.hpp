#pragma once

#include <complex>

#include "ncland/model.hpp"

namespace ncland::propagator {

using Complex = std::complex<double>;

/// Dimensionless complex momentum p = sqrt((1-eB theta)/(2eB)) (p1 + i p2).
struct MomentumLabel {
  Complex p{0.0, 0.0};
  double p1 = 0.0;
  double p2 = 0.0;
};

MomentumLabel make_momentum(double p1, double p2, const model::ModelParams& params);

/// One Gaussian propagator segment K(z, z0) = A e^{-beta |z - z0|^2}.
struct GaussianKernel {
  Complex prefactor{0.0, 0.0};  // A
  Complex exponent{0.0, 0.0};   // beta, Re(beta) > 0

  Complex value(Complex z, Complex z0) const;
};

/// Momentum-space wave function of the coherent states:
///   sqrt(theta/(2 pi hbar^2)) e^{-theta |p|^2/(4 hbar^2)}
///   e^{(i/hbar) sqrt(theta/2) (p conj(z) + conj(p) z)}.
/// Requires theta > 0.
Complex cs_momentum_overlap(Complex z, const MomentumLabel& p, const model::ModelParams& params);

/// Closed form of the small-segment propagator:
///   A = M theta / (2 e M B theta/(1-eB theta) + i tau),
///   beta = 2 M theta / (2 M theta + i tau (1/(eB) - theta)).
GaussianKernel short_time_kernel(double tau, const model::ModelParams& params);

/// Independent oracle: the 2D momentum integral of
/// (z_f| e^{-i tau H} |p)(p| z_i) on a Gauss-Hermite grid. The kinetic
/// phase runs over the dimensionless |p|^2/2M while the wave functions and
/// measure follow the raw momentum bookkeeping that yields the closed form.
Complex short_time_kernel_quadrature(Complex z_f, Complex z_i, double tau,
                                     const model::ModelParams& params, int hermite_order = 96);

/// Plane Gaussian integral Int d^2 w e^{-a |w|^2 + b w + conj(b) conj(w)};
/// closed form (pi/a) e^{|b|^2 / a}, quadrature version for the oracle.
Complex plane_gaussian_integral_closed(Complex a, Complex b);
Complex plane_gaussian_integral_quadrature(Complex a, Complex b, int hermite_order = 96);

/// Star composition Int d^2 z K1(z_out, z) * K2(z, z_in) on the Gaussian
/// family: with gamma = beta2/beta1 and Lambda = 1 + gamma - beta2,
///   A -> A1 A2 pi / (beta1 Lambda),  beta -> beta1 gamma / Lambda.
/// Throws SingularCompositionError when Lambda vanishes.
GaussianKernel star_compose(const GaussianKernel& k1, const GaussianKernel& k2);

/// n-slice propagator: composes n_slices + 1 segments of tau = T/(n_slices+1)
/// through star_compose and evaluates with the continuum normalization
/// (1-eB theta)/(2 eB theta) in front of the composed exponent.
Complex full_propagator(Complex z_f, Complex z_0, double total_time, int n_slices,
                        const model::ModelParams& params);

/// Closed form of the continuum limit (the n -> infinity kernel).
Complex closed_form_propagator(Complex z_f, Complex z_0, double total_time,
                               const model::ModelParams& params);

/// Constant ratio between the raw composed prefactor chain (with the
/// 1/theta (1/pi^2)^n measure) and the continuum closed form; recorded by
/// the verify report instead of being silently absorbed.
Complex composition_bookkeeping_ratio(int n_slices, const model::ModelParams& params);

}  // namespace ncland::propagator
