#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "ncland/errors.hpp"
#include "ncland/propagator.hpp"

using namespace ncland;
using propagator::Complex;
using propagator::GaussianKernel;
constexpr double kPi = std::numbers::pi;

namespace {
const model::ModelParams kParams{1.0, 1.0, 1.0, 0.3, 1.0};

double lambda_of(const model::ModelParams& p) {
  const double eb = p.charge * p.b_field;
  return (1.0 - eb * p.theta) / (2.0 * eb);
}
}  // namespace

TEST_CASE("momentum label carries the dimensionless combination") {
  const auto p = propagator::make_momentum(0.7, -0.4, kParams);
  const Complex expected = std::sqrt(lambda_of(kParams)) * Complex(0.7, -0.4);
  CHECK(std::abs(p.p - expected) < 1e-15);
}

TEST_CASE("momentum overlap at p = 0 and its modulus law") {
  const auto p0 = propagator::make_momentum(0.0, 0.0, kParams);
  CHECK(propagator::cs_momentum_overlap(Complex(0.4, 0.2), p0, kParams).real() ==
        doctest::Approx(std::sqrt(kParams.theta / (2.0 * kPi))));

  const auto p = propagator::make_momentum(1.1, 0.6, kParams);
  const double expected_mod2 =
      kParams.theta / (2.0 * kPi) * std::exp(-kParams.theta * std::norm(p.p) / 2.0);
  for (double arg : {0.0, 1.0, 2.5}) {
    const Complex z = std::polar(0.9, arg);
    CHECK(std::norm(propagator::cs_momentum_overlap(z, p, kParams)) ==
          doctest::Approx(expected_mod2).epsilon(1e-13));
  }
}

TEST_CASE("momentum overlap requires positive theta") {
  model::ModelParams flat = kParams;
  flat.theta = 0.0;
  const propagator::MomentumLabel p{Complex(0.0, 0.0), 0.0, 0.0};
  CHECK_THROWS_AS(propagator::cs_momentum_overlap(Complex(0.0, 0.0), p, flat), ParameterError);
}

TEST_CASE("momentum completeness reproduces the Gaussian overlap at tau = 0") {
  const Complex z1{0.5, -0.2};
  const Complex z2{-0.3, 0.4};
  const Complex value = propagator::short_time_kernel_quadrature(z1, z2, 0.0, kParams);
  const double expected = lambda_of(kParams) * std::exp(-std::norm(z1 - z2));
  CHECK(std::abs(value - Complex(expected, 0.0)) < 1e-10);
}

TEST_CASE("short-time kernel closed form at tau -> 0") {
  const auto kernel = propagator::short_time_kernel(0.0, kParams);
  CHECK(kernel.exponent.real() == doctest::Approx(1.0));
  CHECK(std::abs(kernel.exponent.imag()) < 1e-15);
  CHECK(kernel.prefactor.real() == doctest::Approx(lambda_of(kParams)));
}

TEST_CASE("quadrature oracle matches the closed form across tau") {
  const Complex zf{0.9, -0.4};
  const Complex z0{-0.2, 0.3};
  for (double tau : {0.01, 0.1, 1.0}) {
    const auto kernel = propagator::short_time_kernel(tau, kParams);
    const Complex quad = propagator::short_time_kernel_quadrature(zf, z0, tau, kParams);
    CHECK(std::abs(quad - kernel.value(zf, z0)) < 1e-8);
  }
}

TEST_CASE("plane Gaussian integral identity") {
  for (const auto& [a, b] : {std::pair{Complex(1.0, 0.3), Complex(0.4, -0.2)},
                             std::pair{Complex(0.7, -0.5), Complex(0.0, 0.8)},
                             std::pair{Complex(2.0, 1.5), Complex(1.0, 1.0)}}) {
    const Complex closed = propagator::plane_gaussian_integral_closed(a, b);
    const Complex quad = propagator::plane_gaussian_integral_quadrature(a, b);
    CHECK(std::abs(quad - closed) < 1e-8 * std::abs(closed));
  }
}

TEST_CASE("star composition of equal kernels") {
  const double tau = 0.2;
  const auto k = propagator::short_time_kernel(tau, kParams);
  const auto composed = propagator::star_compose(k, k);

  // exponent: the doubled-time value 2M theta/(2M theta + 2 i tau (1/eB - theta))
  const auto doubled = propagator::short_time_kernel(2.0 * tau, kParams);
  CHECK(std::abs(composed.exponent - doubled.exponent) < 1e-12);

  // prefactor: pi M theta/(... + 2 i tau) up to the lambda bookkeeping factor
  const Complex target_prefactor = kPi * doubled.prefactor;
  CHECK(std::abs(composed.prefactor - lambda_of(kParams) * target_prefactor) < 1e-12);
}

TEST_CASE("the tau = 0 kernel is the identity element of the composition") {
  // 1/beta_new = 1/beta1 + 1/beta2 - 1, so beta2 = 1 (the reproducing
  // overlap kernel) composes as the identity; a narrow beta2 >> 1 kernel
  // does not, which is the UV cutoff in action.
  const auto k1 = propagator::short_time_kernel(0.3, kParams);
  GaussianKernel unit_kernel;
  unit_kernel.prefactor = Complex(1.0, 0.0);
  unit_kernel.exponent = Complex(1.0, 0.0);
  const auto composed = propagator::star_compose(k1, unit_kernel);
  CHECK(std::abs(composed.exponent - k1.exponent) < 1e-14);
  CHECK(std::abs(composed.prefactor - kPi * k1.prefactor) < 1e-14);

  // small-tau member: identity up to O(tau) corrections
  const auto nearly = propagator::short_time_kernel(1e-6, kParams);
  const auto near_composed = propagator::star_compose(k1, nearly);
  CHECK(std::abs(near_composed.exponent - k1.exponent) < 1e-5);
}

TEST_CASE("star composition is associative") {
  const auto k = propagator::short_time_kernel(0.15, kParams);
  const auto left = propagator::star_compose(propagator::star_compose(k, k), k);
  const auto right = propagator::star_compose(k, propagator::star_compose(k, k));
  CHECK(std::abs(left.exponent - right.exponent) < 1e-10);
  CHECK(std::abs(left.prefactor - right.prefactor) < 1e-10);
}

TEST_CASE("kernel family is a semigroup in the exponent") {
  const auto k1 = propagator::short_time_kernel(0.4, kParams);
  const auto k2 = propagator::short_time_kernel(0.7, kParams);
  const auto composed = propagator::star_compose(k1, k2);
  const auto direct = propagator::short_time_kernel(1.1, kParams);
  CHECK(std::abs(composed.exponent - direct.exponent) < 1e-10);
  CHECK(std::abs(composed.prefactor - kPi * lambda_of(kParams) * direct.prefactor) < 1e-10);
}

TEST_CASE("singular composition raises") {
  GaussianKernel k1;
  k1.prefactor = Complex(1.0, 0.0);
  k1.exponent = Complex(1.0, 0.0);
  GaussianKernel k2 = k1;
  k2.exponent = Complex(2.0, 0.0);  // Lambda = 1 + 2 - 2 = 1, fine
  CHECK_NOTHROW(propagator::star_compose(k1, k2));
  k2.exponent = Complex(2.0, 0.0);
  k1.exponent = Complex(1.0, 0.0);
  // Lambda = 1 + beta2/beta1 - beta2 = 0 when beta1 = beta2/(beta2 - 1)
  k2.exponent = Complex(3.0, 0.0);
  k1.exponent = k2.exponent / (k2.exponent - Complex(1.0, 0.0));
  CHECK_THROWS_AS(propagator::star_compose(k1, k2), SingularCompositionError);
}

TEST_CASE("full propagator is slice-count independent and matches the closed form") {
  const Complex zf{1.0, 0.5};
  const Complex z0{-0.2, 0.1};
  const Complex closed = propagator::closed_form_propagator(zf, z0, 1.0, kParams);
  for (int n : {1, 2, 4, 8, 16, 32, 64}) {
    CHECK(std::abs(propagator::full_propagator(zf, z0, 1.0, n, kParams) - closed) < 1e-10);
  }
}

TEST_CASE("T -> 0 recovers the Gaussian transition amplitude") {
  const Complex zf{0.8, 0.0};
  const Complex z0{0.0, 0.0};
  const double eb = kParams.charge * kParams.b_field;
  const double target =
      (1.0 - eb * kParams.theta) / (2.0 * eb * kParams.theta) * std::exp(-std::norm(zf - z0));
  const double got = std::abs(propagator::full_propagator(zf, z0, 1e-6, 8, kParams));
  CHECK(std::abs(got - target) / target < 1e-4);
}

TEST_CASE("coincident endpoints leave only the prefactor") {
  const Complex z{0.6, -0.9};
  const Complex value = propagator::full_propagator(z, z, 0.8, 4, kParams);
  const auto closed = propagator::closed_form_propagator(z, z, 0.8, kParams);
  CHECK(std::abs(value - closed) < 1e-12);
  const double eb = kParams.charge * kParams.b_field;
  const Complex beta = propagator::short_time_kernel(0.8, kParams).exponent;
  CHECK(std::abs(value - (1.0 - eb * kParams.theta) / (2.0 * eb * kParams.theta) * beta) < 1e-12);
}

TEST_CASE("UV bound: Re(beta) never exceeds 1") {
  for (double t = 0.0; t < 40.0; t += 0.25) {
    const auto kernel = propagator::short_time_kernel(t, kParams);
    CHECK(kernel.exponent.real() <= 1.0 + 1e-12);
    CHECK(std::abs(kernel.exponent) <= 1.0 + 1e-12);
  }
}

TEST_CASE("bookkeeping ratio is the documented constant") {
  const double lambda = lambda_of(kParams);
  for (int n : {1, 3, 8}) {
    CHECK(std::abs(propagator::composition_bookkeeping_ratio(n, kParams) -
                   std::pow(Complex(lambda / kPi, 0.0), n)) < 1e-15);
  }
}

TEST_CASE("full propagator validates arguments") {
  CHECK_THROWS_AS(propagator::full_propagator(Complex(0, 0), Complex(1, 0), 1.0, 0, kParams),
                  ParameterError);
  CHECK_THROWS_AS(propagator::full_propagator(Complex(0, 0), Complex(1, 0), -1.0, 2, kParams),
                  ParameterError);
  model::ModelParams critical = kParams;
  critical.theta = 1.0;
  CHECK_THROWS_AS(propagator::full_propagator(Complex(0, 0), Complex(1, 0), 1.0, 2, critical),
                  CriticalPointError);
}
