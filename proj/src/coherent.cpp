#include "ncland/coherent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "ncland/errors.hpp"

namespace ncland::coherent {

namespace {

// Poisson weights e^{-|z|^2} |z|^{2n}/n! accumulated iteratively.
double poisson_partial_sum(double abs2, int n_max) {
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    term *= abs2 / n;
    sum += term;
  }
  return std::exp(-abs2) * sum;
}

}  // namespace

Eigen::VectorXcd coherent_ket(Complex z, int n_max) {
  Eigen::VectorXcd v(n_max + 1);
  Complex coeff = std::exp(-0.5 * std::norm(z));
  v(0) = coeff;
  for (int n = 1; n <= n_max; ++n) {
    coeff *= z / std::sqrt(static_cast<double>(n));
    v(n) = coeff;
  }
  return v;
}

double truncation_tail(const CSLabel& label, const fock::FockConfig& cfg) {
  if (label.m > cfg.n_max) return 1.0;
  const double z2 = std::norm(label.z);
  const double zp2 = std::norm(label.z_prime);
  double prefactor = std::exp(-zp2);
  for (int k = 1; k <= label.m; ++k) prefactor *= zp2 / k;
  return prefactor * (1.0 - poisson_partial_sum(z2, cfg.n_max));
}

fock::HSOperator build_cs(const CSLabel& label, const fock::FockConfig& cfg,
                          double tail_tolerance) {
  if (label.m < 0) throw ParameterError("build_cs: m must be >= 0");
  const double z2 = std::norm(label.z);
  const double zp2 = std::norm(label.z_prime);
  const double bound = cfg.n_max / 4.0;
  if (z2 > bound || zp2 > bound || label.m > cfg.n_max) {
    std::ostringstream msg;
    msg << "build_cs: label outside truncation bound (|z|^2 = " << z2 << ", |z'|^2 = " << zp2
        << ", m = " << label.m << ", n_max = " << cfg.n_max << ")";
    throw TruncationError(msg.str());
  }
  const double tail = truncation_tail(label, cfg);
  if (tail > tail_tolerance) {
    std::ostringstream msg;
    msg << "build_cs: dropped mass " << tail << " exceeds tolerance " << tail_tolerance;
    throw TruncationError(msg.str());
  }

  fock::HSOperator state = fock::HSOperator::zero(cfg);
  Complex row_factor = std::exp(-0.5 * (z2 + zp2));
  Complex zp_conj = std::conj(label.z_prime);
  for (int k = 1; k <= label.m; ++k) row_factor *= zp_conj / std::sqrt(static_cast<double>(k));

  Complex col = row_factor;
  state.coeffs(label.m, 0) = col;
  for (int n = 1; n <= cfg.n_max; ++n) {
    col *= label.z / std::sqrt(static_cast<double>(n));
    state.coeffs(label.m, n) = col * std::polar(1.0, -label.eta * n);
  }
  return state;
}

double normalization_sum(Complex z, Complex z_prime, const fock::FockConfig& cfg) {
  double total = 0.0;
  for (int m = 0; m <= cfg.n_max; ++m) {
    // Direct coefficient sum; identical to hs_inner of the built state
    // with itself but without paying n_max^2 storage per member.
    const double z2 = std::norm(z);
    const double zp2 = std::norm(z_prime);
    double row = std::exp(-(z2 + zp2));
    for (int k = 1; k <= m; ++k) row *= zp2 / k;
    double col = 1.0;
    double sum = 1.0;
    for (int n = 1; n <= cfg.n_max; ++n) {
      col *= z2 / n;
      sum += col;
    }
    total += row * sum;
  }
  return total;
}

Complex overlap(const CSLabel& a, const CSLabel& b, const fock::FockConfig& cfg) {
  return fock::hs_inner(build_cs(a, cfg), build_cs(b, cfg));
}

Complex overlap_closed_form(const CSLabel& bra, const CSLabel& ket) {
  const double zp2 = std::norm(bra.z_prime);
  double pref = std::exp(-zp2);
  for (int k = 1; k <= bra.m; ++k) pref *= zp2 / k;
  const Complex gauss =
      std::exp(-0.5 * (std::norm(bra.z) + std::norm(ket.z)) + ket.z * std::conj(bra.z));
  return pref * gauss;
}

ContinuityResult continuity_distance(Complex z, Complex z_prime, Complex z_second, int /*m*/,
                                     const fock::FockConfig& cfg) {
  const auto k_z = coherent_ket(z, cfg.n_max);
  const auto k_zp = coherent_ket(z_prime, cfg.n_max);
  const auto k_zpb = coherent_ket(std::conj(z_prime), cfg.n_max);
  const auto k_zsb = coherent_ket(std::conj(z_second), cfg.n_max);

  auto abs2 = [](const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    return std::norm(Complex(u.dot(v)));  // |<u|v>|^2, Eigen dot conjugates u
  };

  ContinuityResult out;
  out.numeric = abs2(k_z, k_z) * abs2(k_zpb, k_zpb) + abs2(k_zp, k_zp) * abs2(k_zsb, k_zsb) -
                2.0 * abs2(k_z, k_zp) * abs2(k_zpb, k_zsb);
  out.closed_form =
      2.0 * (1.0 - std::exp(-std::norm(z - z_prime)) * std::exp(-std::norm(z_prime - z_second)));
  return out;
}

double resolution_check(const fock::FockConfig& cfg, int radial_order, int angular_order) {
  const auto radial = numerics::gauss_laguerre(radial_order);
  const auto angular = numerics::angular_rule(angular_order);
  const int block = cfg.n_max / 2;

  // Only entries with equal row indices survive: the member |z,z';m) has a
  // single nonzero row m, so the m-sum contributes delta_{ac} exactly.
  // What remains is the product of a z'-moment and a z-matrix element.
  std::vector<double> zprime_moment(block + 1, 0.0);
  for (int a = 0; a <= block; ++a) {
    double acc = 0.0;
    for (int i = 0; i < radial.order; ++i) {
      double term = radial.weights[i];
      for (int k = 1; k <= a; ++k) term *= radial.nodes[i] / k;
      acc += term;
    }
    zprime_moment[a] = acc;
  }

  Eigen::MatrixXcd z_block = Eigen::MatrixXcd::Zero(block + 1, block + 1);
  std::vector<Complex> pow_cache(block + 1);
  for (int i = 0; i < radial.order; ++i) {
    const double r = std::sqrt(radial.nodes[i]);
    const double scaled = radial.weights[i];  // e^{u} quadrature factor times e^{-|z|^2}
    for (int j = 0; j < angular.order; ++j) {
      const Complex z = std::polar(r, angular.nodes[j]);
      pow_cache[0] = Complex{1.0, 0.0};
      for (int k = 1; k <= block; ++k) pow_cache[k] = pow_cache[k - 1] * z;
      for (int b = 0; b <= block; ++b) {
        for (int d = 0; d <= block; ++d) {
          z_block(b, d) += scaled * pow_cache[b] * std::conj(pow_cache[d]);
        }
      }
    }
  }
  z_block /= static_cast<double>(angular.order);
  std::vector<double> inv_sqrt_fact(block + 1, 1.0);
  for (int k = 1; k <= block; ++k) {
    inv_sqrt_fact[k] = inv_sqrt_fact[k - 1] / std::sqrt(static_cast<double>(k));
  }

  double worst = 0.0;
  for (int a = 0; a <= block; ++a) {
    for (int b = 0; b <= block; ++b) {
      for (int d = 0; d <= block; ++d) {
        const Complex entry =
            zprime_moment[a] * z_block(b, d) * inv_sqrt_fact[b] * inv_sqrt_fact[d];
        const double target = (b == d) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(entry - Complex{target, 0.0}));
      }
    }
  }
  return worst;
}

CSLabel evolve(const CSLabel& label, double t, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  CSLabel out = label;
  out.eta += derived.effective_freq * t;
  return out;
}

fock::HSOperator apply_evolution_phases(const fock::HSOperator& state, double tau) {
  fock::HSOperator out = state;
  const int dim = static_cast<int>(out.coeffs.cols());
  for (int n = 0; n < dim; ++n) {
    out.coeffs.col(n) *= std::polar(1.0, -tau * n);
  }
  return out;
}

ActionResult action_expectation(Complex z, Complex z_prime, const model::ModelParams& params,
                                const fock::FockConfig& cfg) {
  const auto derived = model::derive(params);
  ActionResult out;
  for (int m = 0; m <= cfg.n_max; ++m) {
    const CSLabel label{z, z_prime, m, 0.0};
    const auto state = build_cs(label, cfg);
    out.value += fock::hs_inner(state, fock::apply_shifted_hamiltonian(state, params)).real();
  }
  const double zp2 = std::norm(z_prime);
  out.m_tail_bound = std::exp(zp2) * (1.0 - poisson_partial_sum(zp2, cfg.n_max));
  out.oracle = derived.effective_freq * std::norm(z);
  out.printed_form = derived.effective_freq * std::abs(z);
  return out;
}

Complex meijer_g_1001(Complex w) { return std::exp(-w); }

double density(Complex z0, Complex z, Complex z_prime, int m, double t,
               const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const Complex z0t = z0 * std::polar(1.0, -derived.effective_freq * t);
  const double zp2 = std::norm(z_prime);
  double pref = std::exp(-zp2);
  for (int k = 1; k <= m; ++k) pref *= zp2 / k;
  const double exponent = 2.0 * (z0t * std::conj(z)).real() - std::norm(z) - std::norm(z0);
  return pref * pref * std::exp(exponent);
}

double density_meijer(Complex z0, Complex z, Complex z_prime, int m, double t,
                      const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const Complex z0t = z0 * std::polar(1.0, -derived.effective_freq * t);
  const double zp2 = std::norm(z_prime);
  double pref = std::exp(-zp2);
  for (int k = 1; k <= m; ++k) pref *= zp2 / k;
  const Complex value = meijer_g_1001(-std::conj(z0t) * z) * meijer_g_1001(-z0t * std::conj(z)) /
                        meijer_g_1001(-Complex(std::norm(z) + std::norm(z0t), 0.0));
  return pref * pref * value.real();
}

PndResult pnd_and_mandel(Complex z, Complex z_prime, int m_count, int n_count) {
  if (m_count < 1 || n_count < 1) throw ParameterError("pnd_and_mandel: counts must be >= 1");
  const double z2 = std::norm(z);
  const double zp2 = std::norm(z_prime);
  PndResult out;
  out.table.resize(m_count, n_count);
  double m_weight = std::exp(-zp2);
  for (int m = 0; m < m_count; ++m) {
    if (m > 0) m_weight *= zp2 / m;
    double n_weight = std::exp(-z2);
    for (int n = 0; n < n_count; ++n) {
      if (n > 0) n_weight *= z2 / n;
      out.table(m, n) = m_weight * n_weight;
    }
  }
  const Eigen::VectorXd marginal = out.table.colwise().sum();
  const double mass = marginal.sum();
  double mean = 0.0;
  double second = 0.0;
  for (int n = 0; n < n_count; ++n) {
    mean += n * marginal(n);
    second += static_cast<double>(n) * n * marginal(n);
  }
  mean /= mass;
  second /= mass;
  out.mean = mean;
  out.variance = second - mean * mean;
  out.mandel_q = (mean > 1e-300) ? (out.variance - mean) / mean : 0.0;
  return out;
}

double number_expectation(const fock::HSOperator& state) {
  const auto counted =
      fock::apply_ladder(fock::Ladder::ADag, fock::apply_ladder(fock::Ladder::A, state));
  return fock::hs_inner(state, counted).real() / state.norm_squared();
}

}  // namespace ncland::coherent
