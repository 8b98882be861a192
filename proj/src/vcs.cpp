#include "ncland/vcs.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "ncland/errors.hpp"
#include "ncland/numerics.hpp"

namespace ncland::vcs {

namespace {

using quaternion::Matrix2;
using quaternion::Quaternion;

Eigen::Vector2cd chi(int j) {
  if (j != 1 && j != 2) throw ParameterError("component index j must be 1 or 2");
  Eigen::Vector2cd v = Eigen::Vector2cd::Zero();
  v(j - 1) = Complex{1.0, 0.0};
  return v;
}

Quaternion conjugate_of(const Quaternion& q) {
  return quaternion::make(q.r, -q.theta, q.phi, q.eta);
}

// Scaled power chain M_k = mat^k / sqrt(k!), k = 0..count-1.
std::vector<Matrix2> power_chain(const Matrix2& mat, int count) {
  std::vector<Matrix2> out(count);
  out[0] = Matrix2::Identity();
  for (int k = 1; k < count; ++k) out[k] = out[k - 1] * mat / std::sqrt(static_cast<double>(k));
  return out;
}

// T(m, n) = Q^n Q'bar^m e^{-i eta n} / sqrt(n! m!), flattened n-major.
std::vector<Matrix2> coefficient_tensor(const QVCSLabel& label, int dim) {
  const auto qn = power_chain(label.q.mat, dim);
  const auto qpb = power_chain(conjugate_of(label.q_prime).mat, dim);
  std::vector<Matrix2> t(static_cast<std::size_t>(dim) * dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      t[static_cast<std::size_t>(m) * dim + n] =
          qn[n] * qpb[m] * std::polar(1.0, -label.eta * n);
    }
  }
  return t;
}

// v(n~, m~) = Qbar^n~ Q'^m~ chi^j / sqrt(n~! m~!) accumulated as
// W = Sum v v^dag, either for the label's j or traced over both.
Matrix2 tilde_weight_matrix(const QVCSLabel& label, int dim, bool sum_over_j) {
  const auto qb = power_chain(conjugate_of(label.q).mat, dim);
  const auto qp = power_chain(label.q_prime.mat, dim);
  Matrix2 w = Matrix2::Zero();
  for (int nt = 0; nt < dim; ++nt) {
    for (int mt = 0; mt < dim; ++mt) {
      const Matrix2 m = qb[nt] * qp[mt];
      if (sum_over_j) {
        w += m * m.adjoint();
      } else {
        const Eigen::Vector2cd v = m * chi(label.j);
        w += v * v.adjoint();
      }
    }
  }
  return w;
}

enum class NAction { Lower, Raise };

// Ladder action on the n index of a flattened Matrix2 tensor, truncating
// exactly like the fock module does.
std::vector<Matrix2> apply_n_ladder(const std::vector<Matrix2>& t, int dim, NAction kind) {
  std::vector<Matrix2> out(t.size(), Matrix2::Zero());
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const Matrix2& c = t[static_cast<std::size_t>(m) * dim + n];
      if (kind == NAction::Lower) {
        if (n >= 1) out[static_cast<std::size_t>(m) * dim + (n - 1)] += std::sqrt(n) * c;
      } else {
        if (n + 1 < dim) out[static_cast<std::size_t>(m) * dim + (n + 1)] += std::sqrt(n + 1.0) * c;
      }
    }
  }
  return out;
}

std::vector<Matrix2> combine(const std::vector<Matrix2>& a, Complex ca,
                             const std::vector<Matrix2>& b, Complex cb) {
  std::vector<Matrix2> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
  return out;
}

// Q_O = Sum_{m,n} T(m,n)^dag (O T)(m,n); expectations are tr(Q_O W)/N.
Matrix2 quadratic_form(const std::vector<Matrix2>& t, const std::vector<Matrix2>& ot) {
  Matrix2 q = Matrix2::Zero();
  for (std::size_t i = 0; i < t.size(); ++i) q += t[i].adjoint() * ot[i];
  return q;
}

}  // namespace

double qvcs_norm_closed(double r, double rho) { return 2.0 * std::exp(2.0 * (r * r + rho * rho)); }

NormalizationResult vcs_normalization(const VCSLabel& label, int n_max) {
  const double r1 = std::abs(label.z1);
  const double r2 = std::abs(label.z2);
  const double rho1 = std::abs(label.zp1_bar);
  const double rho2 = std::abs(label.zp2_bar);

  NormalizationResult out;
  out.closed_form = std::exp(2.0 * (r1 * r1 + rho1 * rho1)) + std::exp(2.0 * (r2 * r2 + rho2 * rho2));

  // Sum_j Sum_{n~,m~} Sum_{m,n} |z_j^n zp_j^m z_j^n~ zp_j^m~|^2 / (n! m! n~! m~!).
  // For diagonal labels the (m, n) block is identical for every (n~, m~),
  // so the quadruple sum factorizes exactly into two double sums.
  const double mags[2][2] = {{r1 * r1, rho1 * rho1}, {r2 * r2, rho2 * rho2}};
  for (const auto& pair : mags) {
    auto double_sum = [&](double a2, double b2) {
      double outer = 1.0;
      double total = 0.0;
      for (int m = 0; m <= n_max; ++m) {
        if (m > 0) outer *= b2 / m;
        double inner = 1.0;
        double row = 1.0;
        for (int n = 1; n <= n_max; ++n) {
          inner *= a2 / n;
          row += inner;
        }
        total += outer * row;
      }
      return total;
    };
    out.brute_force += double_sum(pair[0], pair[1]) * double_sum(pair[0], pair[1]);
  }
  return out;
}

QVCSState build_qvcs(const QVCSLabel& label, const fock::FockConfig& cfg) {
  const int dim = cfg.n_max + 1;
  const double bound = cfg.n_max / 4.0;
  if (label.q.r * label.q.r > bound || label.q_prime.r * label.q_prime.r > bound ||
      label.n_tilde > cfg.n_max || label.m_tilde > cfg.n_max) {
    std::ostringstream msg;
    msg << "build_qvcs: label outside truncation bound (r^2 = " << label.q.r * label.q.r
        << ", rho^2 = " << label.q_prime.r * label.q_prime.r << ", n_max = " << cfg.n_max << ")";
    throw TruncationError(msg.str());
  }
  const auto t = coefficient_tensor(label, dim);
  const auto qb = power_chain(conjugate_of(label.q).mat, label.n_tilde + 1);
  const auto qp = power_chain(label.q_prime.mat, label.m_tilde + 1);
  const Eigen::Vector2cd v = qb[label.n_tilde] * qp[label.m_tilde] * chi(label.j);
  const double scale = 1.0 / std::sqrt(qvcs_norm_closed(label.q.r, label.q_prime.r));

  QVCSState state;
  state.up = Eigen::MatrixXcd::Zero(dim, dim);
  state.down = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const Eigen::Vector2cd c = scale * (t[static_cast<std::size_t>(m) * dim + n] * v);
      state.up(m, n) = c(0);
      state.down(m, n) = c(1);
    }
  }
  return state;
}

double qvcs_family_norm(const QVCSLabel& label, const fock::FockConfig& cfg) {
  const int dim = cfg.n_max + 1;
  const auto t = coefficient_tensor(label, dim);
  const Matrix2 g = quadratic_form(t, t);
  const Matrix2 w = tilde_weight_matrix(label, dim, /*sum_over_j=*/true);
  return (g * w).trace().real() / qvcs_norm_closed(label.q.r, label.q_prime.r);
}

double moment_problem_check(int radial_order, int max_index) {
  if (radial_order < 32) throw ParameterError("moment_problem_check: radial order must be >= 32");
  const auto rule = numerics::gauss_laguerre(radial_order);
  // In u = r^2, v = rho^2 the integral is
  //   Sum_ij w_i w_j u_i^n v_j^m / (n! m!), a pure product of moments.
  std::vector<double> moments(max_index + 1, 0.0);
  for (int k = 0; k <= max_index; ++k) {
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) {
      double term = rule.weights[i];
      for (int p = 1; p <= k; ++p) term *= rule.nodes[i] / p;
      acc += term;
    }
    moments[k] = acc;
  }
  double worst = 0.0;
  for (int n = 0; n <= max_index; ++n) {
    for (int m = 0; m <= max_index; ++m) {
      worst = std::max(worst, std::abs(moments[n] * moments[m] - 1.0));
    }
  }
  return worst;
}

ExpectationReport quadrature_expectations(const QVCSLabel& label,
                                          const model::ModelParams& params,
                                          const fock::FockConfig& cfg) {
  const auto derived = model::derive(params);
  const double big_theta = derived.big_theta;
  const double hbar = params.hbar;
  const double r = label.q.r;
  const double th = label.q.theta;
  const double phi = label.q.phi;

  ExpectationReport report;
  report.closed.px = hbar / std::sqrt(2.0 * big_theta) * r * std::cos(phi) * std::sin(th);
  report.closed.px2 = hbar * hbar / big_theta * (r * r * std::sin(th) * std::sin(th) + 0.25);
  report.closed.py = -hbar / std::sqrt(2.0 * big_theta) * r * std::cos(th);
  report.closed.py2 = hbar * hbar / big_theta * (r * r * std::cos(th) * std::cos(th) + 0.25);
  report.closed.x = std::sqrt(big_theta / 2.0) * r * std::cos(th);
  report.closed.x2 = big_theta * (r * r * std::cos(th) * std::cos(th) + 0.25);
  report.closed.y = std::sqrt(big_theta / 2.0) * r * std::cos(phi) * std::sin(th);
  report.closed.y2 = big_theta * (r * r * std::sin(th) * std::sin(th) + 0.25);

  const int dim = cfg.n_max + 1;
  const auto t = coefficient_tensor(label, dim);
  const Matrix2 w = tilde_weight_matrix(label, dim, /*sum_over_j=*/false);
  const double norm = qvcs_norm_closed(label.q.r, label.q_prime.r);

  const auto lowered = apply_n_ladder(t, dim, NAction::Lower);
  const auto raised = apply_n_ladder(t, dim, NAction::Raise);

  auto expectation = [&](const std::vector<Matrix2>& op_t) {
    return (quadratic_form(t, op_t) * w).trace().real() / norm;
  };

  const Complex one{1.0, 0.0};
  const Complex i_unit{0.0, 1.0};

  // P_X = (-i hbar / sqrt(2 Theta)) (A - Adag), P_Y = (-hbar / sqrt(2 Theta)) (A + Adag)
  const double c_p = hbar / std::sqrt(2.0 * big_theta);
  const auto px_t = combine(lowered, -i_unit * c_p, raised, i_unit * c_p);
  const auto py_t = combine(lowered, Complex{-c_p, 0.0}, raised, Complex{-c_p, 0.0});
  // X = sqrt(Theta/2) (A + Adag), Y = i sqrt(Theta/2) (Adag - A)
  const double c_q = std::sqrt(big_theta / 2.0);
  const auto x_t = combine(lowered, Complex{c_q, 0.0}, raised, Complex{c_q, 0.0});
  const auto y_t = combine(raised, i_unit * c_q, lowered, -i_unit * c_q);

  auto square = [&](const std::vector<Matrix2>& op_t, Complex ca, Complex cr) {
    // apply the same (ca A + cr Adag) combination once more
    return combine(apply_n_ladder(op_t, dim, NAction::Lower), ca,
                   apply_n_ladder(op_t, dim, NAction::Raise), cr);
  };

  report.brute.px = expectation(px_t);
  report.brute.px2 = expectation(square(px_t, -i_unit * c_p, i_unit * c_p));
  report.brute.py = expectation(py_t);
  report.brute.py2 = expectation(square(py_t, Complex{-c_p, 0.0}, Complex{-c_p, 0.0}));
  report.brute.x = expectation(x_t);
  report.brute.x2 = expectation(square(x_t, Complex{c_q, 0.0}, Complex{c_q, 0.0}));
  report.brute.y = expectation(y_t);
  report.brute.y2 = expectation(square(y_t, -i_unit * c_q, i_unit * c_q));
  return report;
}

UncertaintyReport uncertainty_report(const QVCSLabel& label, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const double big_theta = derived.big_theta;
  const double h2 = params.hbar * params.hbar;
  const double r2 = label.q.r * label.q.r;
  const double s2 = std::sin(label.q.theta) * std::sin(label.q.theta);
  const double c2 = std::cos(label.q.theta) * std::cos(label.q.theta);
  const double cp2 = std::cos(label.q.phi) * std::cos(label.q.phi);

  UncertaintyReport out;
  out.dpx2 = h2 / (4.0 * big_theta) * (4.0 * r2 * s2 - 2.0 * r2 * cp2 * s2 + 1.0);
  out.dpy2 = h2 / (2.0 * big_theta) * (r2 * c2 + 0.5);
  out.product_sq = out.dpx2 * out.dpy2;
  out.f_value = (2.0 * r2 * c2 + 1.0) * (4.0 * r2 * s2 - 2.0 * r2 * cp2 * s2 + 1.0);
  out.identity_dev =
      std::abs(out.product_sq - h2 * h2 / (16.0 * big_theta * big_theta) * out.f_value);
  return out;
}

QVCSLabel evolve_qvcs(const QVCSLabel& label, double t, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  QVCSLabel out = label;
  out.q = quaternion::make(label.q.r, label.q.theta - derived.effective_freq * t, label.q.phi,
                           label.q.eta);
  return out;
}

double temporal_density(const QVCSLabel& label0, double theta_probe, double r_probe, double t,
                        int m, double rho, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const double r0 = label0.q.r;
  const double th0 = label0.q.theta - derived.effective_freq * t;
  double rho_pow = 1.0;
  for (int k = 1; k <= m; ++k) rho_pow *= rho * rho / k;

  const double bracket = quaternion::trace_exp_closed_form(r_probe, theta_probe, r0, th0);
  return 2.0 / std::sqrt(qvcs_norm_closed(rho, rho)) * rho_pow * rho_pow * bracket /
         std::sqrt(qvcs_norm_closed(r_probe, r0));
}

double temporal_density_trace_route(const QVCSLabel& label0, double theta_probe, double r_probe,
                                    double t, int m, double rho,
                                    const model::ModelParams& params) {
  const auto derived = model::derive(params);
  double rho_pow = 1.0;
  for (int k = 1; k <= m; ++k) rho_pow *= rho * rho / k;

  // Orthogonal-axis pairing: probe on the polar axis, evolved label on the
  // equator, where the exponential trace reduces to the closed form.
  const auto probe = quaternion::make(r_probe, theta_probe, 0.0, 0.0);
  const auto evolved = quaternion::make(
      label0.q.r, label0.q.theta - derived.effective_freq * t, std::numbers::pi / 2.0, label0.q.eta);
  const double bracket = quaternion::trace_exp_sum(probe, evolved).real();

  return 2.0 / std::sqrt(qvcs_norm_closed(rho, rho)) * rho_pow * rho_pow * bracket /
         std::sqrt(qvcs_norm_closed(r_probe, label0.q.r));
}

}  // namespace ncland::vcs
