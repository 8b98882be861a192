#include "ncland/wigner.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ncland/errors.hpp"
#include "ncland/quaternion.hpp"

namespace ncland::wigner {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

Eigen::VectorXd poly_values_at(int k_max, double x) {
  Eigen::VectorXd h(k_max + 1);
  h(0) = std::pow(kPi, -0.25);
  if (k_max >= 1) h(1) = std::sqrt(2.0) * x * h(0);
  for (int k = 1; k < k_max; ++k) {
    h(k + 1) = std::sqrt(2.0 / (k + 1.0)) * x * h(k) - std::sqrt(k / (k + 1.0)) * h(k - 1);
  }
  return h;
}

}  // namespace

HermiteBasis::HermiteBasis(int k_max_, int quadrature_order)
    : k_max(k_max_), rule(numerics::gauss_hermite(quadrature_order)) {
  if (k_max_ < 0) throw ParameterError("HermiteBasis: k_max must be >= 0");
}

Eigen::VectorXd HermiteBasis::poly_values(double x) const { return poly_values_at(k_max, x); }

double HermiteBasis::psi(int k, double x) const {
  if (k < 0 || k > k_max) throw ParameterError("HermiteBasis::psi: index out of range");
  return poly_values_at(k, x)(k) * std::exp(-0.5 * x * x);
}

Eigen::MatrixXd HermiteBasis::gram() const {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(k_max + 1, k_max + 1);
  for (int i = 0; i < rule.order; ++i) {
    const Eigen::VectorXd h = poly_values(rule.nodes[i]);
    g += rule.weights[i] * h * h.transpose();
  }
  return g;
}

Eigen::MatrixXcd weyl_table(const HermiteBasis& basis, double x, double y) {
  // After u = xi - y/2 the integrand is e^{-u^2} e^{-y^2/4}
  // h_k(u + y/2) h_l(u - y/2) e^{-i x u}; one node pass fills every (k, l).
  const int dim = basis.k_max + 1;
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(dim, dim);
  for (int i = 0; i < basis.rule.order; ++i) {
    const double u = basis.rule.nodes[i];
    const Eigen::VectorXd hp = poly_values_at(basis.k_max, u + 0.5 * y);
    const Eigen::VectorXd hm = poly_values_at(basis.k_max, u - 0.5 * y);
    const Complex phase = basis.rule.weights[i] * std::polar(1.0, -x * u);
    acc.noalias() += phase * (hp * hm.transpose()).cast<Complex>();
  }
  return std::exp(-0.25 * y * y) * acc;
}

Complex weyl_matrix_element(const HermiteBasis& basis, int k, int l, double x, double y) {
  if (k < 0 || l < 0 || k > basis.k_max || l > basis.k_max) {
    throw ParameterError("weyl_matrix_element: index out of range");
  }
  Complex acc{0.0, 0.0};
  for (int i = 0; i < basis.rule.order; ++i) {
    const double u = basis.rule.nodes[i];
    const double hk = poly_values_at(k, u + 0.5 * y)(k);
    const double hl = poly_values_at(l, u - 0.5 * y)(l);
    acc += basis.rule.weights[i] * hk * hl * std::polar(1.0, -x * u);
  }
  return std::exp(-0.25 * y * y) * acc;
}

Complex wigner_function(const HermiteBasis& basis, const B2Element& x_elem, double x, double y) {
  const Eigen::MatrixXcd table = weyl_table(basis, x, y);
  return (x_elem.coeffs.cwiseProduct(table.conjugate())).sum() / std::sqrt(2.0 * kPi);
}

Complex b2_inner(const B2Element& a, const B2Element& b) {
  return (a.coeffs.conjugate().cwiseProduct(b.coeffs)).sum();
}

WignerL2Grid::WignerL2Grid(const HermiteBasis& basis, int grid_order) {
  // Substitute x = sqrt(2) s so the pairing's Gaussian e^{-(x^2+y^2)/2}
  // matches the e^{-s^2-t^2} Hermite weight; the leftover is polynomial.
  const auto rule = numerics::gauss_hermite(grid_order);
  const double root2 = std::sqrt(2.0);
  conj_tables_.reserve(static_cast<std::size_t>(rule.order) * rule.order);
  weights_.reserve(conj_tables_.capacity());
  for (int i = 0; i < rule.order; ++i) {
    for (int j = 0; j < rule.order; ++j) {
      const double unweight =
          std::exp(rule.nodes[i] * rule.nodes[i] + rule.nodes[j] * rule.nodes[j]);
      weights_.push_back(2.0 * rule.weights[i] * rule.weights[j] * unweight);
      conj_tables_.push_back(
          weyl_table(basis, root2 * rule.nodes[i], root2 * rule.nodes[j]).conjugate() /
          std::sqrt(2.0 * kPi));
    }
  }
}

Complex WignerL2Grid::inner(const B2Element& x_elem, const B2Element& y_elem) const {
  Complex acc{0.0, 0.0};
  for (std::size_t p = 0; p < conj_tables_.size(); ++p) {
    const Complex wx = (x_elem.coeffs.cwiseProduct(conj_tables_[p])).sum();
    const Complex wy = (y_elem.coeffs.cwiseProduct(conj_tables_[p])).sum();
    acc += weights_[p] * std::conj(wx) * wy;
  }
  return acc;
}

Complex wigner_l2_inner(const HermiteBasis& basis, const B2Element& x_elem,
                        const B2Element& y_elem, int grid_order) {
  return WignerL2Grid(basis, grid_order).inner(x_elem, y_elem);
}

B2Element map_J(const B2Element& x_elem) {
  B2Element out;
  out.coeffs = x_elem.coeffs.adjoint();
  return out;
}

Eigen::MatrixXcd wigner_matrix(const HermiteBasis& basis, int codomain_k_max, int grid_order) {
  const int dom = basis.k_max + 1;
  const int cod = codomain_k_max + 1;
  const auto rule = numerics::gauss_hermite(grid_order);
  const double root2 = std::sqrt(2.0);

  // Codomain basis: phi_{jk}(x, y) = 2^{-1/2} psi_j(x/sqrt 2) psi_k(y/sqrt 2);
  // at the substituted nodes the psi arguments are the raw Hermite nodes.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(cod * cod, dom * dom);
  std::vector<Eigen::VectorXd> polys(rule.order);
  for (int i = 0; i < rule.order; ++i) polys[i] = poly_values_at(codomain_k_max, rule.nodes[i]);

  for (int i = 0; i < rule.order; ++i) {
    for (int j = 0; j < rule.order; ++j) {
      const double px = root2 * rule.nodes[i];
      const double py = root2 * rule.nodes[j];
      const Eigen::MatrixXcd conj_table = weyl_table(basis, px, py).conjugate();
      // e^{+s^2+t^2} from unweighting, e^{-(s^2+t^2)/2} from the phi pair,
      // jacobian 2, phi normalization 1/sqrt(2): net sqrt(2) e^{(s^2+t^2)/2}.
      const double half_gauss = std::sqrt(2.0) *
          std::exp(0.5 * (rule.nodes[i] * rule.nodes[i] + rule.nodes[j] * rule.nodes[j]));
      const double common = rule.weights[i] * rule.weights[j] * half_gauss / std::sqrt(2.0 * kPi);
      for (int a = 0; a < dom; ++a) {
        for (int b = 0; b < dom; ++b) {
          const Complex w = common * conj_table(a, b);
          for (int pj = 0; pj < cod; ++pj) {
            for (int pk = 0; pk < cod; ++pk) {
              m(pj * cod + pk, a * dom + b) += polys[i](pj) * polys[j](pk) * w;
            }
          }
        }
      }
    }
  }
  return m;
}

BasisTuple map_V(const BasisTuple& t, int k_max) {
  if (t.n > k_max || t.m > k_max || t.n_tilde > k_max || t.m_tilde > k_max || t.n < 0 || t.m < 0 ||
      t.n_tilde < 0 || t.m_tilde < 0) {
    throw ParameterError("map_V: index overflow");
  }
  return t;  // Psi_{n,m,n~,m~} carries the same labels; V is a relabeling.
}

BasisTuple map_V_tilde(const BasisTuple& t, int k_max) { return map_V(t, k_max); }

Eigen::Matrix2cd angular_orthogonality(int delta1, int delta2, int phi_points,
                                       int periodic_order) {
  if (std::abs(delta1) > 10 || std::abs(delta2) > 10) {
    throw ParameterError("angular_orthogonality: |delta| must be <= 10");
  }
  // Each 3D block integrates sin(phi) e^{+-i delta angle sigma(phi, eta)}
  // = cos(delta angle) I -+ i sin(delta angle) sigma over its own angles.
  auto block = [&](int delta, double sign) {
    Eigen::Matrix2cd acc = Eigen::Matrix2cd::Zero();
    const double dphi = kPi / phi_points;
    const double dang = 2.0 * kPi / periodic_order;
    for (int ip = 0; ip <= phi_points; ++ip) {
      const double phi = ip * dphi;
      double simpson_w = (ip == 0 || ip == phi_points) ? 1.0 : (ip % 2 ? 4.0 : 2.0);
      simpson_w *= dphi / 3.0;
      for (int ie = 0; ie < periodic_order; ++ie) {
        const double eta = ie * dang;
        const Eigen::Matrix2cd sig = quaternion::sigma(phi, eta);
        for (int it = 0; it < periodic_order; ++it) {
          const double angle = delta * (it * dang);
          acc += simpson_w * dang * dang * std::sin(phi) *
                 (std::cos(angle) * Eigen::Matrix2cd::Identity() +
                  sign * kI * std::sin(angle) * sig);
        }
      }
    }
    return acc;
  };
  return block(delta1, -1.0) * block(delta2, 1.0);
}

double mapped_resolution_check(int k_max, int radial_order, int phi_points, int periodic_order) {
  if (k_max > 4) throw ParameterError("mapped_resolution_check: k_max must be <= 4");
  const auto rule = numerics::gauss_laguerre(radial_order);

  // Moment factors 4 Int Int e^{-(r^2+rho^2)} r^{2a} rho^{2b} / (a! b!) r dr rho drho,
  // each exactly 1 under the u = r^2 substitution.
  std::vector<double> moment(2 * k_max + 1, 0.0);
  for (int a = 0; a <= 2 * k_max; ++a) {
    double acc = 0.0;
    for (int i = 0; i < rule.order; ++i) {
      double term = rule.weights[i];
      for (int p = 1; p <= a; ++p) term *= rule.nodes[i] / p;
      acc += term;
    }
    moment[a] = acc;
  }
  auto radial_pair = [&](int a, int b) { return moment[a] * moment[b]; };

  // Angular branches, normalized by the stated 64 pi^4 value.
  const double norm4 = 64.0 * std::pow(kPi, 4);
  const Eigen::Matrix2cd diag_branch =
      angular_orthogonality(0, 0, phi_points, periodic_order) / norm4;

  const HermiteBasis basis(k_max);
  const Eigen::MatrixXd gram = basis.gram();

  double worst = 0.0;
  // Diagonal entries: both measure copies sit on the (0,0) angular branch;
  // the four Hermite factors contribute their quadrature norms.
  for (int n = 0; n <= k_max; ++n) {
    for (int m = 0; m <= k_max; ++m) {
      for (int nt = 0; nt <= k_max; ++nt) {
        for (int mt = 0; mt <= k_max; ++mt) {
          const double herm = gram(n, n) * gram(m, m) * gram(nt, nt) * gram(mt, mt);
          const Complex entry = diag_branch(0, 0) * diag_branch(0, 0) * radial_pair(n, m) *
                                radial_pair(nt, mt) * herm;
          worst = std::max(worst, std::abs(entry - Complex{1.0, 0.0}));
          // chi^1 / chi^2 mixing inside one branch matrix.
          worst = std::max(worst, std::abs(diag_branch(0, 1)));
          worst = std::max(worst, std::abs(diag_branch(1, 0)));
        }
      }
    }
  }
  // Off-diagonal entries: a nonzero index offset lands on a vanishing
  // angular branch; Hermite cross terms vanish by orthogonality.
  for (int d1 = 1; d1 <= k_max; ++d1) {
    const Eigen::Matrix2cd off1 = angular_orthogonality(d1, 0, phi_points, periodic_order) / norm4;
    const Eigen::Matrix2cd off2 = angular_orthogonality(0, d1, phi_points, periodic_order) / norm4;
    worst = std::max(worst, off1.cwiseAbs().maxCoeff());
    worst = std::max(worst, off2.cwiseAbs().maxCoeff());
  }
  for (int a = 0; a <= k_max; ++a) {
    for (int b = 0; b < a; ++b) {
      worst = std::max(worst, std::abs(gram(a, b)));
    }
  }
  return worst;
}

}  // namespace ncland::wigner
