#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>

#include "ncland/numerics.hpp"

namespace ncland::wigner {

using Complex = std::complex<double>;

/// Orthonormal Hermite functions psi_k = h_k(x) e^{-x^2/2} with the
/// polynomial parts h_k kept separate so Gauss-Hermite grids can absorb
/// the Gaussian into their weight.
struct HermiteBasis {
  int k_max = 0;
  numerics::HermiteRule rule;

  explicit HermiteBasis(int k_max_, int quadrature_order = 96);

  /// h_0..h_k at x (normalized polynomial parts).
  Eigen::VectorXd poly_values(double x) const;
  /// psi_k(x), including the Gaussian.
  double psi(int k, double x) const;
  /// Quadrature Gram matrix of the psi_k; identity up to rounding.
  Eigen::MatrixXd gram() const;
};

/// Finite-rank element of B_2: coeffs(k, l) multiplies |psi_k><psi_l|.
struct B2Element {
  Eigen::MatrixXcd coeffs;
};

/// <psi_k | U(x,y) psi_l> with (U(x,y) f)(xi) = e^{-i x (xi - y/2)} f(xi - y),
/// evaluated by Gauss-Hermite quadrature.
Complex weyl_matrix_element(const HermiteBasis& basis, int k, int l, double x, double y);

/// All <psi_k | U(x,y) psi_l> for k, l <= k_max in one pass over the nodes.
Eigen::MatrixXcd weyl_table(const HermiteBasis& basis, double x, double y);

/// (W X)(x, y) = (2 pi)^{-1/2} Tr[U(x,y)^* X].
Complex wigner_function(const HermiteBasis& basis, const B2Element& x_elem, double x, double y);

/// Scaled Gauss-Hermite grid over the (x, y) plane with the Weyl tables
/// cached per node, so L^2 pairings cost one coefficient sweep per element.
class WignerL2Grid {
 public:
  WignerL2Grid(const HermiteBasis& basis, int grid_order = 48);

  /// <W X, W Y>_{L^2}; equals <X, Y>_HS up to quadrature error.
  Complex inner(const B2Element& x_elem, const B2Element& y_elem) const;

 private:
  std::vector<Eigen::MatrixXcd> conj_tables_;
  std::vector<double> weights_;
};

/// One-shot convenience wrapper around WignerL2Grid.
Complex wigner_l2_inner(const HermiteBasis& basis, const B2Element& x_elem,
                        const B2Element& y_elem, int grid_order = 48);

/// HS inner product of two B2 elements.
Complex b2_inner(const B2Element& a, const B2Element& b);

/// Antiunitary J(|phi><psi|) = |psi><phi|: the conjugate transpose.
B2Element map_J(const B2Element& x_elem);

/// Matrix of W between the truncated B2 basis and the sqrt(2)-dilated
/// 2D Hermite basis (which spans the image exactly); W^{-1} is its adjoint.
Eigen::MatrixXcd wigner_matrix(const HermiteBasis& basis, int codomain_k_max, int grid_order = 48);

/// Basis tuple |n, m, n~, m~) of H_q (x) H_q.
struct BasisTuple {
  int n = 0;
  int m = 0;
  int n_tilde = 0;
  int m_tilde = 0;

  bool operator==(const BasisTuple&) const = default;
};

/// V sends |n, m, n~, m~) to the Hermite tensor Psi_{n,m,n~,m~}; as both
/// bases are orthonormal this is a relabeling, and Vtilde inverts it.
BasisTuple map_V(const BasisTuple& t, int k_max);
BasisTuple map_V_tilde(const BasisTuple& t, int k_max);

/// The 6D angular integral of the appendix, evaluated by exact separation
/// into two 3D blocks:
///   Int sin(phi) e^{-i d1 theta sigma(n)} e^{+i d2 gamma sigma~(k)} over
///   (phi, eta, theta) x (varphi, varrho, gamma).
/// Equals 64 pi^4 I for (d1, d2) = (0, 0) and vanishes otherwise.
Eigen::Matrix2cd angular_orthogonality(int delta1, int delta2, int phi_points = 256,
                                       int periodic_order = 64);

/// Assembles the diagonal/off-diagonal entries of the mapped resolution of
/// the identity on a truncated C^2 (x) H^{(x)4} block from the angular
/// branches, the radial moment problems and the Hermite Gram matrix.
/// Returns the worst deviation from the identity.
double mapped_resolution_check(int k_max, int radial_order = 64, int phi_points = 256,
                               int periodic_order = 64);

}  // namespace ncland::wigner
