#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ncland/model.hpp"

namespace ncland::fock {

using Complex = std::complex<double>;
using CoeffMatrix = Eigen::MatrixXcd;

/// Truncation of the |m,n) = |m><n| ket-bra basis: both indices run 0..n_max.
struct FockConfig {
  int n_max = 2;
};

/// Element of the quantum Hilbert space H_q: coeffs(m, n) multiplies |m,n).
/// The basis is orthonormal under the Hilbert-Schmidt inner product, so
/// norms and overlaps are plain coefficient sums.
struct HSOperator {
  CoeffMatrix coeffs;

  static HSOperator zero(const FockConfig& cfg);
  static HSOperator basis_element(const FockConfig& cfg, int m, int n);

  int n_max() const { return static_cast<int>(coeffs.rows()) - 1; }
  double norm_squared() const { return coeffs.squaredNorm(); }
};

enum class Ladder { A, ADag, B, BDag };

/// Ladder action in the truncated basis:
///   A |m,n) = sqrt(n) |m,n-1),   Adag |m,n) = sqrt(n+1) |m,n+1),
///   B |m,n) = sqrt(m) |m-1,n),   Bdag |m,n) = sqrt(m+1) |m+1,n).
/// Coefficients pushed past n_max are dropped silently; see tail_mass.
HSOperator apply_ladder(Ladder which, const HSOperator& state);

/// E_n = hbar omega* (n + 1/2); independent of the m index.
double hamiltonian_eigenvalue(int n, const model::ModelParams& params);

/// Full Hamiltonian hbar omega* (Adag A + 1/2) applied to a state.
HSOperator apply_hamiltonian(const HSOperator& state, const model::ModelParams& params);

/// Shifted Hamiltonian hbar omega* Adag A (spectrum hbar omega* n).
HSOperator apply_shifted_hamiltonian(const HSOperator& state, const model::ModelParams& params);

/// tr[a^dag b] over the truncated basis; conjugate-linear in a.
/// Throws ParameterError on shape mismatch.
Complex hs_inner(const HSOperator& a, const HSOperator& b);

/// Squared-coefficient mass sitting on the truncation boundary
/// (last row plus last column); a cheap proxy for truncation pressure.
double tail_mass(const HSOperator& state);

}  // namespace ncland::fock
