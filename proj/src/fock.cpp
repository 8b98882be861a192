#include "ncland/fock.hpp"

#include <cmath>

#include "ncland/errors.hpp"

namespace ncland::fock {

HSOperator HSOperator::zero(const FockConfig& cfg) {
  if (cfg.n_max < 2) throw ParameterError("FockConfig: n_max must be >= 2");
  HSOperator out;
  out.coeffs = CoeffMatrix::Zero(cfg.n_max + 1, cfg.n_max + 1);
  return out;
}

HSOperator HSOperator::basis_element(const FockConfig& cfg, int m, int n) {
  HSOperator out = zero(cfg);
  if (m < 0 || n < 0 || m > cfg.n_max || n > cfg.n_max) {
    throw ParameterError("basis_element: index outside truncation");
  }
  out.coeffs(m, n) = Complex{1.0, 0.0};
  return out;
}

HSOperator apply_ladder(Ladder which, const HSOperator& state) {
  const int dim = static_cast<int>(state.coeffs.rows());
  HSOperator out;
  out.coeffs = CoeffMatrix::Zero(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      const Complex c = state.coeffs(m, n);
      if (c == Complex{0.0, 0.0}) continue;
      switch (which) {
        case Ladder::A:
          if (n >= 1) out.coeffs(m, n - 1) += std::sqrt(static_cast<double>(n)) * c;
          break;
        case Ladder::ADag:
          if (n + 1 < dim) out.coeffs(m, n + 1) += std::sqrt(static_cast<double>(n + 1)) * c;
          break;
        case Ladder::B:
          if (m >= 1) out.coeffs(m - 1, n) += std::sqrt(static_cast<double>(m)) * c;
          break;
        case Ladder::BDag:
          if (m + 1 < dim) out.coeffs(m + 1, n) += std::sqrt(static_cast<double>(m + 1)) * c;
          break;
      }
    }
  }
  return out;
}

double hamiltonian_eigenvalue(int n, const model::ModelParams& params) {
  if (n < 0) throw ParameterError("hamiltonian_eigenvalue: n must be >= 0");
  const auto derived = model::derive(params);
  return params.hbar * derived.effective_freq * (n + 0.5);
}

HSOperator apply_shifted_hamiltonian(const HSOperator& state, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  HSOperator out = apply_ladder(Ladder::ADag, apply_ladder(Ladder::A, state));
  out.coeffs *= params.hbar * derived.effective_freq;
  return out;
}

HSOperator apply_hamiltonian(const HSOperator& state, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  HSOperator out = apply_shifted_hamiltonian(state, params);
  out.coeffs += 0.5 * params.hbar * derived.effective_freq * state.coeffs;
  return out;
}

Complex hs_inner(const HSOperator& a, const HSOperator& b) {
  if (a.coeffs.rows() != b.coeffs.rows() || a.coeffs.cols() != b.coeffs.cols()) {
    throw ParameterError("hs_inner: shape mismatch");
  }
  return (a.coeffs.conjugate().cwiseProduct(b.coeffs)).sum();
}

double tail_mass(const HSOperator& state) {
  const int last = static_cast<int>(state.coeffs.rows()) - 1;
  double mass = state.coeffs.row(last).squaredNorm() + state.coeffs.col(last).squaredNorm();
  mass -= std::norm(state.coeffs(last, last));  // counted twice
  return mass;
}

}  // namespace ncland::fock
