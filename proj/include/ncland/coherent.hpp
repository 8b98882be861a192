#pragma once

#include <Eigen/Dense>
#include <complex>

#include "ncland/fock.hpp"
#include "ncland/model.hpp"
#include "ncland/numerics.hpp"

namespace ncland::coherent {

using Complex = std::complex<double>;

/// Label of one member |z, z'bar; m) of the coherent-state family,
/// dressed with the phase-history parameter eta.
struct CSLabel {
  Complex z{0.0, 0.0};
  Complex z_prime{0.0, 0.0};
  int m = 0;
  double eta = 0.0;
};

struct ContinuityResult {
  double numeric = 0.0;
  double closed_form = 0.0;
};

struct ActionResult {
  double value = 0.0;         // brute-force sum over the m family
  double oracle = 0.0;        // omega* |z|^2
  double printed_form = 0.0;  // omega* |z|, kept for the mismatch report
  double m_tail_bound = 0.0;  // Poisson mass dropped by the m truncation
};

struct PndResult {
  Eigen::MatrixXd table;  // (m, n) joint distribution
  double mean = 0.0;      // n-marginal mean
  double variance = 0.0;
  double mandel_q = 0.0;
};

/// Truncated coherent ket on the configuration space: v_n = e^{-|z|^2/2} z^n / sqrt(n!).
Eigen::VectorXcd coherent_ket(Complex z, int n_max);

/// Builds the state with coefficients
///   c_{m',n} = delta_{m',m} e^{-(|z|^2+|z'|^2)/2} conj(z')^m z^n e^{-i eta n} / sqrt(m! n!).
/// Throws TruncationError when the label falls outside |z|^2, |z'|^2 <= n_max/4
/// or the dropped closed-form mass exceeds tail_tolerance.
fock::HSOperator build_cs(const CSLabel& label, const fock::FockConfig& cfg,
                          double tail_tolerance = 1e-12);

/// Closed-form mass lost to the n-truncation for a given label.
double truncation_tail(const CSLabel& label, const fock::FockConfig& cfg);

/// Sum over m of the squared HS norms of the family members; equals 1
/// up to the truncation tail.
double normalization_sum(Complex z, Complex z_prime, const fock::FockConfig& cfg);

/// Numeric overlap of two built states.
Complex overlap(const CSLabel& a, const CSLabel& b, const fock::FockConfig& cfg);

/// Closed form for labels sharing (m, z', eta):
///   e^{-|z'|^2} |z'|^{2m}/m! . e^{-(|z|^2+|z0|^2)/2} e^{z0 conj(z)}.
Complex overlap_closed_form(const CSLabel& bra, const CSLabel& ket);

/// Squared HS distance between the product realizations of the labels
/// (z, z') and (z', z''), against 2 (1 - e^{-|z-z'|^2} e^{-|z'-z''|^2}).
ContinuityResult continuity_distance(Complex z, Complex z_prime, Complex z_second, int m,
                                     const fock::FockConfig& cfg);

/// Reconstructs the identity on H_q from the family and returns the worst
/// deviation |entry - delta| over the interior block (indices <= n_max/2).
double resolution_check(const fock::FockConfig& cfg, int radial_order, int angular_order);

/// Temporal stability: physical time t advances the label phase by omega* t.
CSLabel evolve(const CSLabel& label, double t, const model::ModelParams& params);

/// Applies e^{-i n tau} per column, i.e. the dimensionless evolution
/// operator with spectrum e_n = n. Used to cross-check evolve().
fock::HSOperator apply_evolution_phases(const fock::HSOperator& state, double tau);

/// Brute-force Sum_m (z,z';m| H_shift |z,z';m) on the truncated basis.
ActionResult action_expectation(Complex z, Complex z_prime, const model::ModelParams& params,
                                const fock::FockConfig& cfg);

/// G^{1,0}_{0,1}(w | 0) = e^{-w}; the only Meijer-G value the density needs.
Complex meijer_g_1001(Complex w);

/// Probability density of |z0,z';m) rotated for time t, probed at z.
double density(Complex z0, Complex z, Complex z_prime, int m, double t,
               const model::ModelParams& params);

/// Same value assembled through the Meijer-G representation.
double density_meijer(Complex z0, Complex z, Complex z_prime, int m, double t,
                      const model::ModelParams& params);

/// Joint photon-number table with its n-marginal statistics.
PndResult pnd_and_mandel(Complex z, Complex z_prime, int m_count, int n_count);

/// <Adag A> / <1> of a state; Poisson mean |z|^2 for a coherent column.
double number_expectation(const fock::HSOperator& state);

}  // namespace ncland::coherent
