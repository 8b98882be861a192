#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ncland/model.hpp"

namespace ncland::classical {

struct PhaseSpacePoint {
  double x1 = 0.0;
  double x2 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double t = 0.0;
};

/// Gradient order: (d/dx1, d/dx2, d/dp1, d/dp2).
using Gradient = std::array<double, 4>;

/// A phase-space function with its analytic gradient. Analytic gradients
/// keep the bracket algebra checks exact up to rounding.
struct Observable {
  std::function<double(const PhaseSpacePoint&)> value;
  std::function<Gradient(const PhaseSpacePoint&)> gradient;

  /// Max |analytic - central difference| over the four slots.
  double gradient_self_check(const PhaseSpacePoint& pt, double h = 1e-5) const;
};

struct Derivatives {
  double dx1 = 0.0;
  double dx2 = 0.0;
  double dp1 = 0.0;
  double dp2 = 0.0;
};

struct ConservedPair {
  double P1 = 0.0;
  double P2 = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
};

struct AlgebraReport {
  double max_dev_pp = 0.0;   // {P1,P2} vs -M* omega*
  double max_dev_kk = 0.0;   // {K1,K2} vs (1 - e theta B) M* omega*
  double max_dev_pk = 0.0;   // all four {Pi,Kj} vs 0
  PhaseSpacePoint worst_point;
  const char* worst_pair = "";
  bool pass = false;
};

using EField = std::array<double, 2>;

/// Poisson bracket of the exotic Landau phase space. The canonical,
/// theta and e*B terms all carry the common M/M* normalization so the
/// fundamental brackets come out as
///   {x1,x2} = (M/M*) theta,  {xi,pj} = (M/M*) delta,  {p1,p2} = (M/M*) eB.
double poisson_bracket(const Observable& f, const Observable& g,
                       const PhaseSpacePoint& pt, const model::ModelParams& params);

/// Flow of the bracket for H = p^2/2M + e V with uniform E = -grad V:
///   M* xdot_i = p_i - M e theta eps^{ij} E_j,
///   pdot_i    = e B eps^{ij} xdot_j + e E_i.
Derivatives equations_of_motion(const PhaseSpacePoint& pt, const model::ModelParams& params,
                                const EField& e_field);

/// Fixed-step RK4 trajectory, (steps + 1) points including the start.
std::vector<PhaseSpacePoint> integrate(const PhaseSpacePoint& start,
                                       const model::ModelParams& params, const EField& e_field,
                                       double dt, int steps);

/// Conserved quantities of the E = 0 flow:
///   P_i = M*(xdot_i - omega* eps^{ij} x_j),  K_i = (M*^2/M) [R(omega* t) xdot]_i
/// with R(a) = ((cos a, -sin a), (sin a, cos a)).
ConservedPair conserved_quantities(const PhaseSpacePoint& pt, const model::ModelParams& params);

/// H = p^2 / 2M + e V with V = -E.x (uniform field).
double hamiltonian_value(const PhaseSpacePoint& pt, const model::ModelParams& params,
                         const EField& e_field);

/// Checks {P1,P2}, {K1,K2} and the four {Pi,Kj} against their closed
/// forms at every sample point, via analytic-gradient observables.
AlgebraReport verify_charge_algebra(const model::ModelParams& params,
                                    const std::vector<PhaseSpacePoint>& sample_points,
                                    double tolerance = 1e-8);

/// Observables for the conserved charges at fixed evaluation time
/// (the rotation R(omega* t) enters K's gradient explicitly).
Observable observable_P(int i, const model::ModelParams& params);
Observable observable_K(int i, const model::ModelParams& params);
Observable observable_coordinate(int slot);  // slot 0..3 -> x1,x2,p1,p2

}  // namespace ncland::classical
