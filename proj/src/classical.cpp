#include "ncland/classical.hpp"

#include <cmath>

#include "ncland/errors.hpp"

namespace ncland::classical {

namespace {

PhaseSpacePoint shifted(PhaseSpacePoint pt, int slot, double h) {
  switch (slot) {
    case 0: pt.x1 += h; break;
    case 1: pt.x2 += h; break;
    case 2: pt.p1 += h; break;
    default: pt.p2 += h; break;
  }
  return pt;
}

}  // namespace

double Observable::gradient_self_check(const PhaseSpacePoint& pt, double h) const {
  const Gradient g = gradient(pt);
  double worst = 0.0;
  for (int slot = 0; slot < 4; ++slot) {
    const double fd = (value(shifted(pt, slot, h)) - value(shifted(pt, slot, -h))) / (2.0 * h);
    worst = std::max(worst, std::abs(fd - g[slot]));
  }
  return worst;
}

double poisson_bracket(const Observable& f, const Observable& g,
                       const PhaseSpacePoint& pt, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const double scale = params.mass / derived.effective_mass;
  const double eb = params.charge * params.b_field;
  const Gradient df = f.gradient(pt);
  const Gradient dg = g.gradient(pt);
  const double canonical = df[0] * dg[2] + df[1] * dg[3] - dg[0] * df[2] - dg[1] * df[3];
  const double theta_term = params.theta * (df[0] * dg[1] - dg[0] * df[1]);
  const double field_term = eb * (df[2] * dg[3] - dg[2] * df[3]);
  return scale * (canonical + theta_term + field_term);
}

Derivatives equations_of_motion(const PhaseSpacePoint& pt, const model::ModelParams& params,
                                const EField& e_field) {
  const auto derived = model::derive(params);
  const double m_star = derived.effective_mass;
  const double me_theta = params.mass * params.charge * params.theta;
  const double eb = params.charge * params.b_field;
  Derivatives d;
  // eps^{12} = 1: eps^{ij} E_j is (E2, -E1).
  d.dx1 = (pt.p1 - me_theta * e_field[1]) / m_star;
  d.dx2 = (pt.p2 + me_theta * e_field[0]) / m_star;
  d.dp1 = eb * d.dx2 + params.charge * e_field[0];
  d.dp2 = -eb * d.dx1 + params.charge * e_field[1];
  return d;
}

std::vector<PhaseSpacePoint> integrate(const PhaseSpacePoint& start,
                                       const model::ModelParams& params, const EField& e_field,
                                       double dt, int steps) {
  if (!(dt > 0.0)) throw ParameterError("integrate: dt must be positive");
  if (steps < 1) throw ParameterError("integrate: steps must be >= 1");
  std::vector<PhaseSpacePoint> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(start);

  auto add = [](const PhaseSpacePoint& pt, const Derivatives& d, double h) {
    PhaseSpacePoint out = pt;
    out.x1 += h * d.dx1;
    out.x2 += h * d.dx2;
    out.p1 += h * d.dp1;
    out.p2 += h * d.dp2;
    out.t += h;
    return out;
  };

  PhaseSpacePoint pt = start;
  for (int step = 0; step < steps; ++step) {
    const Derivatives k1 = equations_of_motion(pt, params, e_field);
    const Derivatives k2 = equations_of_motion(add(pt, k1, dt / 2.0), params, e_field);
    const Derivatives k3 = equations_of_motion(add(pt, k2, dt / 2.0), params, e_field);
    const Derivatives k4 = equations_of_motion(add(pt, k3, dt), params, e_field);
    PhaseSpacePoint next = pt;
    next.x1 += dt / 6.0 * (k1.dx1 + 2.0 * k2.dx1 + 2.0 * k3.dx1 + k4.dx1);
    next.x2 += dt / 6.0 * (k1.dx2 + 2.0 * k2.dx2 + 2.0 * k3.dx2 + k4.dx2);
    next.p1 += dt / 6.0 * (k1.dp1 + 2.0 * k2.dp1 + 2.0 * k3.dp1 + k4.dp1);
    next.p2 += dt / 6.0 * (k1.dp2 + 2.0 * k2.dp2 + 2.0 * k3.dp2 + k4.dp2);
    next.t += dt;
    trajectory.push_back(next);
    pt = next;
  }
  return trajectory;
}

ConservedPair conserved_quantities(const PhaseSpacePoint& pt, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const Derivatives d = equations_of_motion(pt, params, {0.0, 0.0});
  const double m_star = derived.effective_mass;
  const double w_star = derived.effective_freq;
  ConservedPair out;
  out.P1 = m_star * (d.dx1 - w_star * pt.x2);
  out.P2 = m_star * (d.dx2 + w_star * pt.x1);
  const double angle = w_star * pt.t;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double scale = m_star * m_star / params.mass;
  out.K1 = scale * (c * d.dx1 - s * d.dx2);
  out.K2 = scale * (s * d.dx1 + c * d.dx2);
  return out;
}

double hamiltonian_value(const PhaseSpacePoint& pt, const model::ModelParams& params,
                         const EField& e_field) {
  const double kinetic = (pt.p1 * pt.p1 + pt.p2 * pt.p2) / (2.0 * params.mass);
  const double potential = -(e_field[0] * pt.x1 + e_field[1] * pt.x2);
  return kinetic + params.charge * potential;
}

Observable observable_coordinate(int slot) {
  Observable obs;
  obs.value = [slot](const PhaseSpacePoint& pt) {
    switch (slot) {
      case 0: return pt.x1;
      case 1: return pt.x2;
      case 2: return pt.p1;
      default: return pt.p2;
    }
  };
  obs.gradient = [slot](const PhaseSpacePoint&) {
    Gradient g{0.0, 0.0, 0.0, 0.0};
    g[slot] = 1.0;
    return g;
  };
  return obs;
}

Observable observable_P(int i, const model::ModelParams& params) {
  // P1 = p1 - eB x2, P2 = p2 + eB x1 (E = 0 form, M* omega* = eB).
  const double eb = params.charge * params.b_field;
  Observable obs;
  if (i == 1) {
    obs.value = [eb](const PhaseSpacePoint& pt) { return pt.p1 - eb * pt.x2; };
    obs.gradient = [eb](const PhaseSpacePoint&) { return Gradient{0.0, -eb, 1.0, 0.0}; };
  } else {
    obs.value = [eb](const PhaseSpacePoint& pt) { return pt.p2 + eb * pt.x1; };
    obs.gradient = [eb](const PhaseSpacePoint&) { return Gradient{eb, 0.0, 0.0, 1.0}; };
  }
  return obs;
}

Observable observable_K(int i, const model::ModelParams& params) {
  const auto derived = model::derive(params);
  const double scale = derived.effective_mass / params.mass;
  const double w_star = derived.effective_freq;
  Observable obs;
  if (i == 1) {
    obs.value = [scale, w_star](const PhaseSpacePoint& pt) {
      return scale * (std::cos(w_star * pt.t) * pt.p1 - std::sin(w_star * pt.t) * pt.p2);
    };
    obs.gradient = [scale, w_star](const PhaseSpacePoint& pt) {
      return Gradient{0.0, 0.0, scale * std::cos(w_star * pt.t), -scale * std::sin(w_star * pt.t)};
    };
  } else {
    obs.value = [scale, w_star](const PhaseSpacePoint& pt) {
      return scale * (std::sin(w_star * pt.t) * pt.p1 + std::cos(w_star * pt.t) * pt.p2);
    };
    obs.gradient = [scale, w_star](const PhaseSpacePoint& pt) {
      return Gradient{0.0, 0.0, scale * std::sin(w_star * pt.t), scale * std::cos(w_star * pt.t)};
    };
  }
  return obs;
}

AlgebraReport verify_charge_algebra(const model::ModelParams& params,
                                    const std::vector<PhaseSpacePoint>& sample_points,
                                    double tolerance) {
  const auto derived = model::derive(params);
  const double factor = 1.0 - params.charge * params.theta * params.b_field;
  const double pp_target = -derived.effective_mass * derived.effective_freq;
  const double kk_target = factor * derived.effective_mass * derived.effective_freq;

  const Observable P1 = observable_P(1, params);
  const Observable P2 = observable_P(2, params);
  const Observable K1 = observable_K(1, params);
  const Observable K2 = observable_K(2, params);

  AlgebraReport report;
  for (const auto& pt : sample_points) {
    const double dev_pp = std::abs(poisson_bracket(P1, P2, pt, params) - pp_target);
    const double dev_kk = std::abs(poisson_bracket(K1, K2, pt, params) - kk_target);
    double dev_pk = 0.0;
    const Observable* charges_p[2] = {&P1, &P2};
    const Observable* charges_k[2] = {&K1, &K2};
    for (const auto* p : charges_p) {
      for (const auto* k : charges_k) {
        dev_pk = std::max(dev_pk, std::abs(poisson_bracket(*p, *k, pt, params)));
      }
    }
    if (dev_pp > report.max_dev_pp) {
      report.max_dev_pp = dev_pp;
      report.worst_point = pt;
      report.worst_pair = "{P1,P2}";
    }
    if (dev_kk > report.max_dev_kk) {
      report.max_dev_kk = dev_kk;
      if (dev_kk > report.max_dev_pp) {
        report.worst_point = pt;
        report.worst_pair = "{K1,K2}";
      }
    }
    if (dev_pk > report.max_dev_pk) {
      report.max_dev_pk = dev_pk;
      if (dev_pk > std::max(report.max_dev_pp, report.max_dev_kk)) {
        report.worst_point = pt;
        report.worst_pair = "{Pi,Kj}";
      }
    }
  }
  report.pass = report.max_dev_pp <= tolerance && report.max_dev_kk <= tolerance &&
                report.max_dev_pk <= tolerance;
  return report;
}

}  // namespace ncland::classical
