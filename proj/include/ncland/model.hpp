#pragma once

#include <string>

namespace ncland::model {

/// Physical inputs of the exotic Landau model. hbar is kept explicit
/// because the momentum-space kernels carry hbar^2 factors; it defaults
/// to 1 like everything downstream assumes unless told otherwise.
struct ModelParams {
  double mass = 1.0;      // M > 0
  double charge = 1.0;    // e != 0
  double b_field = 1.0;   // B
  double theta = 0.0;     // noncommutativity, length^2
  double hbar = 1.0;
};

/// Constants derived from ModelParams. All relations are exact arithmetic:
///   M* = M (1 - e B theta),  omega = e B / M,  omega* = e B / M*,
///   Theta = 1 / (e B (1 - e B theta)),  kappa = theta M^2.
struct DerivedParams {
  double effective_mass = 0.0;   // M*
  double cyclotron = 0.0;        // omega
  double effective_freq = 0.0;   // omega*
  double big_theta = 0.0;        // Theta
  double kappa = 0.0;
};

/// Throws ParameterError for M <= 0 or e == 0, CriticalPointError when
/// |1 - e B theta| < 1e-12 (vanishing effective mass).
DerivedParams derive(const ModelParams& params);

/// True when the parameter set sits inside the critical guard band.
bool at_critical_point(const ModelParams& params);

/// Reads a plain-text key=value file with keys
/// mass, charge, b_field, theta, hbar. '#' starts a comment.
/// Unknown keys or malformed lines raise ParameterError.
ModelParams load_params(const std::string& path);

}  // namespace ncland::model
