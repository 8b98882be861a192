#include "ncland/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ncland/errors.hpp"

namespace ncland::model {

namespace {
constexpr double kCriticalBand = 1e-12;
}

bool at_critical_point(const ModelParams& params) {
  const double product = params.charge * params.b_field * params.theta;
  return std::abs(1.0 - product) < kCriticalBand;
}

DerivedParams derive(const ModelParams& params) {
  if (!(params.mass > 0.0)) throw ParameterError("mass must be positive");
  if (params.charge == 0.0) throw ParameterError("charge must be nonzero");
  if (!(params.hbar > 0.0)) throw ParameterError("hbar must be positive");
  if (at_critical_point(params)) {
    throw CriticalPointError("e*B*theta = 1: vanishing effective mass regime");
  }
  const double factor = 1.0 - params.charge * params.b_field * params.theta;
  DerivedParams out;
  out.effective_mass = params.mass * factor;
  out.cyclotron = params.charge * params.b_field / params.mass;
  out.effective_freq = params.charge * params.b_field / out.effective_mass;
  out.big_theta = 1.0 / (params.charge * params.b_field * factor);
  out.kappa = params.theta * params.mass * params.mass;
  return out;
}

ModelParams load_params(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open parameter file: " + path);
  ModelParams params;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("malformed line " + std::to_string(lineno) + " in " + path);
    }
    auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
    };
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    double parsed = 0.0;
    try {
      std::size_t used = 0;
      parsed = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParameterError("bad numeric value for '" + key + "' in " + path);
    }
    if (key == "mass") {
      params.mass = parsed;
    } else if (key == "charge") {
      params.charge = parsed;
    } else if (key == "b_field") {
      params.b_field = parsed;
    } else if (key == "theta") {
      params.theta = parsed;
    } else if (key == "hbar") {
      params.hbar = parsed;
    } else {
      throw ParameterError("unknown key '" + key + "' in " + path);
    }
  }
  return params;
}

}  // namespace ncland::model
