#pragma once

// Circuit noise parameters and their time-varying beta marginals.
//
// Each noise coordinate is a beta-distributed random variable on [0,1] whose
// shape parameters shrink hyperbolically with time,
//   alpha_t = alpha0 / (k0 + t),   beta_t = beta0 / (k0 + t),
// so the mean stays fixed while the variance grows. fit_hyperparams() solves
// for (alpha0, beta0, k0) from an initial mean/variance and a variance growth
// factor over a horizon.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "reliab/math.hpp"

namespace reliab {

enum class ParameterKind {
  kSpamFidelity,
  kCnotFidelity,
  kDephasingTime,
  kHadamardFidelity,
};

inline const char* to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kSpamFidelity: return "spam_fidelity";
    case ParameterKind::kCnotFidelity: return "cnot_fidelity";
    case ParameterKind::kDephasingTime: return "dephasing_time";
    case ParameterKind::kHadamardFidelity: return "hadamard_fidelity";
  }
  return "unknown";
}

inline ParameterKind parameter_kind_from_string(const std::string& s) {
  if (s == "spam_fidelity") return ParameterKind::kSpamFidelity;
  if (s == "cnot_fidelity") return ParameterKind::kCnotFidelity;
  if (s == "dephasing_time") return ParameterKind::kDephasingTime;
  if (s == "hadamard_fidelity") return ParameterKind::kHadamardFidelity;
  throw std::invalid_argument("unknown parameter kind: " + s);
}

// One circuit noise coordinate: what it measures and which qubits it touches.
// Dephasing times are unbounded raw values and carry a (lo, hi) range used to
// map them into the unit interval before beta fitting; fidelities do not.
struct NoiseParameter {
  int id = 0;
  ParameterKind kind = ParameterKind::kSpamFidelity;
  std::vector<int> targets;  // (control, target) order for CNOT
  std::optional<std::pair<double, double>> rescale;
};

inline void validate_parameter(const NoiseParameter& p) {
  const bool is_cnot = p.kind == ParameterKind::kCnotFidelity;
  const std::size_t want_targets = is_cnot ? 2 : 1;
  if (p.targets.size() != want_targets) {
    throw std::invalid_argument("parameter " + std::to_string(p.id) +
                                ": expected " + std::to_string(want_targets) +
                                " target(s)");
  }
  if (is_cnot && p.targets[0] == p.targets[1]) {
    throw std::invalid_argument("parameter " + std::to_string(p.id) +
                                ": CNOT control equals target");
  }
  const bool is_time = p.kind == ParameterKind::kDephasingTime;
  if (is_time != p.rescale.has_value()) {
    throw std::invalid_argument(
        "parameter " + std::to_string(p.id) +
        (is_time ? ": dephasing time requires a rescale range"
                 : ": rescale range only valid for dephasing times"));
  }
  if (p.rescale && !(p.rescale->first < p.rescale->second)) {
    throw std::invalid_argument("parameter " + std::to_string(p.id) +
                                ": rescale range must have lo < hi");
  }
}

// Ids must be unique and contiguous from 0; the set is stored in id order.
inline void validate_parameter_set(std::span<const NoiseParameter> params) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].id != static_cast<int>(i)) {
      throw std::invalid_argument(
          "parameter ids must be contiguous from 0 and stored in order");
    }
    validate_parameter(params[i]);
  }
}

// Time-indexed beta marginal. k0 + t must stay positive over the horizon.
class BetaMarginal {
 public:
  BetaMarginal(double alpha0, double beta0, double k0)
      : alpha0_(alpha0), beta0_(beta0), k0_(k0) {
    if (!(alpha0 > 0.0) || !(beta0 > 0.0)) {
      throw std::invalid_argument("BetaMarginal: alpha0, beta0 must be > 0");
    }
  }

  // A time-invariant marginal with shape (alpha, beta) at every epoch probed
  // through t = 0 (used for empirically fitted per-epoch snapshots).
  static BetaMarginal fixed(double alpha, double beta) {
    return BetaMarginal(alpha, beta, 1.0);
  }

  double alpha0() const { return alpha0_; }
  double beta0() const { return beta0_; }
  double k0() const { return k0_; }

  std::pair<double, double> params_at(double t) const {
    const double denom = k0_ + t;
    if (!(denom > 0.0)) {
      throw std::domain_error("BetaMarginal: k0 + t must be positive");
    }
    return {alpha0_ / denom, beta0_ / denom};
  }

  double mean() const { return alpha0_ / (alpha0_ + beta0_); }

  double variance_at(double t) const {
    const auto [a, b] = params_at(t);
    const double s = a + b;
    return a * b / (s * s * (1.0 + s));
  }

 private:
  double alpha0_;
  double beta0_;
  double k0_;
};

// Drift specification: initial mean/std-dev of a unit-interval parameter and
// the factor omega by which its variance grows over the horizon.
struct DriftSpec {
  double mu0 = 0.05;
  double sigma0 = 0.01;
  double omega = 4.0;
  double horizon = 16.0;

  double phi() const { return mu0 * (1.0 - mu0) / (sigma0 * sigma0); }

  void validate() const {
    if (!(mu0 > 0.0) || !(mu0 < 1.0)) {
      throw std::invalid_argument("DriftSpec: mu0 must lie in (0,1)");
    }
    if (!(sigma0 > 0.0)) {
      throw std::invalid_argument("DriftSpec: sigma0 must be positive");
    }
    if (!(sigma0 * sigma0 < mu0 * (1.0 - mu0))) {
      throw std::invalid_argument(
          "DriftSpec: sigma0^2 >= mu0(1-mu0), beta moment match impossible");
    }
    if (!(omega > 1.0)) {
      throw std::invalid_argument("DriftSpec: omega must exceed 1");
    }
    if (!(phi() / omega > 1.0)) {
      throw std::invalid_argument(
          "DriftSpec: phi/omega <= 1, no valid beta shape at the horizon");
    }
    if (!(horizon > 0.0)) {
      throw std::invalid_argument("DriftSpec: horizon must be positive");
    }
  }
};

// Solves the drift-law hyperparameters so that the marginal reproduces
// (mu0, sigma0^2) exactly at t = 0 and variance omega * sigma0^2 at
// t = horizon:
//   phi    = mu0 (1 - mu0) / sigma0^2
//   k0     = T (phi - omega) / (phi (omega - 1))
//   alpha0 = mu0 (phi - 1) k0,   beta0 = (1 - mu0)(phi - 1) k0.
// The variance ratio between the endpoints is then exactly omega.
inline BetaMarginal fit_hyperparams(const DriftSpec& spec) {
  spec.validate();
  const double phi = spec.phi();
  const double k0 =
      spec.horizon * (phi - spec.omega) / (phi * (spec.omega - 1.0));
  const double alpha0 = spec.mu0 * (phi - 1.0) * k0;
  const double beta0 = (1.0 - spec.mu0) * (phi - 1.0) * k0;
  return BetaMarginal(alpha0, beta0, k0);
}

inline double beta_log_pdf(const BetaMarginal& m, double x, double t) {
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error("beta_pdf: x outside [0,1]");
  }
  const auto [a, b] = m.params_at(t);
  if (x == 0.0 || x == 1.0) {
    const double shape = (x == 0.0) ? a : b;
    if (shape < 1.0) {
      throw std::domain_error("beta_pdf: density diverges at the boundary");
    }
    if (shape > 1.0) return -std::numeric_limits<double>::infinity();
    // shape == 1: finite boundary limit
    return (x == 0.0 ? (b - 1.0) * std::log1p(-x) : (a - 1.0) * std::log(x)) -
           log_beta(a, b);
  }
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta(a, b);
}

inline double beta_pdf(const BetaMarginal& m, double x, double t) {
  return std::exp(beta_log_pdf(m, x, t));
}

inline double beta_cdf(const BetaMarginal& m, double x, double t) {
  if (!(x >= 0.0) || !(x <= 1.0)) {
    throw std::domain_error("beta_cdf: x outside [0,1]");
  }
  const auto [a, b] = m.params_at(t);
  return reg_inc_beta(a, b, x);
}

inline double beta_quantile(const BetaMarginal& m, double u, double t) {
  if (!(u > 0.0) || !(u < 1.0)) {
    throw std::domain_error("beta_quantile: u outside (0,1)");
  }
  const auto [a, b] = m.params_at(t);
  return inv_reg_inc_beta(a, b, u);
}

// Maps a raw calibration value into beta support. Fidelities are clamped to
// [0,1]; dephasing times go through the parameter's (lo, hi) range with
// clamping at the ends.
inline double rescale_to_unit(double raw, const NoiseParameter& param) {
  double x = raw;
  if (param.kind == ParameterKind::kDephasingTime) {
    const auto [lo, hi] = *param.rescale;
    x = (raw - lo) / (hi - lo);
  }
  return std::clamp(x, 0.0, 1.0);
}

// Inverse of rescale_to_unit on the interior of the range.
inline double rescale_from_unit(double unit, const NoiseParameter& param) {
  if (param.kind == ParameterKind::kDephasingTime) {
    const auto [lo, hi] = *param.rescale;
    return lo + unit * (hi - lo);
  }
  return unit;
}

}  // namespace reliab
