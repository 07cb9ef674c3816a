#pragma once

#include <Eigen/Core>

#include <string>
#include <variant>
#include <vector>

#include "gmix/distributions.hpp"
#include "gmix/rng.hpp"

namespace gmix {

// Which slice of the real line a component is responsible for.
// FreeGaussian exists only for the unconstrained baseline mixture.
enum class DomainRole { Negative, NearZero, Positive, FreeGaussian };

const char* to_string(DomainRole role);

struct Component {
  DomainRole role = DomainRole::NearZero;
  std::variant<GaussianParams, GammaParams> params = GaussianParams{};

  bool is_gaussian() const {
    return role == DomainRole::NearZero || role == DomainRole::FreeGaussian;
  }
  const GaussianParams& gaussian() const { return std::get<GaussianParams>(params); }
  const GammaParams& gamma() const { return std::get<GammaParams>(params); }
};

Component make_nearzero(double variance);
Component make_free_gaussian(double mean, double variance);
Component make_positive(const GammaParams& p);
Component make_negative(const GammaParams& p);

// Component-count triple identifying a constrained model family.
struct Configuration {
  int n_negative = 0;
  int n_nearzero = 0;
  int n_positive = 0;

  int total() const { return n_negative + n_nearzero + n_positive; }
  std::string to_string() const;                    // "a/b/c"
  static Configuration parse(const std::string&);   // throws Error
  bool operator==(const Configuration&) const = default;
};

// Canonical component order: Negative block, NearZero block, Positive block.
std::vector<DomainRole> roles_of(const Configuration& config);

// Weights + components + configuration. Immutable value after construction;
// evaluation is reentrant, sampling needs a caller-owned Rng.
struct MixtureModel {
  Eigen::VectorXd weights;
  std::vector<Component> components;
  Configuration configuration;

  Eigen::Index size() const { return static_cast<Eigen::Index>(components.size()); }

  // Throws InvalidParams when any invariant is broken: weights in [0,1]
  // summing to 1, canonical role order matching the configuration counts,
  // valid parameters, zero mean on near-zero components.
  void check_valid() const;
};

// Log density of one component at x, honoring its domain: -inf outside,
// sign-reversed argument for Negative, the usual Gaussian everywhere.
double component_log_pdf(const Component& c, double x);
Eigen::ArrayXd component_log_pdf(const Component& c, const Eigen::ArrayXd& x);

// Mixture log density, evaluated with log-sum-exp. x = 0 is evaluated once:
// Gaussian-role components contribute plus any shape-1 Gamma limits.
double log_pdf(const MixtureModel& model, double x);
Eigen::ArrayXd log_pdf(const MixtureModel& model, const Eigen::ArrayXd& x);

// Ancestral sampling: pick component k with probability weights[k], draw from
// it, negating Gamma draws of Negative components.
Eigen::ArrayXd sample(const MixtureModel& model, Rng& rng, Eigen::Index n);

}  // namespace gmix
