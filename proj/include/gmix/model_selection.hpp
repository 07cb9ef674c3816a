#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

#include "gmix/em.hpp"
#include "gmix/mixture.hpp"

namespace gmix {

struct PenalizedScore {
  Configuration config;
  double log_likelihood = 0.0;
  int param_count = 0;
  Eigen::Index n_obs = 0;
  double bic = 0.0;
  bool failed = false;
  std::uint64_t best_seed = 0;
};

// Inclusive count range for one domain.
struct CountRange {
  int lo = 1;
  int hi = 3;
};

struct SweepSpec {
  CountRange negative;
  CountRange nearzero;
  CountRange positive;
  int n_starts = 5;
  FitOptions fit;
};

// Standard penalized likelihood: -2*LL + p*ln(T).
double bic(double log_likelihood, int param_count, Eigen::Index n_obs);

// Free parameters of a configuration: 2 per Gamma (shape, rate), 1 per
// near-zero Gaussian (variance only), K-1 for the weights.
int parameter_count(const Configuration& config);

// Exhaustive fit over the range product. Each configuration runs n_starts
// fits seeded seed+0 .. seed+n_starts-1 and keeps the best log-likelihood;
// configurations whose every start errors out are recorded as failed.
// Output sorted ascending by BIC, failures last; deterministic in (data, spec).
// Throws EmptySweep when every configuration fails.
std::vector<PenalizedScore> sweep(const Eigen::ArrayXd& data, const SweepSpec& spec);

// Minimum-BIC non-failed score; ties broken by smaller K, then by
// lexicographic (n_negative, n_nearzero, n_positive). Throws EmptySweep.
PenalizedScore select(std::span<const PenalizedScore> scores);

}  // namespace gmix
