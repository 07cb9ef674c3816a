#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "gmix/mixture.hpp"

namespace gmix {

// T x K posterior responsibilities; rows sum to 1, entries outside a
// component's domain are exactly 0.
using ResponsibilityMatrix = Eigen::MatrixXd;

struct FitOptions {
  int max_iterations = 500;
  double rel_tol = 1e-8;        // relative log-likelihood change
  double weight_floor = 1e-10;  // minimum responsibility mass per component
  std::uint64_t seed = 42;
};

struct EStepResult {
  ResponsibilityMatrix responsibilities;
  double log_likelihood = 0.0;
};

struct FitReport {
  MixtureModel model;
  double log_likelihood = 0.0;
  std::vector<double> ll_trace;  // one entry per evaluated iterate
  int iterations = 0;            // number of M-steps performed
  bool converged = false;
};

// Posterior responsibilities and total log-likelihood for fixed parameters.
// Throws ZeroDensityObservation when some observation has zero likelihood
// under every component.
EStepResult e_step(const MixtureModel& model, const Eigen::ArrayXd& data);

// Weighted maximum-likelihood update given fixed responsibilities:
// weights = N_k/T, Gaussian moments in closed form, Gamma components by
// moment matching on their domain slice. Throws ComponentCollapse.
MixtureModel m_step(const Eigen::ArrayXd& data, const ResponsibilityMatrix& resp,
                    const Configuration& config);
MixtureModel m_step(const Eigen::ArrayXd& data, const ResponsibilityMatrix& resp,
                    const std::vector<DomainRole>& roles);

// Deterministic seed-dependent starting model: uniform weights, each domain
// slice split into jittered quantile bands, one moment-matched component per
// band. Throws InfeasibleConfiguration when the data cannot support config.
MixtureModel initialize(const Eigen::ArrayXd& data, const Configuration& config,
                        std::uint64_t seed);

// Starting model for the unconstrained Gaussian baseline.
MixtureModel initialize_free_gaussian(const Eigen::ArrayXd& data, int n_components,
                                      std::uint64_t seed);

// Full EM loop from the deterministic initialization. Pure function of its
// arguments; errors from the steps are annotated with the iteration number.
FitReport fit(const Eigen::ArrayXd& data, const Configuration& config,
              const FitOptions& opts = {});

// EM from an explicit starting model (also covers the baseline mixtures).
FitReport fit_from(const Eigen::ArrayXd& data, MixtureModel initial,
                   const FitOptions& opts = {});

}  // namespace gmix
