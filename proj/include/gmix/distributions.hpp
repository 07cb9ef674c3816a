#pragma once

#include <Eigen/Core>

#include "gmix/errors.hpp"
#include "gmix/rng.hpp"

namespace gmix {

// Gaussian in mean/variance form. Components playing the near-zero role
// keep mean pinned to 0 exactly; the free baseline role may move it.
struct GaussianParams {
  double mean = 0.0;
  double variance = 1.0;
};

// Gamma in shape/rate form: p(x) = rate^shape / Gamma(shape)
//                                  * x^(shape-1) * exp(-rate * x).
struct GammaParams {
  double shape = 1.0;
  double rate = 1.0;
};

struct Moments {
  double mean = 0.0;
  double variance = 1.0;
};

void check_valid(const GaussianParams& p);  // throws InvalidParams
void check_valid(const GammaParams& p);     // throws InvalidParams

double gaussian_log_pdf(double x, const GaussianParams& p);

// Log density of the Gamma distribution, -inf off the support.
// At x == 0 the exponential limit log(rate) is used when shape == 1;
// any other shape evaluates to -inf so likelihoods stay finite.
double gamma_log_pdf(double x, const GammaParams& p);

Eigen::ArrayXd gaussian_log_pdf(const Eigen::ArrayXd& x, const GaussianParams& p);
Eigen::ArrayXd gamma_log_pdf(const Eigen::ArrayXd& x, const GammaParams& p);

// Invert mean/variance to shape/rate: shape = mean^2/var, rate = mean/var.
// Throws NonPositiveMean when mean <= 0 (a degenerate component whose
// weighted data mass sits at or below zero).
GammaParams moments_to_gamma(const Moments& m);

// mean = shape/rate, variance = shape/rate^2.
Moments gamma_moments(const GammaParams& p);

Eigen::ArrayXd sample_gaussian(const GaussianParams& p, Rng& rng, Eigen::Index n);
Eigen::ArrayXd sample_gamma(const GammaParams& p, Rng& rng, Eigen::Index n);

}  // namespace gmix
