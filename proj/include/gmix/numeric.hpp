#pragma once

#include <Eigen/Core>

#include <span>

namespace gmix {

// log(sum(exp(v))), safe against overflow; -inf for an all--inf input.
double log_sum_exp(std::span<const double> v);

// Rowwise log-sum-exp of a T x K matrix of log terms. Rows whose maximum is
// -inf yield -inf (no NaN from the -inf minus -inf shift).
Eigen::ArrayXd row_log_sum_exp(const Eigen::MatrixXd& log_terms);

}  // namespace gmix
