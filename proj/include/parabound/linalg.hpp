#pragma once

#include <Eigen/Dense>

namespace parabound {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace parabound
