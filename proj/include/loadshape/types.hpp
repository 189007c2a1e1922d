// Common dense-type aliases used across the library.
#pragma once

#include <Eigen/Dense>

namespace loadshape {

inline constexpr int kHoursPerDay = 24;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorX<double>;
using Matrix = MatrixX<double>;
using HourlyVector = Eigen::Matrix<double, kHoursPerDay, 1>;

}  // namespace loadshape
