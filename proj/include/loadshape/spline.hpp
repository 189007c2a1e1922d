#pragma once

#include "loadshape/types.hpp"

namespace loadshape {

// Natural cubic smoothing spline on unit-spaced knots: the fitted values
// minimize  sum_i (y_i - f_i)^2 + lambda * integral f''(t)^2 dt.
// lambda = 0 returns y unchanged.
Vector smoothing_spline_fit(const Vector& y, double lambda);

// Maps the user-facing smoothing knob in [0,1] monotonically onto lambda.
double smoothing_to_lambda(double smoothing);

}  // namespace loadshape
