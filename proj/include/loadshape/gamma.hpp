#pragma once

namespace loadshape {

// Regularized lower incomplete gamma function P(a, x), a > 0, x >= 0.
// Series expansion for x < a+1, Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);

}  // namespace loadshape
