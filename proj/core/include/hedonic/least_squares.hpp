#pragma once

#include "hedonic/matrix.hpp"

namespace hedonic {

struct LeastSquaresResult {
    Vector x;
    double residual = 0.0;  // ||b - Ax||_2
};

/// Minimizes ||b - Ax||_2 via the normal equations A^T A x = A^T b, solved by
/// Cholesky factorization with a partial-pivot Gaussian fallback. Throws
/// NumericalError when A^T A is numerically singular (condition estimate
/// beyond 1e12).
LeastSquaresResult solve_least_squares(const Matrix& a, const Vector& b);

}  // namespace hedonic
