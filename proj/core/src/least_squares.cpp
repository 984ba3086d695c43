#include "hedonic/least_squares.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hedonic/errors.hpp"

namespace hedonic {

namespace {

// Lower-triangular Cholesky of a symmetric positive-definite matrix, in
// place; nullopt when a pivot degenerates or the condition estimate
// (max diag / min diag of L, squared) exceeds 1e12.
std::optional<Matrix> cholesky(Matrix g) {
    const std::size_t n = g.rows();
    double min_diag = 0.0, max_diag = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double d = g(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= g(j, k) * g(j, k);
        if (!(d > 0.0)) return std::nullopt;
        const double l = std::sqrt(d);
        g(j, j) = l;
        min_diag = (j == 0) ? l : std::min(min_diag, l);
        max_diag = std::max(max_diag, l);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = g(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= g(i, k) * g(j, k);
            g(i, j) = s / l;
        }
    }
    const double cond = (max_diag / min_diag) * (max_diag / min_diag);
    if (!std::isfinite(cond) || cond > 1e12) return std::nullopt;
    return g;
}

Vector cholesky_solve(const Matrix& l, const Vector& rhs) {
    const std::size_t n = rhs.size();
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = rhs[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y[k];
        y[i] = s / l(i, i);
    }
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * x[k];
        x[ii] = s / l(ii, ii);
    }
    return x;
}

// Gaussian elimination with partial pivoting.
Vector lu_solve(Matrix g, Vector rhs) {
    const std::size_t n = rhs.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(g(r, col)) > std::abs(g(pivot, col))) pivot = r;
        if (std::abs(g(pivot, col)) < 1e-13)
            throw NumericalError("normal equations are numerically singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(g(pivot, j), g(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = g(r, col) / g(col, col);
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) g(r, j) -= f * g(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    Vector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        double s = rhs[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= g(ii, k) * x[k];
        x[ii] = s / g(ii, ii);
    }
    return x;
}

}  // namespace

LeastSquaresResult solve_least_squares(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size())
        throw std::invalid_argument("matrix/vector size mismatch");
    if (a.cols() == 0) throw std::invalid_argument("matrix has no columns");

    const std::size_t n = a.cols();
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * a(r, j);
            gram(i, j) = s;
        }
    const Vector atb = a.apply_transposed(b);

    Vector x;
    if (auto l = cholesky(gram)) {
        x = cholesky_solve(*l, atb);
    } else {
        x = lu_solve(gram, atb);
    }

    const Vector ax = a.apply(x);
    double sq = 0.0;
    for (std::size_t r = 0; r < b.size(); ++r) {
        const double d = b[r] - ax[r];
        sq += d * d;
    }
    return LeastSquaresResult{std::move(x), std::sqrt(sq)};
}

}  // namespace hedonic
