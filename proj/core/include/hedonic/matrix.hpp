#pragma once

#include <cstddef>
#include <vector>

namespace hedonic {

using Vector = std::vector<double>;

/// Minimal dense row-major matrix; problem sizes here are desk-scale.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// y = A x.
    Vector apply(const Vector& x) const;

    /// y = A^T x.
    Vector apply_transposed(const Vector& x) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<double> data_;
};

double dot(const Vector& a, const Vector& b);

}  // namespace hedonic
