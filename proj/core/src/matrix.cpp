#include "hedonic/matrix.hpp"

#include <cassert>

namespace hedonic {

Vector Matrix::apply(const Vector& x) const {
    assert(x.size() == cols_);
    Vector y(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) sum += (*this)(r, c) * x[c];
        y[r] = sum;
    }
    return y;
}

Vector Matrix::apply_transposed(const Vector& x) const {
    assert(x.size() == rows_);
    Vector y(cols_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) y[c] += (*this)(r, c) * x[r];
    return y;
}

double dot(const Vector& a, const Vector& b) {
    assert(a.size() == b.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

}  // namespace hedonic
