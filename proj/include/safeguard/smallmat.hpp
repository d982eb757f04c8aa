#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace safeguard {

using Vector = std::vector<double>;

// Dense row-major matrix for the control-level code (states and QPs of at
// most a handful of dimensions).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector operator*(const Vector& v) const;
    Matrix transposed() const;

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vector a_;
};

double dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Vector& a, double s);

// In-place Cholesky factorization of a symmetric positive-definite matrix;
// returns false when the matrix is not (numerically) positive definite.
class Cholesky {
public:
    bool factor(const Matrix& spd);
    Vector solve(const Vector& rhs) const;

private:
    Matrix l_;
    std::size_t n_ = 0;
};

}  // namespace safeguard
