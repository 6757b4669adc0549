#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "g2h/scalar.hpp"

namespace g2h {

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over Q(sqrt 2).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_symmetric() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    Matrix operator-() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix transpose() const;
    Scalar trace() const;
    Vec row(size_t i) const;
    Vec col(size_t j) const;

    /// Row-major flattening; the bridge between operators and Subspace vectors.
    Vec flatten() const { return e_; }
    static Matrix unflatten(const Vec& v, size_t rows, size_t cols);

    std::string str() const;

private:
    size_t rows_, cols_;
    Vec e_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<size_t> rref(Matrix& m);
size_t rank(Matrix m);

/// Inverse of a square matrix; throws on singular input.
Matrix inverse(const Matrix& m);

/// Inertia (neg, zero, pos) of a symmetric matrix by exact symmetric
/// Gaussian reduction. Throws on non-symmetric input.
struct Signature {
    size_t neg = 0, zero = 0, pos = 0;
    bool operator==(const Signature&) const = default;
};
Signature signature(const Matrix& gram);

// small vector helpers
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Scalar dot(const Vec& a, const Vec& b);
/// gram-pairing <a, b> = a^T G b
Scalar pair(const Matrix& gram, const Vec& a, const Vec& b);
Vec basis_vec(size_t dim, size_t i);

}  // namespace g2h
