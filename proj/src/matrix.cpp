#include "g2h/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace g2h {

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("from_rows: ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix add: dimension mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sub: dimension mismatch");
    Matrix r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix mul: dimension mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) r(i, j) += aik * bkj;
            }
        }
    return r;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix r = a;
    for (auto& x : r.e_) x *= c;
    return r;
}

Matrix Matrix::operator-() const { return Scalar(-1) * *this; }

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Scalar Matrix::trace() const {
    Scalar t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Vec Matrix::row(size_t i) const { return Vec(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_); }

Vec Matrix::col(size_t j) const {
    Vec r(rows_);
    for (size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
}

Matrix Matrix::unflatten(const Vec& v, size_t rows, size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("unflatten: size mismatch");
    Matrix m(rows, cols);
    m.e_ = v;
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[ ";
        for (size_t j = 0; j < cols_; ++j) os << (*this)(i, j).str() << (j + 1 < cols_ ? ", " : "");
        os << " ]\n";
    }
    return os.str();
}

std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        // first nonzero entry is the pivot; the field is exact, no magnitude pivoting
        size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

size_t rank(Matrix m) { return rref(m).size(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar(1);
    }
    if (rref(aug).size() != n) throw std::domain_error("inverse: singular matrix");
    Matrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

Signature signature(const Matrix& gram) {
    if (!gram.is_symmetric()) throw std::invalid_argument("signature: non-symmetric input");
    Matrix g = gram;
    size_t n = g.rows();
    Signature sig;
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; ++step) {
        // prefer a nonzero diagonal entry among the remaining rows
        size_t d = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && !g(i, i).is_zero()) {
                d = i;
                break;
            }
        if (d == n) {
            // all remaining diagonal zero: create one from an off-diagonal entry
            size_t a = n, b = n;
            for (size_t i = 0; i < n && a == n; ++i)
                for (size_t j = i + 1; j < n && a == n; ++j)
                    if (!done[i] && !done[j] && !g(i, j).is_zero()) {
                        a = i;
                        b = j;
                    }
            if (a == n) {
                for (size_t i = 0; i < n; ++i)
                    if (!done[i]) ++sig.zero;
                return sig;
            }
            // congruence: row/col a += row/col b, making g(a,a) = 2 g(a,b) != 0
            for (size_t j = 0; j < n; ++j) g(a, j) += g(b, j);
            for (size_t i = 0; i < n; ++i) g(i, a) += g(i, b);
            d = a;
        }
        Scalar pivot = g(d, d);
        int s = pivot.sign();
        if (s > 0)
            ++sig.pos;
        else
            ++sig.neg;
        done[d] = true;
        Scalar inv = pivot.inverse();
        for (size_t i = 0; i < n; ++i) {
            if (done[i] || g(i, d).is_zero()) continue;
            Scalar f = g(i, d) * inv;
            for (size_t j = 0; j < n; ++j) g(i, j) -= f * g(d, j);
            for (size_t j = 0; j < n; ++j) g(j, i) -= f * g(j, d);
        }
    }
    return sig;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Scalar pair(const Matrix& gram, const Vec& a, const Vec& b) { return dot(a, gram.apply(b)); }

Vec basis_vec(size_t dim, size_t i) {
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

}  // namespace g2h
