#include "g2h/subspace.hpp"

#include <stdexcept>

namespace g2h {

Subspace Subspace::span(size_t ambient_dim, const std::vector<Vec>& vectors) {
    Subspace s(ambient_dim);
    if (vectors.empty()) return s;
    Matrix m = Matrix::from_rows(vectors);
    if (m.cols() != ambient_dim) throw std::invalid_argument("Subspace::span: wrong vector length");
    size_t r = rref(m).size();
    for (size_t i = 0; i < r; ++i) s.basis_.push_back(m.row(i));
    return s;
}

Subspace Subspace::full(size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (size_t i = 0; i < ambient_dim; ++i) s.basis_.push_back(basis_vec(ambient_dim, i));
    return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dimension mismatch");
    Vec rem = v;
    Vec coords(basis_.size());
    for (size_t r = 0; r < basis_.size(); ++r) {
        // pivot of a reduced-echelon row is its first entry, which equals 1
        size_t p = 0;
        while (p < ambient_ && basis_[r][p].is_zero()) ++p;
        if (rem[p].is_zero()) continue;
        coords[r] = rem[p];
        rem = vec_sub(rem, vec_scale(coords[r], basis_[r]));
    }
    if (!vec_is_zero(rem)) return std::nullopt;
    return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
        if (!contains(v)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
    std::vector<Vec> all = basis_;
    all.insert(all.end(), other.basis_.begin(), other.basis_.end());
    return span(ambient_, all);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_)
        throw std::invalid_argument("Subspace::intersect: ambient mismatch");
    if (basis_.empty() || other.basis_.empty()) return Subspace(ambient_);
    // Solve sum_i a_i u_i = sum_j b_j w_j: kernel of [U^T | -W^T].
    size_t k = basis_.size(), l = other.basis_.size();
    Matrix m(ambient_, k + l);
    for (size_t j = 0; j < k; ++j)
        for (size_t i = 0; i < ambient_; ++i) m(i, j) = basis_[j][i];
    for (size_t j = 0; j < l; ++j)
        for (size_t i = 0; i < ambient_; ++i) m(i, k + j) = -other.basis_[j][i];
    Subspace ker = kernel(m);
    std::vector<Vec> vecs;
    for (const auto& c : ker.basis()) {
        Vec v(ambient_);
        for (size_t j = 0; j < k; ++j) v = vec_add(v, vec_scale(c[j], basis_[j]));
        vecs.push_back(v);
    }
    return span(ambient_, vecs);
}

Subspace kernel(const Matrix& m) {
    Matrix r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Scalar(1);
        for (size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, f);
        basis.push_back(v);
    }
    return Subspace::span(m.cols(), basis);
}

}  // namespace g2h
