#include "g2h/g2star.hpp"

#include <stdexcept>

namespace g2h {

std::vector<Matrix> LieMatrixAlgebra::basis_matrices() const {
    std::vector<Matrix> out;
    out.reserve(span.dim());
    for (const auto& v : span.basis()) out.push_back(Matrix::unflatten(v, ambient_dim, ambient_dim));
    return out;
}

LieMatrixAlgebra LieMatrixAlgebra::from_matrices(size_t n, const std::vector<Matrix>& gens,
                                                 bool check_closure) {
    std::vector<Vec> flat;
    flat.reserve(gens.size());
    for (const auto& m : gens) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("LieMatrixAlgebra: wrong matrix size");
        flat.push_back(m.flatten());
    }
    LieMatrixAlgebra a;
    a.ambient_dim = n;
    a.span = Subspace::span(n * n, flat);
    a.closed = check_closure && bracket_closed(n, a.span);
    return a;
}

bool bracket_closed(size_t n, const Subspace& span) {
    std::vector<Matrix> basis;
    for (const auto& v : span.basis()) basis.push_back(Matrix::unflatten(v, n, n));
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!span.contains(commutator(basis[i], basis[j]).flatten())) return false;
    return true;
}

Matrix g2_from_params(const G2Params& p) {
    const auto& s = p.s;
    auto S = [&](int i) { return s[i - 1]; };  // 1-based, as in the display
    Scalar r2 = Scalar::sqrt2();
    Matrix m(7, 7);
    const Scalar row_data[7][7] = {
        {S(1) + S(4), -S(10), S(9), r2 * S(6), Scalar(0), -S(11), -S(12)},
        {-S(8), S(1), S(2), r2 * S(9), S(11), Scalar(0), S(6)},
        {S(7), S(3), S(4), r2 * S(10), S(12), -S(6), Scalar(0)},
        {r2 * S(5), r2 * S(7), r2 * S(8), Scalar(0), r2 * S(6), r2 * S(9), r2 * S(10)},
        {Scalar(0), S(13), S(14), r2 * S(5), -S(1) - S(4), S(8), -S(7)},
        {-S(13), Scalar(0), -S(5), r2 * S(7), S(10), -S(1), -S(3)},
        {-S(14), S(5), Scalar(0), r2 * S(8), -S(9), -S(2), -S(4)}};
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = 0; j < 7; ++j) m(i, j) = row_data[i][j];
    return m;
}

std::vector<Matrix> g2_basis_matrices() {
    std::vector<Matrix> out;
    for (size_t i = 0; i < 14; ++i) {
        G2Params p;
        p.s[i] = Scalar(1);
        out.push_back(g2_from_params(p));
    }
    return out;
}

LieMatrixAlgebra lie_closure(const std::vector<Matrix>& gens) {
    if (gens.empty()) return LieMatrixAlgebra{0, Subspace(0), true};
    size_t n = gens[0].rows();
    Subspace span = Subspace::span(n * n, [&] {
        std::vector<Vec> v;
        for (const auto& m : gens) v.push_back(m.flatten());
        return v;
    }());
    for (;;) {
        std::vector<Matrix> basis;
        for (const auto& v : span.basis()) basis.push_back(Matrix::unflatten(v, n, n));
        std::vector<Vec> next;
        for (const auto& v : span.basis()) next.push_back(v);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                Matrix c = commutator(basis[i], basis[j]);
                if (!span.contains(c.flatten())) next.push_back(c.flatten());
            }
        Subspace grown = Subspace::span(n * n, next);
        if (grown.dim() == span.dim()) break;
        span = grown;
    }
    LieMatrixAlgebra a;
    a.ambient_dim = n;
    a.span = span;
    a.closed = true;
    return a;
}

LieMatrixAlgebra stabilizer_algebra(const Convention& conv) {
    const size_t n = 7;
    // rows: triples i<j<k; columns: entries A(m, c) at index m*7 + c
    std::vector<Vec> rows;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Vec row(n * n);
                for (size_t m = 0; m < n; ++m) {
                    row[m * n + i] += conv.omega.evaluate({basis_vec(n, m), basis_vec(n, j), basis_vec(n, k)});
                    row[m * n + j] += conv.omega.evaluate({basis_vec(n, i), basis_vec(n, m), basis_vec(n, k)});
                    row[m * n + k] += conv.omega.evaluate({basis_vec(n, i), basis_vec(n, j), basis_vec(n, m)});
                }
                rows.push_back(std::move(row));
            }
    Subspace ker = kernel(Matrix::from_rows(rows));
    LieMatrixAlgebra a;
    a.ambient_dim = n;
    a.span = ker;
    a.closed = bracket_closed(n, ker);
    return a;
}

bool so_check(const Convention& conv, const Matrix& a) {
    return (a.transpose() * conv.gram + conv.gram * a).is_zero();
}

}  // namespace g2h
