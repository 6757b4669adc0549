#pragma once

#include <array>

#include "g2h/kform.hpp"
#include "g2h/subspace.hpp"

namespace g2h {

/// A span of n x n matrices together with a bracket-closure certificate.
struct LieMatrixAlgebra {
    size_t ambient_dim = 0;  // matrices are ambient_dim x ambient_dim
    Subspace span{0};        // flattened matrices, canonical basis
    bool closed = false;

    size_t dim() const { return span.dim(); }
    std::vector<Matrix> basis_matrices() const;
    bool contains(const Matrix& m) const { return span.contains(m.flatten()); }

    static LieMatrixAlgebra from_matrices(size_t n, const std::vector<Matrix>& gens,
                                          bool check_closure = true);
};

/// Whether [X, Y] stays in the span for all basis pairs.
bool bracket_closed(size_t n, const Subspace& span);

struct G2Params {
    std::array<Scalar, 14> s{};  // s[0] is the display's s_1
};

/// The 7x7 matrix of the 14-parameter g2* display, entry by entry.
Matrix g2_from_params(const G2Params& p);

/// The 14 coordinate basis matrices (s_i = 1, rest 0).
std::vector<Matrix> g2_basis_matrices();

/// Smallest bracket-closed span containing the generators.
LieMatrixAlgebra lie_closure(const std::vector<Matrix>& gens);

/// Infinitesimal stabilizer of the convention's 3-form inside gl(7):
/// kernel of A -> derivation_action(A, omega).
LieMatrixAlgebra stabilizer_algebra(const Convention& conv);

/// True iff A is skew-adjoint for the convention's Gram matrix.
bool so_check(const Convention& conv, const Matrix& a);

}  // namespace g2h
