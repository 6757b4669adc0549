#pragma once

#include "g2h/g2star.hpp"

namespace g2h {

/// The space K(h) of formal curvature tensors of a subalgebra h of gl(7):
/// families (R_ij) of elements of h, indexed by the 21 ordered index pairs
/// i < j, subject to the first Bianchi identity
///   R_ij b_k + R_jk b_i + R_ki b_j = 0   for all i < j < k.
struct CurvatureFamily {
    size_t h_dim = 0;                     // dim of h, basis fixed by the algebra span
    std::vector<Vec> kernel_basis;        // each entry: 21 * h_dim coordinates
    size_t dim() const { return kernel_basis.size(); }
};

/// Index of the ordered pair (i, j), i < j, 0-based, in lexicographic order.
size_t pair_index(size_t i, size_t j);

CurvatureFamily curvature_space(const LieMatrixAlgebra& h);

/// R(b_i, b_j) for one kernel element, as a 7x7 matrix.
Matrix curvature_value(const LieMatrixAlgebra& h, const Vec& kernel_element, size_t i,
                       size_t j);

/// Span of all R(b_i, b_j) over K(h) -- the "derived" algebra of Berger's
/// first criterion.
Subspace derived_span(const LieMatrixAlgebra& h, const CurvatureFamily& k);

/// Berger's first criterion: the curvature values of K(h) span all of h.
bool is_berger(const LieMatrixAlgebra& h);

/// Cross-checks the reference parametrisation of K(h^I) (29 independent
/// symbols) or of K(h^II) (25 symbols; the full space has one further
/// direction, the c-entry of R(b6,b7), which the check pins down exactly)
/// cell by cell, including the footer identities. `which` is 1 or 2;
/// returns a list of human-readable failures (empty = all relations hold).
std::vector<std::string> table_relations_check(int which);

}  // namespace g2h
