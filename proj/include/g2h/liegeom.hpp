#pragma once

#include <array>

#include "g2h/g2star.hpp"

namespace g2h {

/// A 7-dimensional Lie algebra given by structure equations
///   db^i = - sum_{j<k} c^i_{jk} b^{jk}
/// together with the basis convention fixing omega and the scalar product.
/// Equivalently [b_j, b_k] = sum_i c^i_{jk} b_i.
struct LiePresentation {
    std::string convention_name = "C1";
    Matrix c{7, 21};  // c(i, pair_index(j,k))

    const Convention& convention() const;
    /// [b_j, b_k] as a coordinate vector, any argument order (0-based).
    Vec bracket(size_t j, size_t k) const;

    /// Text format: a `convention: C1|C2|C3` line, then `d b<i> = <terms>`
    /// lines with terms `<scalar> b<j><k>`; omitted lines mean db^i = 0.
    static LiePresentation parse(const std::string& text);
    static LiePresentation parse_file(const std::string& path);
    std::string str() const;
};

struct JacobiReport {
    bool ok = true;
    std::array<size_t, 3> failing_triple{};  // 0-based, valid when !ok
};
JacobiReport jacobi_check(const LiePresentation& p);

/// Levi-Civita connection: lambda[j] is the matrix of nabla_{b_j}.
struct ConnectionTable {
    std::vector<Matrix> lambda;  // 7 entries, 7x7
};
ConnectionTable koszul(const LiePresentation& p);

/// R(b_i, b_j) = [Lambda_i, Lambda_j] - nabla_{[b_i, b_j]} on all 21 pairs,
/// indexed by pair_index.
std::array<Matrix, 21> curvature(const ConnectionTable& ct, const LiePresentation& p);

/// (nabla_{b_m} R)(b_i, b_j), 0-based indices.
Matrix covariant_derivative_R(const ConnectionTable& ct, const LiePresentation& p,
                              size_t m, size_t i, size_t j);

/// True iff every Lambda_j annihilates the convention's 3-form.
bool parallel_form_check(const ConnectionTable& ct, const Convention& conv);

/// Names of the stock conventions whose Gram equals the presentation's Gram
/// and whose 3-form is annihilated by every Lambda_j. The presentation's own
/// convention need not appear: a metric can be calibrated by a different
/// 3-form inducing the same scalar product.
std::vector<std::string> parallel_calibrations(const ConnectionTable& ct,
                                               const LiePresentation& p);

struct HolonomyResult {
    LieMatrixAlgebra algebra;
    size_t generations = 0;  // productive covariant-derivative sweeps
    std::optional<std::string> matched_catalog;
};

/// Ambrose-Singer: span of the curvature operators and all their covariant
/// derivatives, swept to a fixed point (hard cap of 21 sweeps).
HolonomyResult ambrose_singer(const ConnectionTable& ct, const LiePresentation& p);

/// Literal span comparison against the catalog entries whose convention is
/// compatible (C2 entries for C2 presentations, C1 entries otherwise).
std::optional<std::string> match_catalog(const LieMatrixAlgebra& algebra,
                                         const std::string& convention_name);

/// One verified example: structure equations plus the reference expectations.
struct ExampleSpec {
    std::string id;
    LiePresentation pres;
    size_t expected_dim = 0;
    std::vector<Matrix> expected_lambda;                        // 7 entries
    std::vector<std::pair<size_t, size_t>> curvature_spanners;  // 0-based pairs
    // (m, i, j): the covariant derivative (nabla_{b_m} R)(b_i, b_j), 0-based
    std::vector<std::array<size_t, 3>> derivative_spanners;
    std::string expected_match;
};
const std::vector<ExampleSpec>& examples_registry();

}  // namespace g2h
