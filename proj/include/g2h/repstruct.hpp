#pragma once

#include "g2h/g2star.hpp"

namespace g2h {

enum class Verdict { yes, no, undetermined };
std::string verdict_str(Verdict v);

/// Structural invariants of a matrix algebra acting on R^7 with a fixed
/// scalar product.
struct RepReport {
    Subspace socle{7};
    size_t socle_dim = 0;
    bool socle_isotropic = false;
    std::string type;  // "I", "II", "III", "irreducible" or "none"
    Verdict indecomposable = Verdict::undetermined;
    size_t commutant_dim = 0;
};

/// Unital associative matrix algebra generated by h (flattened span).
Subspace associative_envelope(const LieMatrixAlgebra& h);

/// Jacobson radical of a unital associative matrix algebra, computed as the
/// kernel of the trace form tr(xy) (valid in characteristic zero).
Subspace envelope_radical(const Subspace& envelope, size_t n);

/// Maximal semisimple subrepresentation: the joint kernel of the radical of
/// the associative envelope.
Subspace socle(const LieMatrixAlgebra& h, const Matrix& gram);

/// Whether the representation admits an invariant non-degenerate proper
/// subspace. Decided via self-adjoint idempotents in the commutant:
/// "yes" when the self-adjoint commutant is R*id or provably idempotent-free,
/// "no" when a spectral split is exhibited, "undetermined" otherwise.
Verdict indecomposable(const LieMatrixAlgebra& h, const Matrix& gram);

RepReport holonomy_type(const LieMatrixAlgebra& h, const Matrix& gram);

/// Filtered projections of a subalgebra of the Type I family.
struct TypeIInvariants {
    LieMatrixAlgebra a;  // projection to the gl(2,R) block
    Subspace u{2};       // {u | exists v, y : h(0,v,u,y) in h}
    Subspace v{1};       // {v | exists y : h(0,v,0,y) in h}
    Subspace y{2};       // {y | h(0,0,0,y) in h}
};
TypeIInvariants extract_invariants_typeI(const LieMatrixAlgebra& h);

/// Z = {z in R^4 | exists c : h(0,z,c) in h} for a subalgebra of the
/// Type II family.
Subspace extract_Z_typeII(const LieMatrixAlgebra& h);

}  // namespace g2h
