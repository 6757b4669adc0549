#pragma once

#include <array>
#include <map>
#include <set>

#include "g2h/g2star.hpp"

namespace g2h {

// ---------------------------------------------------------------------------
// Type I family: h(A, v, u, y), the stabilizer of an isotropic line (basis C1)
// ---------------------------------------------------------------------------

struct TypeIElement {
    Matrix A;  // 2x2
    Scalar v;
    std::array<Scalar, 2> u{}, y{};

    TypeIElement() : A(2, 2) {}
    TypeIElement(Matrix a, Scalar v_, std::array<Scalar, 2> u_, std::array<Scalar, 2> y_)
        : A(std::move(a)), v(std::move(v_)), u(u_), y(y_) {}
};

Matrix h_type1(const TypeIElement& e);
/// Inverse of h_type1 when the matrix fits the family, nullopt otherwise.
std::optional<TypeIElement> decompose_type1(const Matrix& m);

// ---------------------------------------------------------------------------
// Type II family: h(A, z, c), block form with sigma(z), rho(A) (basis C2)
// ---------------------------------------------------------------------------

struct TypeIIElement {
    Matrix A;  // 2x2
    std::array<Scalar, 4> z{};
    Scalar c;

    TypeIIElement() : A(2, 2) {}
    TypeIIElement(Matrix a, std::array<Scalar, 4> z_, Scalar c_)
        : A(std::move(a)), z(z_), c(std::move(c_)) {}
};

Matrix sigma_of_z(const std::array<Scalar, 4>& z);        // 2x3
Matrix sigma_star_of_z(const std::array<Scalar, 4>& z);   // 3x2
Matrix rho_of_A(const Matrix& a);                         // 3x3
Matrix h_type2(const TypeIIElement& e);
std::optional<TypeIIElement> decompose_type2(const Matrix& m);

/// theta(u, ubar) = u1 ubar2 - u2 ubar1
Scalar theta_form(const std::array<Scalar, 2>& u, const std::array<Scalar, 2>& ubar);
/// eta(z, zhat) = -z1 zhat4 + z4 zhat1 + 3 z2 zhat3 - 3 z3 zhat2
Scalar eta_form(const std::array<Scalar, 4>& z, const std::array<Scalar, 4>& zhat);

// ---------------------------------------------------------------------------
// gl(2,R) subalgebras and distinguished 2x2 matrices
// ---------------------------------------------------------------------------

Matrix mat2(long a, long b, long c, long d);
Matrix mat_C(const Scalar& a);          // [[a,-1],[1,a]]
Matrix mat_S();                         // [[1,1],[0,1]]
Matrix mat_N();                         // [[0,1],[0,0]]
Matrix mat_diag(const Scalar& a, const Scalar& d);

/// Named subalgebras of gl(2,R): "0", "sl2", "gl2", "u1", "d", "b2", "b2hat",
/// "Ca" (needs a), "S", "N", "diag1mu" (needs mu), "s_lambda" (needs lambda).
LieMatrixAlgebra gl2_subalgebra(const std::string& name,
                                const std::map<std::string, Scalar>& params = {});

// ---------------------------------------------------------------------------
// Distinguished subspaces of m and n (flattened 7x7 ambient)
// ---------------------------------------------------------------------------

Subspace m_subspace(int i, int j, int k);
Subspace m_full();                     // m = m(1,1,2)
Subspace hI_span();                    // the full 9-dim Type I family h(A, v, u, y)
Subspace hs_span();                    // Type III family h(A, v, 0, y)
Subspace n_subspace(const std::set<int>& z_indices);  // subset of {1,2,3,4}, c always free
Subspace n_full();
Subspace hII_span();

// ---------------------------------------------------------------------------
// Conjugation formulas (closed-form Ad of unipotent / GL(2) elements)
// ---------------------------------------------------------------------------

TypeIElement ad_exp_v(const Scalar& vbar, const TypeIElement& x);
TypeIElement ad_exp_u(const std::array<Scalar, 2>& ubar, const TypeIElement& x);
TypeIElement ad_exp_y(const std::array<Scalar, 2>& ybar, const TypeIElement& x);
TypeIElement ad_gl2_type1(const Matrix& g, const TypeIElement& x);
TypeIIElement ad_exp_z(const std::array<Scalar, 4>& zbar, const TypeIIElement& x);

/// GL(2,R) -> G2* block-diagonal embedding used with the Type I basis:
/// g |-> diag(det g, g, 1, (det g)^-1, (g^T)^-1).
Matrix embed_gl2_type1(const Matrix& g);
/// The Type II image of diag(1,-1): diag(1,-1,-1,1,-1,1,-1).
Matrix embed_diag1m1_type2();

/// Exponential of a nilpotent matrix (finite sum; throws if not nilpotent).
Matrix exp_nilpotent(const Matrix& m);

// ---------------------------------------------------------------------------
// The gl(2,R)-representation on R^4 and its exterior powers
// ---------------------------------------------------------------------------

/// 4x4 matrix of the infinitesimal action of A on R^4 (z-coordinates).
Matrix gl2_on_R4_matrix(const Matrix& a);
std::array<Scalar, 4> gl2_on_R4(const Matrix& a, const std::array<Scalar, 4>& z);

/// Group-level action for the generator set.
Matrix group_diag_on_R4(const Scalar& a, const Scalar& d);  // a, d nonzero
Matrix group_shear_upper_on_R4(const Scalar& t);            // exp(t X)
Matrix group_shear_lower_on_R4(const Scalar& t);            // exp(t Y)

/// Induced actions on Lambda^2 (basis e12,e13,e14,e23,e24,e34) and
/// Lambda^3 (basis e123,e124,e134,e234) of a 4x4 matrix on R^4.
Matrix induced_lambda2(const Matrix& m4, bool group_level);
Matrix induced_lambda3(const Matrix& m4, bool group_level);

// ---------------------------------------------------------------------------
// Binary forms P_d, the isomorphisms phi1 / phi2 / Phi3, Pluecker, cross-ratios
// ---------------------------------------------------------------------------

/// p = sum coeffs[k] x^k y^(d-k); degree = coeffs.size() - 1.
using Poly = Vec;

/// (g . p)(x, y) = p((x, y) g)
Poly poly_group_action(const Matrix& g, const Poly& p);
/// infinitesimal version: (a1 x + a3 y) dp/dx + (a2 x + a4 y) dp/dy
Poly poly_algebra_action(const Matrix& a, const Poly& p);

Poly phi1(const std::array<Scalar, 4>& z);
std::array<Scalar, 4> phi1_inverse(const Poly& p);

/// Coordinates in the basis {w0, e12, e13, w', e24, e34} of Lambda^2 R^4.
Vec lambda2_to_w_basis(const Vec& std_coords);
Vec w_basis_to_lambda2(const Vec& w_coords);

/// phi2 on W' = Span{e12, e13, w', e24, e34}; input in the w-basis, the
/// w0 component must vanish.
Poly phi2(const Vec& w_coords);
Poly phi3(const Vec& lambda3_coords);

Matrix lambda1_twist(const Matrix& g);                 // det(g) * g
std::optional<Matrix> lambda2_twist(const Matrix& g);  // sgn(det) sqrt|det| g, if in field

/// Pluecker relation z12 z34 - z13 z24 = 3(t0^2 - t'^2) in the w-basis.
bool plucker_decomposable(const Vec& w_coords);

/// A point of the projective line over Q(sqrt 2): (num : den), infinity = (1 : 0).
struct ProjPoint {
    Scalar num, den;
    static ProjPoint infinity() { return {Scalar(1), Scalar(0)}; }
    static ProjPoint finite(const Scalar& x) { return {x, Scalar(1)}; }
};

struct ScalarLess {
    bool operator()(const Scalar& a, const Scalar& b) const {
        if (a.rat() != b.rat()) return a.rat() < b.rat();
        return a.irr() < b.irr();
    }
};
using ScalarSet = std::set<Scalar, ScalarLess>;

/// All cross-ratios of the four points over the 24 orderings; throws on repeats.
ScalarSet cross_ratio_set(const std::array<ProjPoint, 4>& roots);

// ---------------------------------------------------------------------------
// Candidate catalogs
// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string id;
    std::string convention;  // "C1" for Types I/III, "C2" for Type II
    LieMatrixAlgebra algebra;
    int declared_type = 0;  // 1, 2 or 3
    std::map<std::string, Scalar> parameters;
};

/// Entries of one candidate family at the default parameter grid. `which` is one of
/// "T1", "T3", "T2"; extra parameter values add further instances of the
/// parametrized families.
std::vector<CatalogEntry> theorem_entries(const std::string& which,
                                          const std::map<std::string, Scalar>& extra = {});
/// All three catalogs concatenated.
std::vector<CatalogEntry> full_catalog();
std::optional<CatalogEntry> find_catalog_entry(const std::string& id);

}  // namespace g2h
