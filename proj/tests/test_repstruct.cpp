#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2h/catalog.hpp"
#include "g2h/repstruct.hpp"

using namespace g2h;

namespace {

LieMatrixAlgebra algebra_of(const Subspace& s) {
    std::vector<Matrix> gens;
    for (const auto& v : s.basis()) gens.push_back(Matrix::unflatten(v, 7, 7));
    return LieMatrixAlgebra::from_matrices(7, gens);
}

}  // namespace

TEST_CASE("socle and type of the three model families") {
    const Matrix& g1 = convention_C1().gram;
    const Matrix& g2 = convention_C2().gram;

    RepReport rI = holonomy_type(algebra_of(hI_span()), g1);
    CHECK(rI.socle_dim == 1);
    CHECK(rI.socle_isotropic);
    CHECK(rI.type == "I");
    CHECK(rI.indecomposable == Verdict::yes);
    CHECK(rI.commutant_dim == 1);

    RepReport rII = holonomy_type(algebra_of(hII_span()), g2);
    CHECK(rII.socle_dim == 2);
    CHECK(rII.socle_isotropic);
    CHECK(rII.type == "II");
    CHECK(rII.indecomposable == Verdict::yes);

    RepReport rIII = holonomy_type(algebra_of(hs_span()), g1);
    CHECK(rIII.socle_dim == 3);
    CHECK(rIII.socle_isotropic);
    CHECK(rIII.type == "III");
    CHECK(rIII.indecomposable == Verdict::yes);
}

TEST_CASE("degenerate actions") {
    const Matrix& g1 = convention_C1().gram;
    // the zero algebra fixes everything: socle is the whole space and the
    // representation splits
    LieMatrixAlgebra zero = LieMatrixAlgebra::from_matrices(7, {});
    RepReport r0 = holonomy_type(zero, g1);
    CHECK(r0.socle_dim == 7);
    CHECK(r0.indecomposable == Verdict::no);

    // the full stabilizer algebra acts irreducibly
    RepReport rg = holonomy_type(stabilizer_algebra(convention_C1()), g1);
    CHECK(rg.socle_dim == 7);
    CHECK(rg.type == "irreducible");
    CHECK(rg.indecomposable == Verdict::yes);
}

TEST_CASE("a visible splitting is detected") {
    // rotation in the (b1,b2)-plane, Euclidean gram: R^7 = R^2 + R^5 splits
    Matrix j(7, 7);
    j(0, 1) = Scalar(-1);
    j(1, 0) = Scalar(1);
    LieMatrixAlgebra rot = LieMatrixAlgebra::from_matrices(7, {j});
    CHECK(indecomposable(rot, Matrix::identity(7)) == Verdict::no);
}

TEST_CASE("associative envelope and radical") {
    // envelope of a single nilpotent is {I, N}; its radical is R*N
    Matrix n(7, 7);
    n(0, 1) = Scalar(1);
    LieMatrixAlgebra h = LieMatrixAlgebra::from_matrices(7, {n});
    Subspace env = associative_envelope(h);
    CHECK(env.dim() == 2);
    Subspace rad = envelope_radical(env, 7);
    CHECK(rad.dim() == 1);
    CHECK(rad.contains(n.flatten()));
    // joint kernel of the radical: everything killed by N
    Subspace soc = socle(h, Matrix::identity(7));
    CHECK(soc.dim() == 6);
    CHECK(!soc.contains(basis_vec(7, 1)));
}

TEST_CASE("invariant filtrations of the standard families") {
    // the full nilpotent part m: a = 0, u = R^2, v = R, y = R^2
    TypeIInvariants inv = extract_invariants_typeI(algebra_of(m_full()));
    CHECK(inv.a.dim() == 0);
    CHECK(inv.u.dim() == 2);
    CHECK(inv.v.dim() == 1);
    CHECK(inv.y.dim() == 2);

    // m(1,0,2) drops the u-component
    TypeIInvariants inv2 = extract_invariants_typeI(algebra_of(m_subspace(1, 0, 2)));
    CHECK(inv2.u.dim() == 0);
    CHECK(inv2.v.dim() == 1);
    CHECK(inv2.y.dim() == 2);

    // n with z restricted to coordinates {1,3}
    Subspace z = extract_Z_typeII(algebra_of(n_subspace({1, 3})));
    CHECK(z.dim() == 2);
    CHECK(z.contains(basis_vec(4, 0)));
    CHECK(z.contains(basis_vec(4, 2)));
}

TEST_CASE("every catalog entry has its declared socle type") {
    // spot-check one entry per family (the full sweep runs in acceptance)
    for (const char* id : {"T1.1-0", "T2.1-sl2", "T3.2-0(k=2)"}) {
        auto e = find_catalog_entry(id);
        REQUIRE(e.has_value());
        RepReport r = holonomy_type(e->algebra, convention_by_name(e->convention).gram);
        CHECK(static_cast<int>(r.socle_dim) == e->declared_type);
        CHECK(r.socle_isotropic);
        CHECK(r.indecomposable == Verdict::yes);
    }
}
