#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2h/g2star.hpp"

using namespace g2h;

TEST_CASE("stabilizer algebras of the three model forms") {
    for (const char* name : {"C1", "C2", "C3"}) {
        const Convention& conv = convention_by_name(name);
        LieMatrixAlgebra stab = stabilizer_algebra(conv);
        CHECK(stab.dim() == 14);
        CHECK(stab.closed);
        for (const auto& m : stab.basis_matrices()) {
            CHECK(so_check(conv, m));
            CHECK(derivation_action(m, conv.omega).is_zero());
            CHECK(m.trace() == Scalar(0));
        }
    }
}

TEST_CASE("parameter display matches the stabilizer kernel") {
    LieMatrixAlgebra display = LieMatrixAlgebra::from_matrices(7, g2_basis_matrices());
    CHECK(display.dim() == 14);
    CHECK(display.closed);
    CHECK(display.span == stabilizer_algebra(convention_C1()).span);

    // the display is linear in its parameters
    G2Params p, q, s;
    p.s[0] = Scalar(2);
    q.s[13] = Scalar(1, 3);
    s.s[0] = Scalar(2);
    s.s[13] = Scalar(1, 3);
    CHECK(g2_from_params(p) + g2_from_params(q) == g2_from_params(s));
}

TEST_CASE("lie_closure grows partial generating sets") {
    auto basis = g2_basis_matrices();
    // a small generating subset closes to the full 14-dimensional algebra
    std::vector<Matrix> gens = {basis[0], basis[3], basis[7], basis[12]};
    LieMatrixAlgebra closed = lie_closure(gens);
    CHECK(closed.closed);
    CHECK(closed.dim() >= gens.size());
    CHECK(stabilizer_algebra(convention_C1()).span.contains(closed.span));

    // closure of a span that is already closed is itself
    LieMatrixAlgebra again = lie_closure(closed.basis_matrices());
    CHECK(again.span == closed.span);
}

TEST_CASE("from_matrices records the closure certificate") {
    // span{E12, E23} is not bracket-closed: [E12, E23] = E13
    Matrix a(7, 7), b(7, 7);
    a(0, 1) = Scalar(1);
    b(1, 2) = Scalar(1);
    CHECK(!LieMatrixAlgebra::from_matrices(7, {a, b}).closed);
    CHECK(!bracket_closed(7, LieMatrixAlgebra::from_matrices(7, {a, b}, false).span));
    CHECK(lie_closure({a, b}).dim() == 3);
}
