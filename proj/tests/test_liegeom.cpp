#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2h/berger.hpp"
#include "g2h/liegeom.hpp"

using namespace g2h;

TEST_CASE("structure-equation parser") {
    LiePresentation p = LiePresentation::parse(R"(
# comment line
convention: C2
d b1 = -2 b15 - b56
d b2 = 1 + 1 r2 b46 - 1 + 1/2 r2 b56
d b3 = - r2 b76
)");
    CHECK(p.convention_name == "C2");
    CHECK(p.c(0, pair_index(0, 4)) == Scalar(2));
    CHECK(p.c(0, pair_index(4, 5)) == Scalar(1));
    // compound coefficients read left to right: "1 + 1 r2" and "- 1 + 1/2 r2"
    CHECK(p.c(1, pair_index(3, 5)) == -(Scalar(1) + Scalar::sqrt2()));
    CHECK(p.c(1, pair_index(4, 5)) == Scalar(1) - Scalar::sqrt2_times(1, 2));
    // reversed pair b76 flips the sign
    CHECK(p.c(2, pair_index(5, 6)) == -Scalar::sqrt2());
    // bracket is minus the differential coefficients
    CHECK(p.bracket(0, 4)[0] == Scalar(2));
    CHECK(p.bracket(4, 0)[0] == Scalar(-2));

    CHECK_THROWS(LiePresentation::parse("d b1 = - b23\n"));  // no convention
    CHECK_THROWS(LiePresentation::parse("convention: C9\n"));
    CHECK_THROWS(LiePresentation::parse("convention: C1\nd b8 = 0\n"));
    CHECK_THROWS(LiePresentation::parse("convention: C1\nd b1 = b11\n"));
    CHECK_THROWS(LiePresentation::parse("convention: C1\nd b1 = 2 +\n"));
    CHECK_THROWS(LiePresentation::parse("convention: C1\nb1 = b23\n"));
}

TEST_CASE("parser round trip through str()") {
    for (const auto& ex : examples_registry()) {
        LiePresentation back = LiePresentation::parse(ex.pres.str());
        CHECK(back.convention_name == ex.pres.convention_name);
        CHECK(back.c == ex.pres.c);
    }
}

TEST_CASE("jacobi identity") {
    for (const auto& ex : examples_registry()) CHECK(jacobi_check(ex.pres).ok);

    LiePresentation bad = LiePresentation::parse(
        "convention: C1\nd b1 = - b23\nd b2 = - b14\n");
    JacobiReport jr = jacobi_check(bad);
    CHECK(!jr.ok);
    CHECK(jr.failing_triple == std::array<size_t, 3>{0, 2, 3});
}

TEST_CASE("the connection is metric and torsion-free") {
    for (const auto& ex : examples_registry()) {
        const Matrix& g = ex.pres.convention().gram;
        ConnectionTable ct = koszul(ex.pres);
        for (size_t i = 0; i < 7; ++i) {
            // metric: Lambda_i is skew-adjoint for the gram matrix
            CHECK(ct.lambda[i].transpose() * g + g * ct.lambda[i] == Matrix(7, 7));
            // torsion-free: nabla_i b_j - nabla_j b_i = [b_i, b_j]
            for (size_t j = 0; j < 7; ++j) {
                Vec lhs = vec_sub(ct.lambda[i].col(j), ct.lambda[j].col(i));
                CHECK(lhs == ex.pres.bracket(i, j));
            }
        }
    }
}

TEST_CASE("curvature satisfies the first Bianchi identity") {
    const auto& ex = examples_registry()[0];
    ConnectionTable ct = koszul(ex.pres);
    auto r = curvature(ct, ex.pres);
    for (size_t i = 0; i < 7; ++i)
        for (size_t j = i + 1; j < 7; ++j)
            for (size_t k = j + 1; k < 7; ++k) {
                Vec sum = vec_add(
                    r[pair_index(i, j)].apply(basis_vec(7, k)),
                    vec_add(r[pair_index(j, k)].apply(basis_vec(7, i)),
                            vec_scale(Scalar(-1),
                                      r[pair_index(i, k)].apply(basis_vec(7, j)))));
                CHECK(vec_is_zero(sum));
            }
}

TEST_CASE("reference connection tables reproduce") {
    for (const auto& ex : examples_registry()) {
        ConnectionTable ct = koszul(ex.pres);
        for (size_t j = 0; j < 7; ++j) CHECK(ct.lambda[j] == ex.expected_lambda[j]);
    }
}

TEST_CASE("flat example has trivial holonomy") {
    LiePresentation flat = LiePresentation::parse("convention: C1\nd b1 = 0\n");
    ConnectionTable ct = koszul(flat);
    for (const auto& l : ct.lambda) CHECK(l == Matrix(7, 7));
    HolonomyResult hr = ambrose_singer(ct, flat);
    CHECK(hr.algebra.dim() == 0);
    CHECK(hr.generations == 0);
    CHECK(!hr.matched_catalog.has_value());
    // both forms sharing this gram are (trivially) parallel
    auto cals = parallel_calibrations(ct, flat);
    CHECK(cals == std::vector<std::string>{"C1", "C3"});
}

TEST_CASE("one full holonomy computation") {
    const auto& ex = examples_registry()[3];  // the 3-dimensional Type II example
    ConnectionTable ct = koszul(ex.pres);
    HolonomyResult hr = ambrose_singer(ct, ex.pres);
    CHECK(hr.algebra.dim() == 3);
    CHECK(hr.algebra.closed);
    REQUIRE(hr.matched_catalog.has_value());
    CHECK(*hr.matched_catalog == "T2.5-0-n(1,3)");
    CHECK(parallel_calibrations(ct, ex.pres) == std::vector<std::string>{"C2"});
    // holonomy is contained in the stabilizer of the parallel form
    CHECK(stabilizer_algebra(convention_C2()).span.contains(hr.algebra.span));
}
