#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2h/catalog.hpp"

using namespace g2h;

namespace {

std::mt19937 rng(424242);

Scalar random_scalar() {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 2);
    return Scalar(Rational(num(rng), den(rng)));
}

Matrix random_mat2() {
    Matrix m(2, 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) m(i, j) = random_scalar();
    return m;
}

std::array<Scalar, 2> random_pair() { return {random_scalar(), random_scalar()}; }
std::array<Scalar, 4> random_quad() {
    return {random_scalar(), random_scalar(), random_scalar(), random_scalar()};
}

}  // namespace

TEST_CASE("block families decompose faithfully") {
    for (int t = 0; t < 25; ++t) {
        TypeIElement x(random_mat2(), random_scalar(), random_pair(), random_pair());
        auto back = decompose_type1(h_type1(x));
        REQUIRE(back.has_value());
        CHECK(h_type1(*back) == h_type1(x));

        TypeIIElement w(random_mat2(), random_quad(), random_scalar());
        auto back2 = decompose_type2(h_type2(w));
        REQUIRE(back2.has_value());
        CHECK(h_type2(*back2) == h_type2(w));
    }
    // a matrix outside the family is rejected
    Matrix junk(7, 7);
    junk(6, 0) = Scalar(1);
    CHECK(!decompose_type1(junk).has_value());
    CHECK(!decompose_type2(junk).has_value());
}

TEST_CASE("bracket structure of the nilpotent parts") {
    auto hm = [](Scalar v, std::array<Scalar, 2> u, std::array<Scalar, 2> y) {
        return h_type1(TypeIElement(Matrix(2, 2), v, u, y));
    };
    for (int t = 0; t < 25; ++t) {
        Scalar v = random_scalar(), vb = random_scalar();
        auto u = random_pair(), ub = random_pair(), y = random_pair(), yb = random_pair();
        // [h(0,v,u,y), h(0,vb,ub,yb)] = h(0, 2 theta(u,ub), 0, 3(vb u - v ub))
        Matrix lhs = commutator(hm(v, u, y), hm(vb, ub, yb));
        std::array<Scalar, 2> ny = {3 * (vb * u[0] - v * ub[0]), 3 * (vb * u[1] - v * ub[1])};
        CHECK(lhs == hm(2 * theta_form(u, ub), {}, ny));
    }
    auto hn = [](std::array<Scalar, 4> z, Scalar c) {
        return h_type2(TypeIIElement(Matrix(2, 2), z, c));
    };
    for (int t = 0; t < 25; ++t) {
        auto z = random_quad(), zh = random_quad();
        Scalar c = random_scalar(), ch = random_scalar();
        CHECK(commutator(hn(z, c), hn(zh, ch)) == hn({}, eta_form(z, zh)));
        CHECK(eta_form(z, zh) == -eta_form(zh, z));
    }
}

TEST_CASE("gl2 action matches the matrix commutator") {
    for (int t = 0; t < 25; ++t) {
        Matrix a = random_mat2();
        auto z = random_quad();
        Scalar c = random_scalar();
        Matrix lhs = commutator(h_type2(TypeIIElement(a, {}, Scalar(0))),
                                h_type2(TypeIIElement(Matrix(2, 2), z, c)));
        CHECK(lhs == h_type2(TypeIIElement(Matrix(2, 2), gl2_on_R4(a, z), a.trace() * c)));
        // sigma intertwines the two sides of the action
        CHECK(sigma_of_z(gl2_on_R4(a, z)) ==
              a * sigma_of_z(z) - sigma_of_z(z) * rho_of_A(a));
    }
}

TEST_CASE("closed-form conjugation equals exponential conjugation") {
    for (int t = 0; t < 10; ++t) {
        TypeIElement x(random_mat2(), random_scalar(), random_pair(), random_pair());
        auto hm = [](Scalar v, std::array<Scalar, 2> u, std::array<Scalar, 2> y) {
            return h_type1(TypeIElement(Matrix(2, 2), v, u, y));
        };
        Scalar vb = random_scalar();
        Matrix g = exp_nilpotent(hm(vb, {}, {}));
        CHECK(g * h_type1(x) * inverse(g) == h_type1(ad_exp_v(vb, x)));

        auto ub = random_pair();
        Matrix gu = exp_nilpotent(hm(Scalar(0), ub, {}));
        CHECK(gu * h_type1(x) * inverse(gu) == h_type1(ad_exp_u(ub, x)));

        auto yb = random_pair();
        Matrix gy = exp_nilpotent(hm(Scalar(0), {}, yb));
        CHECK(gy * h_type1(x) * inverse(gy) == h_type1(ad_exp_y(yb, x)));

        TypeIIElement w(random_mat2(), random_quad(), random_scalar());
        auto zb = random_quad();
        Matrix gz = exp_nilpotent(h_type2(TypeIIElement(Matrix(2, 2), zb, Scalar(0))));
        CHECK(gz * h_type2(w) * inverse(gz) == h_type2(ad_exp_z(zb, w)));
    }
    // GL(2) conjugation through the block embedding
    Matrix g = mat2(2, 1, 1, 1);
    TypeIElement x(random_mat2(), random_scalar(), random_pair(), random_pair());
    Matrix emb = embed_gl2_type1(g);
    CHECK(emb * h_type1(x) * inverse(emb) == h_type1(ad_gl2_type1(g, x)));
    CHECK(emb.transpose() * convention_C1().gram * emb == convention_C1().gram);
    CHECK_THROWS(exp_nilpotent(Matrix::identity(7)));
}

TEST_CASE("catalog inventory") {
    auto all = full_catalog();
    CHECK(all.size() == 103);
    CHECK(theorem_entries("T1").size() == 26);
    CHECK(theorem_entries("T3").size() == 8);
    CHECK(theorem_entries("T2").size() == 69);
    for (const auto& e : all) {
        CHECK(e.algebra.closed);
        CHECK((e.convention == "C1" || e.convention == "C2"));
        CHECK((e.declared_type == 2) == (e.convention == "C2"));
    }
    auto found = find_catalog_entry("T1.1-0");
    REQUIRE(found.has_value());
    CHECK(found->declared_type == 1);
    CHECK(!find_catalog_entry("T9.9").has_value());
    // --param style extension adds instances
    CHECK(theorem_entries("T1", {{"lambda", Scalar(3)}}).size() == 27);
}

TEST_CASE("distinguished subspaces") {
    CHECK(m_full().dim() == 5);
    CHECK(hI_span().dim() == 9);
    CHECK(hs_span().dim() == 7);
    CHECK(n_full().dim() == 5);
    CHECK(hII_span().dim() == 9);
    // m(1,1,2) only carries the first u-direction; full m adds the second
    CHECK(m_subspace(1, 1, 2).dim() == 4);
    CHECK(m_full().contains(m_subspace(1, 1, 2)));
    CHECK(m_full().contains(m_subspace(1, 0, 2)));
    CHECK(hI_span().contains(m_full()));
    CHECK(hII_span().contains(n_full()));
}
