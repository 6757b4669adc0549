#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2h/matrix.hpp"
#include "g2h/subspace.hpp"

using namespace g2h;

namespace {

std::mt19937 rng(12345);

Scalar random_scalar() {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), irr(-2, 2);
    return Scalar(Rational(num(rng), den(rng)), Rational(irr(rng), den(rng)));
}

Matrix random_matrix(size_t r, size_t c) {
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m(i, j) = random_scalar();
    return m;
}

}  // namespace

TEST_CASE("rank, inverse and kernel over the quadratic field") {
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(5, 5);
        size_t r = rank(a);
        CHECK(r + kernel(a).dim() == 5);
        if (r == 5) {
            Matrix inv = inverse(a);
            CHECK(a * inv == Matrix::identity(5));
            CHECK(inv * a == Matrix::identity(5));
        }
    }
    // a matrix that is singular over Q(sqrt 2) but not over Q:
    // [[1, r2], [r2, 2]] has determinant 0
    Matrix s(2, 2);
    s(0, 0) = Scalar(1);
    s(0, 1) = Scalar::sqrt2();
    s(1, 0) = Scalar::sqrt2();
    s(1, 1) = Scalar(2);
    CHECK(rank(s) == 1);
    CHECK(kernel(s).contains({Scalar::sqrt2(), Scalar(-1)}));
}

TEST_CASE("signature of symmetric matrices") {
    Matrix hyp(2, 2);
    hyp(0, 1) = hyp(1, 0) = Scalar(1);
    auto sig = signature(hyp);
    CHECK(sig.pos == 1);
    CHECK(sig.neg == 1);
    CHECK(sig.zero == 0);

    Matrix d(3, 3);
    d(0, 0) = Scalar(2) - Scalar::sqrt2();       // positive
    d(1, 1) = Scalar(1) - Scalar::sqrt2();       // negative
    auto sd = signature(d);                      // third entry zero
    CHECK(sd.pos == 1);
    CHECK(sd.neg == 1);
    CHECK(sd.zero == 1);
}

TEST_CASE("subspaces are canonical") {
    // same plane from two generating sets
    Vec a = {Scalar(1), Scalar(2), Scalar(0)};
    Vec b = {Scalar(0), Scalar(1), Scalar(1)};
    Subspace s1 = Subspace::span(3, {a, b});
    Subspace s2 = Subspace::span(3, {vec_add(a, b), vec_sub(a, vec_scale(Scalar(3), b)), a});
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(s1.contains(vec_add(a, vec_scale(Scalar(-1, 2), b))));
    auto coords = s1.coordinates(a);
    REQUIRE(coords.has_value());

    Subspace zero(3);
    CHECK(s1.sum(zero) == s1);
    CHECK(s1.intersect(Subspace::full(3)) == s1);
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec> va, vb;
        for (int i = 0; i < 3; ++i) {
            va.push_back(random_matrix(1, 6).flatten());
            vb.push_back(random_matrix(1, 6).flatten());
        }
        Subspace a = Subspace::span(6, va), b = Subspace::span(6, vb);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
        CHECK(a.sum(b).contains(a));
        CHECK(a.contains(a.intersect(b)));
    }
}

TEST_CASE("matrix helpers") {
    Matrix m = random_matrix(4, 4);
    CHECK(Matrix::unflatten(m.flatten(), 4, 4) == m);
    CHECK(m.transpose().transpose() == m);
    Matrix n = random_matrix(4, 4);
    CHECK(commutator(m, n) == -(commutator(n, m)));
    CHECK((m * n).trace() == (n * m).trace());
}
