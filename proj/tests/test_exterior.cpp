#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "g2h/kform.hpp"

using namespace g2h;

namespace {

std::mt19937 rng(777);

Scalar random_scalar() {
    std::uniform_int_distribution<long> num(-3, 3), irr(-1, 1);
    return Scalar(Rational(num(rng)), Rational(irr(rng)));
}

Vec random_vec(size_t n) {
    Vec v(n);
    for (auto& x : v) x = random_scalar();
    return v;
}

}  // namespace

TEST_CASE("determinant evaluation convention") {
    KForm f(2, 7);
    f.add_term({0, 1}, Scalar(1));  // b^1 ^ b^2
    CHECK(f.evaluate({basis_vec(7, 0), basis_vec(7, 1)}) == Scalar(1));
    CHECK(f.evaluate({basis_vec(7, 1), basis_vec(7, 0)}) == Scalar(-1));
    CHECK(f.evaluate({basis_vec(7, 0), basis_vec(7, 0)}) == Scalar(0));

    // alternating and multilinear on random arguments
    KForm w(3, 7);
    w.add_term({0, 2, 5}, Scalar(1) + Scalar::sqrt2());
    w.add_term({1, 3, 4}, Scalar(-2));
    for (int t = 0; t < 10; ++t) {
        Vec a = random_vec(7), b = random_vec(7), c = random_vec(7);
        CHECK(w.evaluate({a, b, c}) == -w.evaluate({b, a, c}));
        CHECK(w.evaluate({a, b, c}) == w.evaluate({b, c, a}));
        Scalar lam = random_scalar();
        CHECK(w.evaluate({vec_scale(lam, a), b, c}) == lam * w.evaluate({a, b, c}));
        CHECK(w.evaluate({vec_add(a, b), b, c}) == w.evaluate({a, b, c}));
    }
}

TEST_CASE("unsorted index insertion normalizes with sign") {
    KForm f(2, 7), g(2, 7);
    f.add_term({3, 1}, Scalar(1));
    g.add_term({1, 3}, Scalar(-1));
    CHECK(f == g);
}

TEST_CASE("convention data") {
    for (const char* name : {"C1", "C2", "C3"}) {
        const Convention& conv = convention_by_name(name);
        CHECK(conv.gram == conv.gram.transpose());
        CHECK(conv.gram * conv.gram_inv == Matrix::identity(7));
        auto sig = signature(conv.gram);
        CHECK(sig.pos == 3);
        CHECK(sig.neg == 4);
        CHECK(sig.zero == 0);
    }
    CHECK_THROWS(convention_by_name("C4"));
}

TEST_CASE("cross product") {
    const Convention& c1 = convention_C1();
    // calibration point: b1 x b6 = r2 b3
    Vec x = cross(c1, basis_vec(7, 0), basis_vec(7, 5));
    CHECK(x == vec_scale(Scalar::sqrt2(), basis_vec(7, 2)));

    for (const char* name : {"C1", "C2", "C3"}) {
        const Convention& conv = convention_by_name(name);
        for (int t = 0; t < 15; ++t) {
            Vec u = random_vec(7), v = random_vec(7);
            Vec uv = cross(conv, u, v);
            CHECK(vec_is_zero(vec_add(uv, cross(conv, v, u))));
            CHECK(pair(conv.gram, uv, u) == Scalar(0));
            // u x (u x v) = -<u,u> v + <u,v> u
            Vec lhs = cross(conv, u, uv);
            Vec rhs = vec_add(vec_scale(-pair(conv.gram, u, u), v),
                              vec_scale(pair(conv.gram, u, v), u));
            CHECK(vec_is_zero(vec_sub(lhs, rhs)));
        }
    }
}

TEST_CASE("hat_E of the first basis vector") {
    const Convention& c1 = convention_C1();
    Subspace e = hat_E(c1, basis_vec(7, 0));
    CHECK(e.dim() == 3);
    CHECK(e.contains(basis_vec(7, 0)));
    for (const auto& a : e.basis())
        for (const auto& b : e.basis()) CHECK(pair(c1.gram, a, b) == Scalar(0));
}

TEST_CASE("derivation action is a Lie algebra action") {
    const Convention& c1 = convention_C1();
    std::uniform_int_distribution<size_t> idx(0, 6);
    for (int t = 0; t < 10; ++t) {
        Matrix a(7, 7), b(7, 7);
        for (int k = 0; k < 6; ++k) {
            a(idx(rng), idx(rng)) = random_scalar();
            b(idx(rng), idx(rng)) = random_scalar();
        }
        // inserting into arguments is an anti-homomorphism:
        // [A,B] . f = B . (A . f) - A . (B . f)
        KForm lhs = derivation_action(commutator(a, b), c1.omega);
        KForm rhs = derivation_action(b, derivation_action(a, c1.omega)) -
                    derivation_action(a, derivation_action(b, c1.omega));
        CHECK(lhs == rhs);
        // evaluation identity: (A.f)(x,y,z) = f(Ax,y,z)+f(x,Ay,z)+f(x,y,Az)
        Vec x = random_vec(7), y = random_vec(7), z = random_vec(7);
        KForm af = derivation_action(a, c1.omega);
        Scalar direct = c1.omega.evaluate({a.apply(x), y, z}) +
                        c1.omega.evaluate({x, a.apply(y), z}) +
                        c1.omega.evaluate({x, y, a.apply(z)});
        CHECK(af.evaluate({x, y, z}) == direct);
    }
}
