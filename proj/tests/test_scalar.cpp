#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2h/scalar.hpp"

using namespace g2h;

TEST_CASE("field arithmetic") {
    Scalar s2 = Scalar::sqrt2();
    CHECK(s2 * s2 == Scalar(2));
    CHECK((Scalar(1) + s2) * (Scalar(1) - s2) == Scalar(-1));

    // unit of norm one: (3 + 2 r2)(3 - 2 r2) = 1
    Scalar u = Scalar(3) + Scalar::sqrt2_times(2);
    CHECK(u.inverse() == Scalar(3) - Scalar::sqrt2_times(2));
    CHECK(u * u.inverse() == Scalar(1));
    CHECK(u.conj() == u.inverse());

    Scalar x(Rational(7, 3), Rational(-2, 5));
    CHECK(x / x == Scalar(1));
    CHECK(x + (-x) == Scalar(0));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("exact sign under the real embedding") {
    CHECK((Scalar::sqrt2() - Scalar(1)).sign() == 1);   // 1.414... > 1
    CHECK((Scalar(3) - Scalar::sqrt2_times(2)).sign() == 1);   // 9 > 8
    CHECK((Scalar(7) - Scalar::sqrt2_times(5)).sign() == -1);  // 49 < 50
    CHECK(Scalar(0).sign() == 0);
    CHECK((Scalar(-1, 2) + Scalar::sqrt2_times(1, 2)).sign() == 1);
    CHECK(Scalar(1, 2) < Scalar::sqrt2_times(1, 2));
}

TEST_CASE("text syntax round trip") {
    for (const char* t : {"0", "1", "-2/3", "r2", "-r2", "1/2 r2", "1 + 1 r2",
                          "-1 + 1/2 r2", "3/4 - 5/7 r2"}) {
        Scalar s = Scalar::parse(t);
        CHECK(Scalar::parse(s.str()) == s);
    }
    CHECK(Scalar::parse("1 + 1 r2") == Scalar(1) + Scalar::sqrt2());
    CHECK(Scalar::parse("- 1 + 1/2 r2") == Scalar(-1) + Scalar::sqrt2_times(1, 2));
    CHECK_THROWS(Scalar::parse("one"));
    CHECK_THROWS(Scalar::parse("1 +"));

    size_t pos = 0;
    Scalar head = Scalar::parse_prefix("1/2 + 1/4 r2 rest", pos);
    CHECK(head == Scalar(1, 2) + Scalar::sqrt2_times(1, 4));
    CHECK(pos < 17);  // stops before "rest"
}

TEST_CASE("square roots inside the field") {
    CHECK(Scalar(2).sqrt_in_field() == Scalar::sqrt2());
    CHECK(Scalar(9, 4).sqrt_in_field() == Scalar(3, 2));
    // (1 + r2)^2 = 3 + 2 r2
    CHECK((Scalar(3) + Scalar::sqrt2_times(2)).sqrt_in_field() == Scalar(1) + Scalar::sqrt2());
    CHECK(!Scalar(3).sqrt_in_field().has_value());
    CHECK(!Scalar::sqrt2_times(1).sqrt_in_field().has_value());
    CHECK(!(Scalar(-1)).sqrt_in_field().has_value());
}
