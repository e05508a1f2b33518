#include "doctest.h"

#include "trigon/errors.hpp"
#include "trigon/field.hpp"

using namespace trigon;

namespace {

void check_field_axioms(const Field& f) {
    const int q = f.q();
    for (int a = 0; a < q; ++a) {
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
        CHECK(f.mul(a, 0) == 0);
        CHECK(f.add(a, f.neg(a)) == 0);
        if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, b) == f.mul(b, a));
            for (int c = 0; c < q; ++c) {
                CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
}

} // namespace

TEST_CASE("prime fields match modular arithmetic") {
    for (int q : {2, 3, 5, 7, 11, 13}) {
        Field f(q);
        CHECK(f.p() == q);
        CHECK(f.degree() == 1);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == (a + b) % q);
                CHECK(f.mul(a, b) == (a * b) % q);
            }
    }
}

TEST_CASE("field axioms hold for every supported order") {
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27}) {
        CAPTURE(q);
        check_field_axioms(Field(q));
    }
}

TEST_CASE("GF(4) generator satisfies a*a = a + 1") {
    Field f(4);
    // element 2 encodes the polynomial x
    CHECK(f.mul(2, 2) == f.add(2, 1));
    CHECK(f.mul(2, 2) == 3);
}

TEST_CASE("GF(9) arithmetic uses the pinned modulus x^2 + 1") {
    Field f(9);
    CHECK(f.p() == 3);
    CHECK(f.degree() == 2);
    CHECK(f.modulus() == std::vector<int>{1, 0, 1});
    // element 3 encodes x; x*x = -1 = 2
    CHECK(f.mul(3, 3) == 2);
}

TEST_CASE("non prime powers are rejected") {
    for (int q : {0, 1, 6, 10, 12, 14, 15, 18, 20, 21, 22, 24, 26}) {
        CAPTURE(q);
        CHECK_THROWS_AS(Field{q}, NotPrimePower);
    }
}

TEST_CASE("orders above the supported cap are rejected") {
    for (int q : {29, 31, 32, 49, 64}) {
        CAPTURE(q);
        CHECK_THROWS_AS(Field{q}, UnsupportedOrder);
    }
}

TEST_CASE("division by zero throws") {
    Field f(7);
    CHECK_THROWS_AS(f.inv(0), DivisionByZero);
    CHECK_THROWS_AS(f.div(3, 0), DivisionByZero);
}

TEST_CASE("frobenius: x -> x^p is additive in extension fields") {
    for (int q : {4, 8, 9, 16, 25, 27}) {
        CAPTURE(q);
        Field f(q);
        auto pow = [&](int a, int e) {
            int r = 1;
            for (int i = 0; i < e; ++i) r = f.mul(r, a);
            return r;
        };
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                CHECK(pow(f.add(a, b), f.p()) == f.add(pow(a, f.p()), pow(b, f.p())));
    }
}
