#include <catch2/catch_amalgamated.hpp>

#include "admac/rational.hpp"
#include "support/generators.hpp"

using namespace admac;
using admac::testing::Rng;

TEST_CASE("exact scalar parsing and rendering") {
    CHECK(ExactScalar::parse("3/4") == ExactScalar(3, 4));
    CHECK(ExactScalar::parse("-22250/81") == ExactScalar(-22250, 81));
    CHECK(ExactScalar::parse("7") == ExactScalar(7));
    CHECK(ExactScalar::parse("0.75") == ExactScalar(3, 4));
    CHECK(ExactScalar::parse("-0.05") == ExactScalar(-1, 20));
    CHECK(ExactScalar::parse("1.1") == ExactScalar(11, 10));
    CHECK(ExactScalar::parse(" 22/3 ") == ExactScalar(22, 3));

    CHECK(ExactScalar(28700, 27).str() == "28700/27");
    CHECK(ExactScalar(5).str() == "5");
    CHECK(ExactScalar(4, -8).str() == "-1/2");

    CHECK_THROWS_AS(ExactScalar::parse(""), Error);
    CHECK_THROWS_AS(ExactScalar::parse("1.2.3"), Error);
    CHECK_THROWS_AS(ExactScalar::parse("abc"), Error);
    CHECK_THROWS_AS(ExactScalar::parse("1/0"), Error);
}

TEST_CASE("exact scalar arithmetic") {
    CHECK(ExactScalar(3, 4) + ExactScalar(1, 20) == ExactScalar(4, 5));
    CHECK(ExactScalar(1) / ExactScalar(3) * ExactScalar(3) == ExactScalar(1));
    CHECK((ExactScalar(22, 3)).to_double() == Catch::Approx(7.3333333));
    CHECK_THROWS_AS(ExactScalar(1) / ExactScalar(0), Error);

    // invariants: lowest terms, positive denominator
    ExactScalar x(6, -8);
    CHECK(x.numerator() == -3);
    CHECK(x.denominator() == 4);
}

TEST_CASE("exact scalar arithmetic is associative and commutative") {
    Rng rng(1001);
    for (int i = 0; i < 200; ++i) {
        ExactScalar a = rng.rational(-50, 50, 20);
        ExactScalar b = rng.rational(-50, 50, 20);
        ExactScalar c = rng.rational(-50, 50, 20);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact scalar string form round-trips losslessly") {
    Rng rng(1002);
    for (int i = 0; i < 200; ++i) {
        ExactScalar a = rng.rational(-100000, 100000, 9999);
        CHECK(ExactScalar::parse(a.str()) == a);
    }
}

TEST_CASE("six significant digit rendering matches the report style") {
    CHECK(decimal6(ExactScalar(28700, 27)) == "1062.96");
    CHECK(decimal6(ExactScalar(197, 27)) == "7.2963");
    CHECK(decimal6(ExactScalar(1100)) == "1100");
    CHECK(decimal6(0.835465360) == "0.835465");
}

TEST_CASE("approx scalar enforces finiteness and tolerant comparison") {
    ApproxScalar big(1e308);
    CHECK_THROWS_AS(big * big, Error);
    CHECK_THROWS_AS(ApproxScalar(1.0) / ApproxScalar(0.0), Error);

    CHECK(ApproxScalar::eq(ApproxScalar(1.0), ApproxScalar(1.0 + 1e-10)));
    CHECK_FALSE(ApproxScalar::eq(ApproxScalar(1.0), ApproxScalar(1.0 + 1e-6)));
    CHECK(ApproxScalar::less(ApproxScalar(1.0), ApproxScalar(1.0 + 1e-6)));
    CHECK_FALSE(ApproxScalar::less(ApproxScalar(1.0), ApproxScalar(1.0 + 1e-10)));
}
