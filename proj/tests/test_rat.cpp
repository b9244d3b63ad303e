#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ellip/rat.hpp>

#include <random>
#include <stdexcept>
#include <string>

using ellip::BigInt;
using ellip::Rat;

TEST_CASE("construction produces canonical form") {
    CHECK(Rat(BigInt(2), BigInt(4)) == Rat(BigInt(1), BigInt(2)));
    CHECK(Rat(BigInt(2), BigInt(4)).num() == 1);
    CHECK(Rat(BigInt(2), BigInt(4)).den() == 2);

    CHECK(Rat(BigInt(-3), BigInt(-6)) == Rat(BigInt(1), BigInt(2)));
    CHECK(Rat(BigInt(-3), BigInt(-6)).num() == 1);

    CHECK(Rat(BigInt(0), BigInt(7)).num() == 0);
    CHECK(Rat(BigInt(0), BigInt(7)).den() == 1);
    CHECK(Rat(BigInt(0), BigInt(7)).is_zero());

    CHECK(Rat(BigInt(3), BigInt(-4)).num() == -3);
    CHECK(Rat(BigInt(3), BigInt(-4)).den() == 4);

    CHECK_THROWS_AS(Rat(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("ordering is the real-number order") {
    CHECK(Rat(BigInt(1), BigInt(3)) < Rat(BigInt(1), BigInt(2)));
    CHECK(Rat(BigInt(-1), BigInt(2)) < Rat(BigInt(1), BigInt(3)));
    CHECK(Rat(BigInt(7), BigInt(3)) > Rat(2));
    CHECK(Rat(2) <= Rat(BigInt(4), BigInt(2)));
    CHECK(Rat(0) == Rat(BigInt(0), BigInt(5)));
}

TEST_CASE("floor rounds toward negative infinity") {
    CHECK(Rat(BigInt(7), BigInt(2)).floor() == 3);
    CHECK(Rat(BigInt(-7), BigInt(2)).floor() == -4);
    CHECK(Rat(BigInt(6), BigInt(3)).floor() == 2);
    CHECK(Rat(BigInt(-6), BigInt(3)).floor() == -2);
    CHECK(Rat(0).floor() == 0);
    CHECK(ellip::floor_div(Rat(BigInt(7), BigInt(2)), Rat(BigInt(1), BigInt(3))) == 10);
    CHECK(ellip::floor_div(Rat(3), Rat(BigInt(3), BigInt(2))) == 2);
}

TEST_CASE("parse accepts p/q and bare integers only") {
    CHECK(Rat::parse("3/2") == Rat(BigInt(3), BigInt(2)));
    CHECK(Rat::parse("-3/2") == Rat(BigInt(-3), BigInt(2)));
    CHECK(Rat::parse("7") == Rat(7));
    CHECK(Rat::parse("0") == Rat(0));
    CHECK(Rat::parse("-5/10") == Rat(BigInt(-1), BigInt(2)));
    CHECK(Rat::parse("007") == Rat(7));

    CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("3/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("a"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse(" 1"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("3/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), std::invalid_argument);

    // Decimal notation is rejected, and the diagnostic names the offending position.
    try {
        Rat::parse("1.5");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        CHECK(msg.find("position 1") != std::string::npos);
        CHECK(msg.find('.') != std::string::npos);
    }
}

TEST_CASE("to_string emits canonical p/q") {
    CHECK(Rat(BigInt(-1), BigInt(2)).to_string() == "-1/2");
    CHECK(Rat(5).to_string() == "5");
    CHECK(Rat(0).to_string() == "0");
    CHECK(Rat(BigInt(10), BigInt(4)).to_string() == "5/2");
}

TEST_CASE("decimal_approx truncates and labels nothing") {
    CHECK(Rat(BigInt(3), BigInt(2)).decimal_approx() == "1.5");
    CHECK(Rat(BigInt(1), BigInt(3)).decimal_approx(5) == "0.33333");
    CHECK(Rat(BigInt(-1), BigInt(8)).decimal_approx() == "-0.125");
    CHECK(Rat(2).decimal_approx() == "2.0");
}

TEST_CASE("arithmetic is exact: algebraic identities on random inputs") {
    std::mt19937_64 eng(20240817u);
    auto rnd = [&]() {
        std::uniform_int_distribution<long long> num(-60, 60);
        std::uniform_int_distribution<long long> den(1, 40);
        return Rat(BigInt(num(eng)), BigInt(den(eng)));
    };
    for (int iter = 0; iter < 300; ++iter) {
        Rat x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) + z == x + (y + z));
        CHECK(x + y == y + x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) - y == x);
        if (!y.is_zero()) CHECK((x / y) * y == x);
        CHECK((x < y) == ((x - y).sign() < 0));
        CHECK(Rat::parse(x.to_string()) == x);
    }
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}
