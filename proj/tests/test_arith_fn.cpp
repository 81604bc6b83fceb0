#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darcais/arith_fn.hpp"
#include "darcais/errors.hpp"

#include <fstream>

using namespace darcais;

TEST_CASE("sigma examples and normalization") {
    auto g = ArithFn::sigma();
    CHECK(g(1) == 1);
    CHECK(g(3) == 4); // 1 + 3
    CHECK(g(4) == 7); // 1 + 2 + 4
    CHECK(g(12) == 28);
    CHECK(g.g3_mod3() == 1);
}

TEST_CASE("sigma equals the brute-force divisor sum") {
    auto g = ArithFn::sigma();
    for (long n = 1; n <= 200; ++n) {
        Int s = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) s += d;
        CHECK(g(n) == s);
    }
}

TEST_CASE("power family") {
    auto id = ArithFn::power(1);
    CHECK(id(6) == 6);
    CHECK(id(1) == 1);
    auto one = ArithFn::power(0);
    for (long n = 1; n <= 50; ++n) CHECK(one(n) == 1);
    auto cube = ArithFn::power(3);
    CHECK(cube(4) == 64);
    CHECK(cube.g3_mod3() == 0); // 27 mod 3
}

TEST_CASE("table access and errors") {
    auto g = ArithFn::table({Int(1), Int(-2), Int(5)});
    CHECK(g(1) == 1);
    CHECK(g(2) == -2);
    CHECK(g(3) == 5);
    CHECK(g.g3_mod3() == 2);
    CHECK_THROWS_AS(g(4), table_out_of_range);
    CHECK_THROWS_AS(g(0), table_out_of_range);
    CHECK_THROWS_AS(ArithFn::table({Int(2), Int(1)}), not_normalized);
    CHECK_THROWS_AS(ArithFn::table({}), not_normalized);
}

TEST_CASE("negative g(3) residue is reduced into {0,1,2}") {
    auto g = ArithFn::table({Int(1), Int(0), Int(-4)});
    CHECK(g.g3_mod3() == 2); // -4 = -2*3 + 2
}

TEST_CASE("spec parsing") {
    CHECK(ArithFn::parse("sigma")(6) == 12);
    CHECK(ArithFn::parse("power:2")(5) == 25);
    CHECK(ArithFn::parse("[1, 7, -3]")(3) == -3);
    CHECK(ArithFn::parse("table:[1,2]")(2) == 2);

    std::ofstream f("/tmp/darcais_table_test.json");
    f << "[1, 5, 6]";
    f.close();
    auto g = ArithFn::parse("table:@/tmp/darcais_table_test.json");
    CHECK(g(2) == 5);
    CHECK(g(3) == 6);

    CHECK_THROWS_AS(ArithFn::parse("nonsense"), error);
    CHECK_THROWS_AS(ArithFn::parse("[2,1]"), not_normalized);
}

TEST_CASE("round-trip through name()") {
    for (const char* spec : {"sigma", "power:3"}) {
        auto g = ArithFn::parse(spec);
        CHECK(g.name() == spec);
        CHECK(ArithFn::parse(g.name())(7) == g(7));
    }
    auto t = ArithFn::table({Int(1), Int(-9)});
    CHECK(ArithFn::parse(t.name())(2) == -9);
}
