#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darcais/errors.hpp"
#include "darcais/hooks.hpp"
#include "darcais/int_poly.hpp"
#include "darcais/nt.hpp"

using namespace darcais;

namespace {
std::vector<long> coeffs_of(const IntPoly& p) {
    std::vector<long> out;
    for (long k = 0; k <= p.degree(); ++k) out.push_back(p.coeff(k).get_si());
    return out;
}
} // namespace

TEST_CASE("basic polynomial arithmetic") {
    IntPoly a({Int(1), Int(2)});       // 1 + 2x
    IntPoly b({Int(-1), Int(0), Int(3)}); // -1 + 3x^2
    CHECK((a + b).degree() == 2);
    CHECK(coeffs_of(a * b) == std::vector<long>{-1, -2, 3, 6});
    CHECK(IntPoly({Int(0), Int(0)}).is_zero());
    CHECK(IntPoly{}.degree() == -1);
    CHECK(a.eval(Int(5)) == 11);

    auto [q, r] = (a * b).divmod_monic(IntPoly({Int(0), Int(0), Int(1)})); // by x^2
    CHECK(coeffs_of(q) == std::vector<long>{3, 6});
    CHECK(coeffs_of(r) == std::vector<long>{-1, -2});
    CHECK_THROWS_AS(a.divmod_monic(IntPoly({Int(1), Int(2)})), non_monic);

    CHECK(coeffs_of(IntPoly({Int(1), Int(1)}).compose(IntPoly({Int(0), Int(2)}))) ==
          std::vector<long>{1, 2}); // 1 + (2x)
    CHECK(IntPoly({Int(4), Int(0), Int(7)}).derivative() == IntPoly({Int(0), Int(14)}));
    CHECK(IntPoly({Int(0), Int(3)}).quotient_by_x() == IntPoly::constant(3));
    CHECK_THROWS_AS(IntPoly({Int(1), Int(3)}).quotient_by_x(), error);
    CHECK(IntPoly({Int(2), Int(0), Int(-1)}).to_string() == "-x^2 + 2");
}

TEST_CASE("D'Arcais recurrence: closed small cases") {
    auto A = darcais_sequence(ArithFn::sigma(), 5);
    CHECK(A[0] == IntPoly::constant(1));
    CHECK(A[1] == IntPoly::x()); // A_1 = x
    CHECK(coeffs_of(A[2]) == std::vector<long>{0, 3, 1}); // x^2 + 3x
    CHECK(coeffs_of(A[3]) == std::vector<long>{0, 8, 9, 1});
    CHECK(coeffs_of(A[4]) == std::vector<long>{0, 42, 59, 18, 1});
    CHECK(coeffs_of(A[5]) == std::vector<long>{0, 144, 450, 215, 30, 1});

    // A_2 = x(x + g(2)) for any g
    auto t = ArithFn::table({Int(1), Int(-7)});
    auto At = darcais_sequence(t, 2);
    CHECK(coeffs_of(At[2]) == std::vector<long>{0, -7, 1});
}

TEST_CASE("A_n^sigma invariants: monic, degree n, nonnegative, x | A_n") {
    auto A = darcais_sequence(ArithFn::sigma(), 40);
    for (long n = 1; n <= 40; ++n) {
        CHECK(A[n].degree() == n);
        CHECK(A[n].is_monic());
        CHECK(A[n].coeff(0) == 0);
        for (long k = 0; k <= n; ++k) CHECK(A[n].coeff(k) >= 0);
    }
}

TEST_CASE("evaluation examples") {
    auto A = darcais_sequence(ArithFn::sigma(), 3);
    CHECK(A[3].eval(Int(1)) == 18);  // 3! * p(3)
    CHECK(A[1].eval(Int(0)) == 0);
    CHECK(A[3].eval(Int(-8)) == 0);  // x(x+1)(x+8)

    CHECK(A[2].eval_gaussian(Int(0), Int(1)) == std::pair<Int, Int>{-1, 3});
    CHECK(A[1].eval_gaussian(Int(0), Int(1)) == std::pair<Int, Int>{0, 1});
    CHECK(A[2].eval_gaussian(Int(0), Int(3)) == std::pair<Int, Int>{-9, 9});
    // eval_gaussian at b = 0 agrees with eval
    CHECK(A[3].eval_gaussian(Int(-8), Int(0)).first == 0);
}

TEST_CASE("exponential series oracle") {
    auto g = ArithFn::sigma();
    SUBCASE("z = 0 gives the constant series 1") {
        auto E = exp_series_oracle(g, Int(0), 6);
        CHECK(E.coeff(0) == 1);
        for (long n = 1; n <= 6; ++n) CHECK(E.coeff(n) == 0);
    }
    SUBCASE("z = 1 gives partition counts") {
        auto E = exp_series_oracle(g, Int(1), 5);
        long expected[] = {1, 1, 2, 3, 5, 7};
        for (long n = 0; n <= 5; ++n) {
            CHECK(E.coeff(n) == expected[n]);
            // independent enumeration oracle
            CHECK(E.coeff(n) == Rat(static_cast<long>(partitions(n).size())));
        }
    }
    SUBCASE("z = -8 vanishes at q^3") {
        auto E = exp_series_oracle(g, Int(-8), 3);
        CHECK(E.coeff(3) == 0);
    }
}

TEST_CASE("oracle equivalence: recurrence vs exponential, exact rationals") {
    for (const char* spec : {"sigma", "power:1"}) {
        auto g = ArithFn::parse(spec);
        auto A = darcais_sequence(g, 25);
        Int fact = 1;
        std::vector<RatSeries> oracles;
        for (long z : {-3, -1, 0, 1, 2, 5}) oracles.push_back(exp_series_oracle(g, Int(z), 25));
        for (long n = 0; n <= 25; ++n) {
            if (n > 0) fact *= n;
            int zi = 0;
            for (long z : {-3, -1, 0, 1, 2, 5}) {
                CHECK(Rat(A[n].eval(Int(z))) == oracles[zi].coeff(n) * Rat(fact));
                ++zi;
            }
        }
    }
}

TEST_CASE("product expansion oracle patterns") {
    SUBCASE("Euler, r = 1") {
        auto c = product_expansion_oracle(1, 7);
        CHECK(c == std::vector<Int>{1, -1, -1, 0, 0, 1, 0, 1});
    }
    SUBCASE("Jacobi, r = 3") {
        auto c = product_expansion_oracle(3, 6);
        CHECK(c == std::vector<Int>{1, -3, 0, 5, 0, 0, -7});
    }
    SUBCASE("empty power, r = 0") {
        auto c = product_expansion_oracle(0, 4);
        CHECK(c == std::vector<Int>{1, 0, 0, 0, 0});
    }
    SUBCASE("negative power counts partitions at r = -1") {
        auto c = product_expansion_oracle(-1, 10);
        for (long n = 0; n <= 10; ++n)
            CHECK(c[n] == static_cast<long>(partitions(n).size()));
    }
}

TEST_CASE("product oracle matches A_n(-r) exactly") {
    auto A = darcais_sequence(ArithFn::sigma(), 20);
    for (long r : {-2, -1, 0, 1, 2, 3, 8}) {
        auto c = product_expansion_oracle(r, 20);
        Int fact = 1;
        for (long n = 0; n <= 20; ++n) {
            if (n > 0) fact *= n;
            CHECK(A[n].eval(Int(-r)) == fact * c[n]);
        }
    }
}

TEST_CASE("pentagonal pattern check") {
    CHECK(pentagonal_pattern_check(0).status == Status::verified);
    CHECK(pentagonal_pattern_check(7).status == Status::verified);
    CHECK(pentagonal_pattern_check(12).status == Status::verified);
    CHECK(pentagonal_pattern_check(60).status == Status::verified);

    // nonzero set for N = 7 is exactly the pentagonal indices
    auto A = darcais_sequence(ArithFn::sigma(), 12);
    std::vector<long> nonzero;
    for (long n = 0; n <= 7; ++n)
        if (A[n].eval(Int(-1)) != 0) nonzero.push_back(n);
    CHECK(nonzero == std::vector<long>{0, 1, 2, 5, 7});
    CHECK(A[12].eval(Int(-1)) != 0); // 12 = k(3k-1)/2 at k = 3
    CHECK(is_generalized_pentagonal(12));
}

TEST_CASE("P_n(1) equals the partition count (enumeration oracle)") {
    auto A = darcais_sequence(ArithFn::sigma(), 15);
    Int fact = 1;
    for (long n = 0; n <= 15; ++n) {
        if (n > 0) fact *= n;
        CHECK(A[n].eval(Int(1)) == fact * static_cast<long>(partitions(n).size()));
    }
}

TEST_CASE("table-backed g propagates range errors") {
    auto t = ArithFn::table({Int(1), Int(2)});
    CHECK_THROWS_AS(darcais_sequence(t, 5), table_out_of_range);
    CHECK(darcais_sequence(t, 2).size() == 3);
}
