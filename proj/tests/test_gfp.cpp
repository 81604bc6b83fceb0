#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darcais/errors.hpp"
#include "darcais/gfp.hpp"
#include "darcais/int_poly.hpp"

#include <random>

using namespace darcais;

namespace {

GFpPoly make(std::uint64_t p, std::vector<std::uint64_t> c) {
    return GFpPoly(p, std::move(c));
}

GFpPoly reconstruct(const FactorList& fl, std::uint64_t p) {
    GFpPoly prod = GFpPoly::constant(p, fl.unit);
    for (const auto& fac : fl.factors)
        for (long i = 0; i < fac.multiplicity; ++i) prod = prod * fac.poly;
    return prod;
}

} // namespace

TEST_CASE("reduction mod p") {
    auto A = darcais_sequence(ArithFn::sigma(), 3);
    CHECK(reduce_mod_p(A[2], 3) == make(3, {0, 0, 1}));         // x^2
    CHECK(reduce_mod_p(A[1], 2) == make(2, {0, 1}));            // x
    CHECK(reduce_mod_p(A[3], 3) == make(3, {0, 2, 0, 1}));      // x^3 + 2x = x(x^2 - 1)
    CHECK_THROWS_AS(reduce_mod_p(A[1], 6), not_prime);
    CHECK_THROWS_AS(reduce_mod_p(A[1], 1), not_prime);
}

TEST_CASE("factorization examples") {
    SUBCASE("x^2 + 1 irreducible over F_3") {
        auto fl = factor_gfp(make(3, {1, 0, 1}));
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].multiplicity == 1);
        CHECK(fl.factors[0].poly.degree() == 2);
        CHECK(is_irreducible(fl.factors[0].poly));
    }
    SUBCASE("x^2 + 2 irreducible over F_7") {
        auto fl = factor_gfp(make(7, {2, 0, 1}));
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].poly.degree() == 2);
    }
    SUBCASE("x^2 + 3x over F_5 splits as x(x+3)") {
        auto fl = factor_gfp(make(5, {0, 3, 1}));
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].poly == make(5, {0, 1}));
        CHECK(fl.factors[1].poly == make(5, {3, 1}));
    }
    SUBCASE("zero polynomial rejected") {
        CHECK_THROWS_AS(factor_gfp(GFpPoly(5)), zero_polynomial);
        CHECK_THROWS_AS(degree_spectrum(GFpPoly(5)), zero_polynomial);
    }
    SUBCASE("repeated and p-power factors") {
        // (x+1)^4 over F_2: derivative vanishes
        auto f = make(2, {1, 1}) * make(2, {1, 1}) * make(2, {1, 1}) * make(2, {1, 1});
        auto fl = factor_gfp(f);
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].poly == make(2, {1, 1}));
        CHECK(fl.factors[0].multiplicity == 4);
    }
}

TEST_CASE("degree spectrum examples") {
    // x(x+1)(x+8) mod 2 = x^2 (x+1)
    auto A3 = darcais_sequence(ArithFn::sigma(), 3)[3];
    CHECK(degree_spectrum(reduce_mod_p(A3, 2)) == std::set<long>{1});
    CHECK(degree_spectrum(make(3, {1, 0, 1})) == std::set<long>{2}); // Phi_4 mod 3
    CHECK(degree_spectrum(make(5, {1})).empty());
}

TEST_CASE("splits_into_linears") {
    auto A3 = darcais_sequence(ArithFn::sigma(), 3)[3];
    CHECK(splits_into_linears(reduce_mod_p(A3, 3)));
    CHECK_FALSE(splits_into_linears(make(3, {1, 0, 1})));
    CHECK(splits_into_linears(make(2, {0, 1})));
    CHECK(splits_into_linears(make(7, {3}))); // constant
}

TEST_CASE("factorization round-trip and certified irreducibility on random inputs") {
    std::mt19937_64 rng(20240809);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL}) {
        std::uniform_int_distribution<std::uint64_t> coef(0, p - 1);
        std::uniform_int_distribution<int> degd(1, 12);
        for (int trial = 0; trial < 30; ++trial) {
            int d = degd(rng);
            std::vector<std::uint64_t> c(d + 1);
            for (auto& v : c) v = coef(rng);
            c[d] = 1 + coef(rng) % (p - 1 ? p - 1 : 1);
            if (p == 2) c[d] = 1;
            GFpPoly f(p, std::move(c));
            if (f.is_zero()) continue;
            auto fl = factor_gfp(f, 99 + trial);
            CHECK(reconstruct(fl, p) == f);
            for (const auto& fac : fl.factors) {
                CHECK(is_irreducible(fac.poly));
                CHECK(fac.poly.leading() == 1);
            }
            // factors pairwise distinct
            for (size_t i = 0; i < fl.factors.size(); ++i)
                for (size_t j = i + 1; j < fl.factors.size(); ++j)
                    CHECK_FALSE(fl.factors[i].poly == fl.factors[j].poly);
        }
    }
}

TEST_CASE("factorization is reproducible for a fixed seed") {
    auto f = reduce_mod_p(darcais_sequence(ArithFn::sigma(), 24)[24], 13);
    auto a = factor_gfp(f, 7);
    auto b = factor_gfp(f, 7);
    REQUIRE(a.factors.size() == b.factors.size());
    for (size_t i = 0; i < a.factors.size(); ++i) {
        CHECK(a.factors[i].poly == b.factors[i].poly);
        CHECK(a.factors[i].multiplicity == b.factors[i].multiplicity);
    }
    CHECK(a.seed == 7);
}

TEST_CASE("compute-then-reduce equals reduce-then-compute") {
    for (const char* spec : {"sigma", "power:1"}) {
        auto g = ArithFn::parse(spec);
        auto A = darcais_sequence(g, 40);
        for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
            auto Ap = darcais_sequence_mod_p(g, p, 40);
            for (long n = 0; n <= 40; ++n) CHECK(reduce_mod_p(A[n], p) == Ap[n]);
        }
    }
}

TEST_CASE("A_n mod 2 always splits into linears; mod 3 iff g(3) gate") {
    auto tbl_good = ArithFn::table([] {
        std::vector<Int> v;
        for (long n = 1; n <= 40; ++n)
            v.push_back(Int(1 - 2 * (n % 2 == 0) + 6 * (n % 3 == 0)));
        return v;
    }());
    for (const ArithFn& g : {ArithFn::sigma(), ArithFn::power(1), tbl_good}) {
        auto A2 = darcais_sequence_mod_p(g, 2, 40);
        for (long n = 1; n <= 40; ++n) CHECK(splits_into_linears(A2[n]));
    }
    // g(3) mod 3 in {0,1}: splits
    for (const ArithFn& g : {ArithFn::sigma(), ArithFn::power(1)}) {
        auto A3 = darcais_sequence_mod_p(g, 3, 40);
        for (long n = 1; n <= 40; ++n) CHECK(splits_into_linears(A3[n]));
    }
    // g(3) mod 3 == 2: A_3 acquires an irreducible quadratic
    auto bad = ArithFn::table({Int(1), Int(1), Int(2), Int(1)});
    auto A3 = darcais_sequence_mod_p(bad, 3, 3);
    CHECK_FALSE(splits_into_linears(A3[3]));
}

TEST_CASE("A_3^g mod 3 is x(x^2 - g(3)) for any g") {
    for (long g3 : {0L, 1L, 2L, 4L, 7L, -5L}) {
        auto g = ArithFn::table({Int(1), Int(5), Int(g3)});
        auto A3 = darcais_sequence_mod_p(g, 3, 3)[3];
        std::uint64_t r = ((g3 % 3) + 3) % 3;
        GFpPoly expected =
            GFpPoly(3, {0, (3 - r) % 3, 0, 1}); // x^3 - g(3) x
        CHECK(A3 == expected);
    }
}

TEST_CASE("periodicity lemma") {
    CHECK(verify_periodicity(ArithFn::sigma(), 2, 50).status == Status::verified);
    CHECK(verify_periodicity(ArithFn::sigma(), 7, 100).status == Status::verified);
    CHECK(verify_periodicity(ArithFn::power(1), 3, 60).status == Status::verified);
    CHECK_THROWS_AS(verify_periodicity(ArithFn::sigma(), 4, 10), not_prime);
    auto rep = verify_periodicity(ArithFn::sigma(), 5, 60);
    CHECK(rep.claim_id == "lemma.periodicity");
    CHECK(rep.witnesses.empty());
}

TEST_CASE("falling factorial lemma") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        auto rep = verify_falling_factorial(ArithFn::sigma(), p);
        CHECK(rep.status == Status::verified);
        CHECK(rep.details["hypothesis_P_integer_valued"] == true);
    }
    // g(n) = n: P_2(1) = 3/2, the integer-valuedness hypothesis fails and so
    // does the congruence at p = 2
    auto rep = verify_falling_factorial(ArithFn::power(1), 2);
    CHECK(rep.status == Status::hypothesis_violated);
    CHECK(rep.details["hypothesis_P_integer_valued"] == false);
    REQUIRE(!rep.witnesses.empty());

    // sigma-like table (divisor-sum twist): integer-valued, lemma holds
    auto tbl = ArithFn::table([] {
        std::vector<Int> v;
        for (long n = 1; n <= 13; ++n)
            v.push_back(Int(1 - 2 * (n % 2 == 0) + 6 * (n % 3 == 0)));
        return v;
    }());
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL})
        CHECK(verify_falling_factorial(tbl, p).status == Status::verified);
}

TEST_CASE("Zmija degree-spectrum conditions") {
    SUBCASE("sigma satisfies all three") {
        auto rep = zmija_conditions(ArithFn::sigma());
        CHECK(rep.status == Status::verified);
        for (const auto& c : rep.details["conditions"]) CHECK(c["holds"] == true);
    }
    SUBCASE("constructed counterwitness fails condition 1") {
        // A_3 = x(x^2 + 15x + 12) == x(x^2 + 2) mod 5, and x^2 + 2 is
        // irreducible (-2 == 3 is not a square mod 5)
        std::vector<Int> v{Int(1), Int(5), Int(6)};
        for (long n = 4; n <= 10; ++n) v.push_back(Int(1));
        auto rep = zmija_conditions(ArithFn::table(v));
        CHECK(rep.status == Status::falsified);
        bool cond1_failed = false;
        for (const auto& c : rep.details["conditions"])
            if (c["condition"] == 1 && c["holds"] == false) cond1_failed = true;
        CHECK(cond1_failed);
        REQUIRE(!rep.witnesses.empty());
        CHECK(rep.witnesses[0]["condition"] == 1);
    }
    SUBCASE("g == 1 reports spectra per condition") {
        auto rep = zmija_conditions(ArithFn::power(0));
        CHECK(rep.details["conditions"].size() == 3);
    }
}

TEST_CASE("mod-p nonvanishing certificates") {
    SUBCASE("x^2 + 9 certified via p = 7") {
        auto rep = modp_nonvanishing_certificate(
            IntPoly({Int(9), Int(0), Int(1)}), ArithFn::sigma(), 7);
        CHECK(rep.status == Status::certified);
    }
    SUBCASE("x^2 + 1 certified via p = 3") {
        auto rep = modp_nonvanishing_certificate(
            IntPoly({Int(1), Int(0), Int(1)}), ArithFn::sigma(), 3);
        CHECK(rep.status == Status::certified);
    }
    SUBCASE("x + 1 inconclusive: linear factor") {
        auto rep = modp_nonvanishing_certificate(IntPoly({Int(1), Int(1)}),
                                                 ArithFn::sigma(), 2);
        CHECK(rep.status == Status::inconclusive);
        REQUIRE(!rep.witnesses.empty());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(modp_nonvanishing_certificate(
                            IntPoly({Int(1), Int(0), Int(2)}), ArithFn::sigma(), 3),
                        non_monic);
        CHECK_THROWS_AS(modp_nonvanishing_certificate(
                            IntPoly({Int(1), Int(0), Int(1)}), ArithFn::sigma(), 4),
                        not_prime);
    }
    SUBCASE("one-sided: A_p not splitting makes the route inconclusive") {
        // g(3) == 2 mod 3 breaks the linear-splitting step of the chain
        auto bad = ArithFn::table({Int(1), Int(1), Int(2)});
        auto rep = modp_nonvanishing_certificate(
            IntPoly({Int(1), Int(0), Int(1)}), bad, 3);
        CHECK(rep.status == Status::inconclusive);
    }
}

TEST_CASE("powmod and gcd basics") {
    auto f = make(5, {1, 0, 1});                // x^2 + 1 over F_5 = (x+2)(x+3)
    CHECK(gcd(f, make(5, {2, 1})) == make(5, {2, 1}));
    auto h = powmod(GFpPoly::x(5), Int(25), f); // x^{p^2} == x mod f
    CHECK(h == GFpPoly::x(5).mod(f));
    CHECK_FALSE(is_irreducible(f));
    CHECK(is_irreducible(make(5, {2, 0, 1}))); // x^2 + 2, -2 = 3 not a square mod 5
}
