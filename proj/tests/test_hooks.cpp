#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darcais/errors.hpp"
#include "darcais/hooks.hpp"

using namespace darcais;

TEST_CASE("partition enumeration") {
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(0)[0].parts.empty());
    CHECK(partitions(4).size() == 5);
    CHECK(partitions(10).size() == 42);
    CHECK(partitions(20).size() == 627);

    // reverse lexicographic order
    auto p4 = partitions(4);
    std::vector<std::vector<long>> expected{
        {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    REQUIRE(p4.size() == expected.size());
    for (size_t i = 0; i < p4.size(); ++i) CHECK(p4[i].parts == expected[i]);

    for (const auto& lambda : partitions(9)) {
        CHECK(lambda.weight() == 9);
        for (size_t i = 1; i < lambda.parts.size(); ++i)
            CHECK(lambda.parts[i - 1] >= lambda.parts[i]);
    }

    CHECK_THROWS_AS(partitions(41), bound_exceeded);
    CHECK_THROWS_AS(partitions(-1), bound_exceeded);
}

TEST_CASE("hook length multisets") {
    CHECK(hook_multiset(Partition{{1}}) == std::vector<long>{1});
    CHECK(hook_multiset(Partition{{2, 1}}) == std::vector<long>{3, 1, 1});
    CHECK(hook_multiset(Partition{{2, 2}}) == std::vector<long>{3, 2, 2, 1});
    CHECK(hook_multiset(Partition{{4}}) == std::vector<long>{4, 3, 2, 1});

    for (long n = 0; n <= 10; ++n)
        for (const auto& lambda : partitions(n))
            CHECK(static_cast<long>(hook_multiset(lambda).size()) == n);
}

TEST_CASE("hook product sums") {
    SUBCASE("closed small cases") {
        auto h0 = hook_product_sum(0);
        CHECK(h0.coeff(0) == 1);
        CHECK(h0.degree() == 0);

        auto h1 = hook_product_sum(1); // 1 - z
        CHECK(h1.coeff(0) == 1);
        CHECK(h1.coeff(1) == -1);

        auto h2 = hook_product_sum(2); // 2(1-z)(1-z/4) = 2 - 5/2 z + 1/2 z^2
        CHECK(h2.coeff(0) == 2);
        CHECK(h2.coeff(1) == Rat(-5, 2));
        CHECK(h2.coeff(2) == Rat(1, 2));
    }
    SUBCASE("value at z = 0 is the partition count") {
        for (long n = 0; n <= 12; ++n)
            CHECK(hook_product_sum(n).coeff(0) ==
                  Rat(static_cast<long>(partitions(n).size())));
    }
    SUBCASE("degree is exactly n") {
        for (long n = 0; n <= 12; ++n) CHECK(hook_product_sum(n).degree() == n);
    }
}

TEST_CASE("hook length identity against the recurrence") {
    CHECK(verify_hook_length_identity(1).status == Status::verified);
    CHECK(verify_hook_length_identity(2).status == Status::verified);
    auto rep = verify_hook_length_identity(8);
    CHECK(rep.status == Status::verified);
    CHECK(rep.witnesses.empty());
    CHECK(rep.claim_id == "eq.hook-length");
}
