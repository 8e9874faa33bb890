#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fengrao/generic.hpp"
#include "fengrao/verify.hpp"

using namespace fengrao;

TEST_SUITE("verify") {

TEST_CASE("three-way agreement up to order 3") {
    const auto rep = verify_corpus({24, 3, 5, 2});
    CHECK(rep.semigroups == enumerate_arf(24).size());
    CHECK(rep.checks > 40000);
    CHECK(rep.passed());
    CHECK_FALSE(rep.first_mismatch.has_value());
}

TEST_CASE("thread count does not change the report") {
    const auto one = verify_corpus({14, 2, 3, 1});
    const auto four = verify_corpus({14, 2, 3, 4});
    CHECK(one.semigroups == four.semigroups);
    CHECK(one.checks == four.checks);
    CHECK(one.mismatches == four.mismatches);
}

TEST_CASE("option validation") {
    CHECK_THROWS_AS(verify_corpus({10, 0, 3, 1}), InvalidArgument);
    CHECK_THROWS_AS(verify_corpus({10, 2, -1, 1}), InvalidArgument);
    CHECK_THROWS_AS(verify_corpus({-1, 2, 3, 1}), InvalidArgument);
}

TEST_CASE("tail law for order 3") {
    for (const auto& s : enumerate_arf_semigroups(14)) {
        const Int start = std::max<Int>(2 * s.conductor() - 1, 0);
        Int prev = feng_rao_distance(s, 3, start);
        for (Int m = start + 1; m <= start + 10; ++m) {
            const Int d = feng_rao_distance(s, 3, m);
            CHECK(d == prev + 1);
            prev = d;
        }
    }
}

}  // TEST_SUITE
