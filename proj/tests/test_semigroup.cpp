#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fengrao/semigroup.hpp"
#include "oracle.hpp"

using namespace fengrao;
using V = std::vector<Int>;

namespace {

NumericalSemigroup S(V small) { return NumericalSemigroup::from_small_elements(std::move(small)); }
NumericalSemigroup G(V gens) { return NumericalSemigroup::from_generators(gens); }
NumericalSemigroup M(V d) { return NumericalSemigroup::from_multiplicity_sequence({std::move(d)}); }

NumericalSemigroup from_oracle(const oracle::Sg& o) { return S(o.small()); }

}  // namespace

TEST_SUITE("semigroup") {

TEST_CASE("naturals") {
    NumericalSemigroup n;
    CHECK(n.is_naturals());
    CHECK(n.conductor() == 0);
    CHECK(n.multiplicity() == 1);
    CHECK(n.genus() == 0);
    CHECK(n.num_small() == 1);
    CHECK(n.contains(0));
    CHECK(n.contains(17));
    CHECK_FALSE(n.contains(-1));
    CHECK(multiplicity_sequence(n).d == V{1});
    CHECK(minimal_generators(n) == V{1});
    CHECK(is_arf(n));
    CHECK(M({1}) == n);
    CHECK(G({1}) == n);
}

TEST_CASE("construction from generators") {
    auto s = G({5, 7, 9, 11, 13});
    CHECK(s.conductor() == 9);
    CHECK(s.small_elements() == V{0, 5, 7, 9});
    CHECK(multiplicity_sequence(s).d == V{5, 2, 2, 1});
    CHECK(G({2, 11}).small_elements() == V{0, 2, 4, 6, 8, 10});
    CHECK(G({3, 5}).small_elements() == V{0, 3, 5, 6, 8});
    CHECK(G({13, 11, 9, 7, 5}) == s);
    CHECK_THROWS_AS(G({4, 6}), InvalidArgument);
    CHECK_THROWS_AS(G({}), InvalidArgument);
    CHECK_THROWS_AS(G({0, 3}), InvalidArgument);
}

TEST_CASE("construction from small elements") {
    CHECK(S({0, 4, 8}).conductor() == 8);
    CHECK(S({0, 4, 8}).genus() == 6);
    CHECK(S({0, 4, 5, 6, 7, 8}) == S({0, 4}));
    CHECK(S({0, 3, 4, 5}) == S({0, 3}));
    CHECK(S({0}) == NumericalSemigroup{});
    CHECK(S({0, 1, 2}) == NumericalSemigroup{});
    CHECK_THROWS_AS(S({}), InvalidArgument);
    CHECK_THROWS_AS(S({1, 2}), InvalidArgument);
    CHECK_THROWS_AS(S({0, 4, 4, 8}), InvalidArgument);
    CHECK_THROWS_AS(S({0, 3, 5, 7}), InvalidArgument);  // 3+3 missing
    CHECK_THROWS_AS(S({0, 5, 7, 9, 11}), InvalidArgument);  // 5+5 = 10 missing
}

TEST_CASE("construction from multiplicity sequences") {
    CHECK(M({12, 12, 8, 4, 4, 1}).small_elements() == V{0, 12, 24, 32, 36, 40});
    CHECK(M({5, 2, 2, 1}).small_elements() == V{0, 5, 7, 9});
    CHECK(M({2, 2, 2, 2, 2, 1}) == G({2, 11}));
    CHECK_THROWS_AS(M({}), InvalidArgument);
    CHECK_THROWS_AS(M({2, 2}), InvalidArgument);
    CHECK_THROWS_AS(M({3, 0, 1}), InvalidArgument);
    CHECK_THROWS_AS(M({2, 1, 1}), InvalidArgument);
    CHECK_THROWS_AS(M({3, 4, 1}), InvalidArgument);  // 3+3 = 6 is a gap
}

TEST_CASE("membership") {
    auto s = S({0, 4, 8});
    CHECK_FALSE(s.contains(5));
    CHECK(s.contains(4));
    CHECK(s.contains(9));
    CHECK(S({0, 12, 24, 32, 36, 40}).contains(36));
    CHECK(s.members_in(3, 10) == V{4, 8, 9, 10});
    CHECK(s.members_in(-5, 0) == V{0});
    CHECK(s.members_in(5, 7).empty());
}

TEST_CASE("apery sets") {
    auto hyper = G({2, 11});
    CHECK(apery(hyper, 1).elements == V{0, 2, 4, 6, 8, 10});
    CHECK(apery(hyper, 0).elements.empty());
    auto big = S({0, 12, 24, 32, 36, 40});
    CHECK(apery(big, 8).size() == 10);
    CHECK(apery(big, 8).elements == oracle::apery(oracle::from_small(big.small_elements()), 8));
}

TEST_CASE("divisor sets") {
    auto s = S({0, 4, 8});
    CHECK(divisors(s, 12).elements == V{0, 4, 8, 12});
    CHECK(divisors(s, 5).elements.empty());
    CHECK(divisors(s, 9).size() == 2);
    const V pair{15, 16};
    CHECK(divisors(S({0, 8}), pair).elements == V{0, 8, 15, 16});
    const V targets{12, 13};
    CHECK(divisors(s, targets).elements == V{0, 4, 8, 9, 12, 13});
    CHECK(divisors(s, targets).targets == targets);
}

TEST_CASE("translation") {
    NumericalSemigroup n;
    CHECK(translate(n, 4) == S({0, 4}));
    CHECK(translate(S({0, 4}), 4) == S({0, 4, 8}));
    CHECK(translate(S({0, 8, 12, 16}), 12) == S({0, 12, 20, 24, 28}));
    CHECK_THROWS_AS(translate(S({0, 4, 8}), 5), NotMember);
    CHECK_THROWS_AS(translate(S({0, 4, 8}), 0), InvalidArgument);
}

TEST_CASE("minimal generators") {
    CHECK(minimal_generators(S({0, 5})) == V{5, 6, 7, 8, 9});
    CHECK(minimal_generators(G({2, 11})) == V{2, 11});
    CHECK(minimal_generators(G({5, 7, 9, 11, 13})) == V{5, 7, 9, 11, 13});
    CHECK(minimal_generators(G({3, 5})) == V{3, 5});
}

TEST_CASE("arf test") {
    CHECK(is_arf(S({0, 12, 24, 32, 36, 40})));
    CHECK_FALSE(is_arf(G({3, 5})));
    CHECK(is_arf(G({5, 7, 9, 11, 13})));
    CHECK_FALSE(is_arf(G({4, 6, 9})));
}

TEST_CASE("arf enumeration") {
    CHECK(enumerate_arf(0).size() == 1);
    auto two = enumerate_arf(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].d == V{1});
    CHECK(two[1].d == V{2, 1});
    auto four = enumerate_arf(4);
    std::set<V> got;
    for (const auto& d : four) got.insert(d.d);
    CHECK(got == std::set<V>{{1}, {2, 1}, {2, 2, 1}, {3, 1}, {4, 1}});
    CHECK(four.size() == 5);
    CHECK_THROWS_AS(enumerate_arf(-1), InvalidArgument);
}

TEST_CASE("arf enumeration matches brute force") {
    for (Int c = 0; c <= 16; ++c) {
        std::set<V> expected;
        for (const auto& o : oracle::semigroups_with_conductor(c))
            if (oracle::arf(o)) expected.insert(o.small());
        std::set<V> got;
        for (const auto& s : enumerate_arf_semigroups(16))
            if (s.conductor() == c) got.insert(s.small_elements());
        CHECK_MESSAGE(got == expected, "conductor ", c);
    }
}

TEST_CASE("enumeration is ordered and unique") {
    auto all = enumerate_arf_semigroups(20);
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
}

TEST_CASE("agreement with brute force on every semigroup with c <= 12") {
    for (const auto& o : oracle::all_semigroups(12)) {
        const auto s = from_oracle(o);
        CAPTURE(o.small());
        CHECK(s.genus() == o.genus());
        CHECK(s.multiplicity() == o.multiplicity());
        CHECK(is_arf(s) == oracle::arf(o));
        CHECK(minimal_generators(s) == oracle::minimal_generators(o));
        CHECK(G(minimal_generators(s)) == s);
        for (Int x = -s.conductor() - 2; x <= s.conductor() + 3; ++x) CHECK(apery(s, x).elements == oracle::apery(o, x));
        for (Int t = 0; t <= 2 * s.conductor() + 3; ++t) CHECK(divisors(s, t).elements == oracle::divisors(o, t));
        for (Int x = -2; x <= s.conductor() + 2; ++x) CHECK(s.contains(x) == o.has(x));
    }
}

TEST_CASE("invariants over the arf corpus") {
    for (const auto& s : enumerate_arf_semigroups(24)) {
        CAPTURE(s.small_elements());
        const Int c = s.conductor();
        const auto d = multiplicity_sequence(s);
        CHECK(std::is_sorted(d.d.rbegin(), d.d.rend()));
        CHECK(M(d.d) == s);
        CHECK(static_cast<Int>(minimal_generators(s).size()) == s.multiplicity());
        for (Int x : s.members_in(0, c + 2)) CHECK(static_cast<Int>(apery(s, x).size()) == x);
        for (Int x = -c; x <= c; ++x)
            CHECK(static_cast<Int>(apery(s, x).size()) == static_cast<Int>(apery(s, -x).size()) + x);
        const auto gens = minimal_generators(s);
        for (Int m = 0; m <= c + s.multiplicity(); ++m) {
            const auto dm = divisors(s, m);
            CHECK((dm.size() > 0) == s.contains(m));
            const bool irreducible = std::find(gens.begin(), gens.end(), m) != gens.end();
            CHECK((dm.size() == 2) == irreducible);
            for (Int mp = m; mp <= c + s.multiplicity(); ++mp) {
                if (!s.contains(m) || !s.contains(mp)) continue;
                const auto dmp = divisors(s, mp);
                if (!std::binary_search(dmp.elements.begin(), dmp.elements.end(), m)) continue;
                CHECK(std::includes(dmp.elements.begin(), dmp.elements.end(), dm.elements.begin(), dm.elements.end()));
            }
        }
        for (Int m : s.members_in(1, c + 3)) {
            const auto t = translate(s, m);
            if (m == 1) {
                // Only N contains 1, and N_1 = N.
                CHECK(t == s);
                continue;
            }
            CHECK(t.conductor() == c + m);
            CHECK(t.genus() == s.genus() + m - 1);
            CHECK(t.multiplicity() == m);
            CHECK(is_arf(t));
            V expected{m};
            expected.insert(expected.end(), d.d.begin(), d.d.end());
            CHECK(multiplicity_sequence(t).d == expected);
        }
    }
}

}  // TEST_SUITE
