#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "pgraph/group.hpp"
#include "pgraph/numutil.hpp"

using namespace pgraph;

TEST_CASE("make_group detects families") {
    GroupSpec g44 = GroupSpec::make({4, 4});
    REQUIRE(g44.family().kind == GroupFamily::Kind::PrimePowerHomocyclic);
    CHECK(g44.family().p == 2);
    CHECK(g44.family().m == 2);
    CHECK(g44.family().n == 2);

    GroupSpec g24 = GroupSpec::make({2, 4});
    REQUIRE(g24.family().kind == GroupFamily::Kind::TwoFour);
    CHECK(g24.family().r == 1);
    CHECK(g24.family().s == 1);

    CHECK(GroupSpec::make({6}).family().kind == GroupFamily::Kind::General);
    CHECK(GroupSpec::make({}).family().kind == GroupFamily::Kind::General);
    // order matters for the TwoFour tag: the Z_2 block must come first
    CHECK(GroupSpec::make({4, 2}).family().kind == GroupFamily::Kind::General);

    CHECK_THROWS_AS(GroupSpec::make({1}), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::make({4, 0}), std::invalid_argument);
}

TEST_CASE("family helper predicates") {
    auto zpmn = as_homocyclic_prime_power(GroupSpec::make({8}));
    REQUIRE(zpmn.has_value());
    CHECK(zpmn->p == 2);
    CHECK(zpmn->m == 3);
    CHECK(zpmn->n == 1);

    // Z_4^s belongs to both families
    auto tf = as_two_four(GroupSpec::make({4, 4}));
    REQUIRE(tf.has_value());
    CHECK(tf->r == 0);
    CHECK(tf->s == 2);
    CHECK(!as_two_four(GroupSpec::make({2, 2})).has_value());
    CHECK(!as_two_four(GroupSpec::make({4, 2})).has_value());
}

TEST_CASE("element_order") {
    GroupSpec g24 = GroupSpec::make({2, 4});
    CHECK(element_order(g24, GroupElement{{1, 2}}) == 2);
    CHECK(element_order(g24, GroupElement{{1, 1}}) == 4);
    CHECK(element_order(GroupSpec::make({4, 4}), GroupElement{{0, 0}}) == 1);
    CHECK_THROWS_AS(element_order(g24, GroupElement{{0, 4}}), std::out_of_range);
    CHECK_THROWS_AS(element_order(g24, GroupElement{{0}}), std::out_of_range);
}

TEST_CASE("element_order equals the brute-force repeated addition") {
    for (auto factors : {std::vector<std::uint64_t>{2, 4}, {3, 9}, {2, 2, 2}, {6, 10}}) {
        GroupSpec g = GroupSpec::make(factors);
        for (std::size_t i = 0; i < g.enum_count(); ++i) {
            GroupElement a = g.element_at(i);
            GroupElement cur = a;
            std::uint64_t k = 1;
            while (!(cur == g.identity())) {
                cur = g.add(cur, a);
                ++k;
            }
            CHECK(element_order(g, a) == k);
        }
    }
}

TEST_CASE("group_spectrum") {
    CHECK(group_spectrum(GroupSpec::make({8})) == std::vector<std::uint64_t>{1, 2, 4, 8});
    CHECK(group_spectrum(GroupSpec::make({2, 2})) == std::vector<std::uint64_t>{1, 2});
    CHECK(group_spectrum(GroupSpec::make({})) == std::vector<std::uint64_t>{1});
}

TEST_CASE("group_spectrum equals divisor set of the exponent") {
    for (auto factors : {std::vector<std::uint64_t>{2, 4}, {12}, {2, 3}, {6, 10}, {9, 3},
                         {2, 2, 2, 2}, {5, 25}}) {
        GroupSpec g = GroupSpec::make(factors);
        CHECK(group_spectrum(g) == divisors_u64(g.exponent()));
        // forcing the non-enumerated path gives the same answer
        CHECK(group_spectrum(g, 1) == group_spectrum(g));
    }
}

TEST_CASE("order_class_counts") {
    auto c24 = order_class_counts(GroupSpec::make({2, 4}));
    CHECK(c24 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {4, 4}});
    auto c3 = order_class_counts(GroupSpec::make({3}));
    CHECK(c3 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 2}});
    auto c22 = order_class_counts(GroupSpec::make({2, 2}));
    CHECK(c22 == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}});

    // counts sum to |G|, identity class is exactly 1
    for (auto factors : {std::vector<std::uint64_t>{4, 4}, {2, 3}, {8, 2}, {5, 5}}) {
        GroupSpec g = GroupSpec::make(factors);
        auto classes = order_class_counts(g);
        std::uint64_t total = 0;
        for (auto [order, count] : classes) total += count;
        CHECK(Bigint(total) == g.order());
        CHECK(classes.at(1) == 1);
    }

    CHECK_THROWS_AS(order_class_counts(GroupSpec::make({65, 64})), std::length_error);
}

TEST_CASE("is_power_of") {
    GroupSpec g8 = GroupSpec::make({8});
    CHECK(is_power_of(g8, GroupElement{{1}}, GroupElement{{5}}));
    GroupSpec g24 = GroupSpec::make({2, 4});
    CHECK(is_power_of(g24, GroupElement{{0, 1}}, GroupElement{{0, 2}}));
    CHECK(!is_power_of(g24, GroupElement{{0, 2}}, GroupElement{{0, 1}}));
    // identity generates only itself
    CHECK(is_power_of(g24, GroupElement{{0, 0}}, GroupElement{{0, 0}}));
    CHECK(!is_power_of(g24, GroupElement{{0, 0}}, GroupElement{{0, 2}}));
}

TEST_CASE("mutual is_power_of means equal cyclic subgroups") {
    for (auto factors : {std::vector<std::uint64_t>{2, 4}, {9}, {2, 2, 3}, {4, 4}}) {
        GroupSpec g = GroupSpec::make(factors);
        std::size_t count = g.enum_count();
        auto cyclic_subgroup = [&](const GroupElement& a) {
            std::set<std::size_t> sub{g.index_of(g.identity())};
            GroupElement cur = a;
            while (!(cur == g.identity())) {
                sub.insert(g.index_of(cur));
                cur = g.add(cur, a);
            }
            return sub;
        };
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                GroupElement a = g.element_at(i), b = g.element_at(j);
                bool mutual = is_power_of(g, a, b) && is_power_of(g, b, a);
                CHECK(mutual == (cyclic_subgroup(a) == cyclic_subgroup(b)));
            }
    }
}

TEST_CASE("orders divide the exponent") {
    for (auto factors : {std::vector<std::uint64_t>{2, 4}, {6, 15}, {8, 8}, {3, 5, 7}}) {
        GroupSpec g = GroupSpec::make(factors);
        std::uint64_t exponent = g.exponent();
        for (std::size_t i = 0; i < g.enum_count(); ++i)
            CHECK(exponent % element_order(g, g.element_at(i)) == 0);
    }
}

TEST_CASE("element indexing is lexicographic and invertible") {
    GroupSpec g = GroupSpec::make({2, 3, 2});
    CHECK(g.element_at(0).coords == std::vector<std::uint64_t>{0, 0, 0});
    CHECK(g.element_at(1).coords == std::vector<std::uint64_t>{0, 0, 1});
    CHECK(g.element_at(2).coords == std::vector<std::uint64_t>{0, 1, 0});
    CHECK(g.element_at(11).coords == std::vector<std::uint64_t>{1, 2, 1});
    for (std::size_t i = 0; i < g.enum_count(); ++i)
        CHECK(g.index_of(g.element_at(i)) == i);
}
