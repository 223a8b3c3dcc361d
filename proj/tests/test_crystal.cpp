#include <catch2/catch_amalgamated.hpp>

#include "bsk/crystal.hpp"
#include "bsk/enumerate.hpp"

#include <algorithm>
#include <vector>

using bsk::Multipartition;
using bsk::Node;
using bsk::UglovSet;

namespace {

// Independent regularity filter: no part value repeated e or more times.
bool is_e_regular(const std::vector<int>& partition, int e) {
    int run = 0;
    int prev = -1;
    for (int part : partition) {
        run = part == prev ? run + 1 : 1;
        prev = part;
        if (run >= e)
            return false;
    }
    return true;
}

std::vector<Multipartition> regular_partitions(int n, int e) {
    std::vector<Multipartition> out;
    for (const auto& mp : bsk::enumerate_multipartitions(n, 1, bsk::Kind::partition))
        if (is_e_regular(mp.component(0), e))
            out.push_back(mp);
    return out;
}

}  // namespace

TEST_CASE("residues") {
    CHECK(bsk::residue(Node{1, 1, 0}, 2, {0}) == 0);
    CHECK(bsk::residue(Node{2, 1, 0}, 2, {0}) == 1);  // content -1
    CHECK(bsk::residue(Node{2, 1, 0}, 2, {3}) == 0);
    CHECK(bsk::residue(Node{1, 4, 1}, 3, {0, 1}) == 1);  // content 3, s = 1
    CHECK_THROWS_AS(bsk::residue(Node{1, 1, 0}, 0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(bsk::residue(Node{1, 1, 2}, 2, {0, 0}), std::out_of_range);
}

TEST_CASE("signatures of a single row") {
    // (1) at e=2: both addable 1-nodes survive, the later one is good.
    const bsk::Signature sig = bsk::signature(Multipartition({{1}}), 1, 2, {0});
    REQUIRE(sig.entries.size() == 2);
    CHECK(sig.entries[0].node == Node{2, 1, 0});
    CHECK(sig.entries[0].addable);
    CHECK(sig.entries[1].node == Node{1, 2, 0});
    CHECK(sig.entries[1].addable);
    CHECK(sig.reduced.size() == 2);
    REQUIRE(sig.good.has_value());
    CHECK(*sig.good == Node{1, 2, 0});

    CHECK_THROWS_AS(bsk::signature(Multipartition({{1}}), 2, 2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(bsk::signature(Multipartition({{1}}), 0, 2, {0, 0}), std::invalid_argument);
}

TEST_CASE("good nodes of small one-component shapes") {
    const std::vector<int> s = {0};
    const Multipartition empty = Multipartition::empty(1);
    CHECK(bsk::good_node(empty, 0, 2, s) == Node{1, 1, 0});
    CHECK_FALSE(bsk::good_node(empty, 1, 2, s).has_value());
    CHECK(bsk::good_node(Multipartition({{1}}), 1, 2, s) == Node{1, 2, 0});
    // (1,1) at e=2: the removable (2,1) cancels the addable (1,2).
    CHECK_FALSE(bsk::good_node(Multipartition({{1, 1}}), 1, 2, s).has_value());
    CHECK(bsk::good_node(Multipartition({{2}}), 1, 2, s) == Node{2, 1, 0});
}

TEST_CASE("the flat two-component charge grows component zero first") {
    const UglovSet set = bsk::uglov_multipartitions(1, 2, 2, {0, 0});
    REQUIRE(set.elements.size() == 1);
    CHECK(set.elements[0] == Multipartition({{1}, {}}));
    REQUIRE(set.paths.size() == 1);
    REQUIRE(set.paths[0].size() == 1);
    CHECK(set.paths[0][0].residue == 0);
    CHECK(set.paths[0][0].node == Node{1, 1, 0});
}

TEST_CASE("one-component sets are the regular partitions") {
    CHECK(bsk::uglov_multipartitions(4, 1, 2, {0}).elements ==
          std::vector<Multipartition>{Multipartition({{4}}), Multipartition({{3, 1}})});
    CHECK(bsk::uglov_multipartitions(4, 1, 3, {0}).elements ==
          std::vector<Multipartition>{Multipartition({{4}}), Multipartition({{3, 1}}),
                                      Multipartition({{2, 2}}), Multipartition({{2, 1, 1}})});
    for (int e : {2, 3})
        for (int s0 : {0, 2})
            for (int n = 0; n <= 6; ++n)
                CHECK(bsk::uglov_multipartitions(n, 1, e, {s0}).elements ==
                      regular_partitions(n, e));
}

TEST_CASE("e = 1 degenerates to single columns") {
    const UglovSet set = bsk::uglov_multipartitions(4, 1, 1, {0});
    REQUIRE(set.elements.size() == 1);
    CHECK(set.elements[0] == Multipartition({{1, 1, 1, 1}}));
}

TEST_CASE("translating the whole multicharge preserves the set") {
    for (int n = 0; n <= 4; ++n)
        for (int k : {1, 2, 5}) {
            CHECK(bsk::uglov_multipartitions(n, 2, 3, {0, 1}).elements ==
                  bsk::uglov_multipartitions(n, 2, 3, {0 + k, 1 + k}).elements);
            CHECK(bsk::uglov_multipartitions(n, 2, 2, {0, 0}).elements ==
                  bsk::uglov_multipartitions(n, 2, 2, {0 + k, 0 + k}).elements);
        }
}

TEST_CASE("recorded paths replay to their elements") {
    struct Setting {
        int n;
        int level;
        int e;
        std::vector<int> s;
    };
    for (const auto& [n, level, e, s] :
         {Setting{6, 1, 2, {0}}, Setting{4, 2, 2, {0, 0}}, Setting{4, 2, 3, {0, 1}}}) {
        const UglovSet set = bsk::uglov_multipartitions(n, level, e, s);
        REQUIRE(set.elements.size() == set.paths.size());
        for (std::size_t k = 0; k < set.elements.size(); ++k) {
            Multipartition current = Multipartition::empty(level);
            for (const auto& step : set.paths[k]) {
                const auto good = bsk::good_node(current, step.residue, e, s);
                REQUIRE(good.has_value());
                CHECK(*good == step.node);
                current = bsk::add_node(current, *good, bsk::Kind::partition);
            }
            CHECK(current == set.elements[k]);
            CHECK(current.size() == n);
            CHECK(current.is_partition());
        }
        // canonical order, no duplicates
        for (std::size_t k = 1; k < set.elements.size(); ++k)
            CHECK(bsk::canonical_before(set.elements[k - 1], set.elements[k]));
    }
}

TEST_CASE("uglov validates its arguments") {
    CHECK_THROWS_AS(bsk::uglov_multipartitions(-1, 1, 2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(bsk::uglov_multipartitions(2, 2, 2, {0}), std::invalid_argument);
    CHECK_THROWS_AS(bsk::uglov_multipartitions(2, 1, 0, {0}), std::invalid_argument);
}
