#include <catch2/catch_amalgamated.hpp>

#include "bsk/enumerate.hpp"

#include <set>
#include <vector>

using bsk::Kind;
using bsk::Multipartition;

namespace {

// Independent count oracle: partition numbers by a textbook DP, then an
// l-fold convolution. Shares no code with the enumerator.
std::vector<long long> partition_counts(int nmax) {
    std::vector<long long> p(static_cast<std::size_t>(nmax) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= nmax; ++part)
        for (int m = part; m <= nmax; ++m)
            p[static_cast<std::size_t>(m)] += p[static_cast<std::size_t>(m - part)];
    return p;
}

std::vector<long long> composition_counts(int nmax) {
    // positive-part compositions: 2^(n-1) for n >= 1
    std::vector<long long> c(static_cast<std::size_t>(nmax) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= nmax; ++m)
        c[static_cast<std::size_t>(m)] = 1LL << (m - 1);
    return c;
}

std::vector<long long> convolve(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

long long tuple_count(int n, int level, Kind kind) {
    std::vector<long long> single =
        kind == Kind::partition ? partition_counts(n) : composition_counts(n);
    std::vector<long long> acc = single;
    for (int i = 1; i < level; ++i)
        acc = convolve(acc, single);
    return acc[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("base cases") {
    const auto zero = bsk::enumerate_multipartitions(0, 2, Kind::partition);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Multipartition::empty(2));

    const auto two = bsk::enumerate_multipartitions(2, 1, Kind::partition);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Multipartition({{2}}));
    CHECK(two[1] == Multipartition({{1, 1}}));
}

TEST_CASE("bipartitions of 3 number ten") {
    CHECK(bsk::enumerate_multipartitions(3, 2, Kind::partition).size() == 10);
}

TEST_CASE("counts match the convolution oracle") {
    for (int level = 1; level <= 3; ++level)
        for (int n = 0; n <= 6; ++n)
            for (Kind kind : {Kind::partition, Kind::composition}) {
                const auto all = bsk::enumerate_multipartitions(n, level, kind);
                INFO("n=" << n << " level=" << level
                          << " kind=" << (kind == Kind::partition ? "partition" : "composition"));
                CHECK(static_cast<long long>(all.size()) == tuple_count(n, level, kind));
            }
}

TEST_CASE("enumeration is duplicate-free, complete, and canonically sorted") {
    for (Kind kind : {Kind::partition, Kind::composition}) {
        const auto all = bsk::enumerate_multipartitions(4, 2, kind);
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& mp : all) {
            CHECK(mp.size() == 4);
            CHECK(mp.level() == 2);
            if (kind == Kind::partition)
                CHECK(mp.is_partition());
            seen.insert(mp.components());
        }
        CHECK(seen.size() == all.size());
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            CHECK(bsk::canonical_before(all[i], all[i + 1]));
            CHECK_FALSE(bsk::canonical_before(all[i + 1], all[i]));
        }
    }
}

TEST_CASE("composition enumeration includes non-partitions") {
    const auto all = bsk::enumerate_multipartitions(3, 1, Kind::composition);
    REQUIRE(all.size() == 4);
    bool found = false;
    for (const auto& mp : all)
        if (mp == Multipartition({{1, 2}}))
            found = true;
    CHECK(found);
}

TEST_CASE("component order puts larger first parts earlier") {
    const auto all = bsk::enumerate_multipartitions(2, 2, Kind::partition);
    REQUIRE(all.size() == 5);
    CHECK(all[0] == Multipartition({{2}, {}}));
    CHECK(all[1] == Multipartition({{1, 1}, {}}));
    CHECK(all[2] == Multipartition({{1}, {1}}));
    CHECK(all[3] == Multipartition({{}, {2}}));
    CHECK(all[4] == Multipartition({{}, {1, 1}}));
}
