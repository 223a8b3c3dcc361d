#include <catch2/catch_amalgamated.hpp>

#include "bsk/dg.hpp"
#include "bsk/orders.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

using bsk::ChargeParams;
using bsk::DgCertificate;
using bsk::Multipartition;
using bsk::Node;
using bsk::Rational;
using bsk::SweepReport;

namespace {

bool brute_compatible(const Multipartition& lambda, const Multipartition& lambda_prime, int e,
                      const std::vector<int>& s) {
    const auto from = lambda.nodes();
    auto to = lambda_prime.nodes();
    std::vector<int> perm(to.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < from.size() && ok; ++i)
            ok = bsk::dg_edge(from[i], to[static_cast<std::size_t>(perm[i])], e, s).has_value();
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void check_certificate(const DgCertificate& cert, const Multipartition& lambda,
                       const Multipartition& lambda_prime) {
    std::vector<Node> from, to;
    for (const auto& entry : cert.pairs) {
        from.push_back(entry.from);
        to.push_back(entry.to);
        const auto mu = bsk::dg_edge(entry.from, entry.to, cert.e, cert.s);
        REQUIRE(mu.has_value());
        CHECK(*mu == entry.mu);
        CHECK(entry.mu >= 0);
    }
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    auto expect_from = lambda.nodes();
    auto expect_to = lambda_prime.nodes();
    std::sort(expect_from.begin(), expect_from.end());
    std::sort(expect_to.begin(), expect_to.end());
    CHECK(from == expect_from);
    CHECK(to == expect_to);
}

}  // namespace

TEST_CASE("an edge from a node to itself carries mu = 0") {
    const std::vector<int> s = {0, 3};
    for (const Node& node : {Node{1, 1, 0}, Node{2, 5, 1}, Node{4, 1, 0}}) {
        const auto mu = bsk::dg_edge(node, node, 2, s);
        REQUIRE(mu.has_value());
        CHECK(*mu == 0);
    }
}

TEST_CASE("one-component edges step by e") {
    const std::vector<int> s = {0};
    // theta difference +2 at e=2: mu = 1
    const auto up = bsk::dg_edge(Node{1, 1, 0}, Node{1, 3, 0}, 2, s);
    REQUIRE(up.has_value());
    CHECK(*up == 1);
    // theta difference +1: not an integer multiple of e
    CHECK_FALSE(bsk::dg_edge(Node{1, 1, 0}, Node{1, 2, 0}, 2, s).has_value());
    // congruent contents but theta decreasing: mu < 0
    CHECK_FALSE(bsk::dg_edge(Node{1, 3, 0}, Node{1, 1, 0}, 2, s).has_value());
    // theta difference +4 at e=2: mu = 2
    const auto two = bsk::dg_edge(Node{2, 1, 0}, Node{1, 4, 0}, 2, s);
    REQUIRE(two.has_value());
    CHECK(*two == 2);
}

TEST_CASE("two-component edge with mu = 1") {
    const std::vector<int> s = {0, 0};
    const auto mu = bsk::dg_edge(Node{1, 1, 1}, Node{1, 1, 0}, 2, s);
    REQUIRE(mu.has_value());
    CHECK(*mu == 1);
}

TEST_CASE("the congruence filter rejects integer mu of the wrong class") {
    // l=2, e=2: mu = (c - c') + (theta' - theta) must be even when c = c'.
    const std::vector<int> s = {0, 0};
    CHECK_FALSE(bsk::dg_edge(Node{1, 1, 0}, Node{1, 2, 0}, 2, s).has_value());
    // and the non-integer case at l=2, e=3: mu = 2/3
    CHECK_FALSE(bsk::dg_edge(Node{1, 1, 0}, Node{1, 2, 0}, 3, {0, 0}).has_value());
}

TEST_CASE("dg_edge validates its arguments") {
    CHECK_THROWS_AS(bsk::dg_edge(Node{1, 1, 0}, Node{1, 1, 0}, 0, {0}), std::invalid_argument);
    CHECK_THROWS_AS(bsk::dg_edge(Node{1, 1, 0}, Node{1, 1, 0}, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(bsk::dg_edge(Node{1, 1, 2}, Node{1, 1, 0}, 2, {0, 0}), std::out_of_range);
}

TEST_CASE("identical multipartitions are compatible with all-zero mu") {
    const Multipartition mp({{2, 1}, {1}});
    const auto cert = bsk::dg_compatible(mp, mp, 2, {0, 1});
    REQUIRE(cert.has_value());
    for (const auto& entry : cert->pairs) {
        CHECK(entry.from == entry.to);
        CHECK(entry.mu == 0);
    }
    check_certificate(*cert, mp, mp);
}

TEST_CASE("compatibility matches the factorial oracle") {
    struct Setting {
        int level;
        int e;
        std::vector<int> s;
    };
    const std::vector<Setting> settings = {
        {1, 2, {0}},
        {1, 3, {1}},
        {2, 2, {0, 0}},
        {2, 3, {1, 3}},
    };
    for (const auto& [level, e, s] : settings)
        for (int n = 0; n <= 3; ++n) {
            const auto all = bsk::enumerate_multipartitions(n, level, bsk::Kind::partition);
            for (const auto& lambda : all)
                for (const auto& lambda_prime : all) {
                    const auto cert = bsk::dg_compatible(lambda, lambda_prime, e, s);
                    CHECK(cert.has_value() == brute_compatible(lambda, lambda_prime, e, s));
                    if (cert)
                        check_certificate(*cert, lambda, lambda_prime);
                }
        }

    CHECK_THROWS_AS(
        bsk::dg_compatible(Multipartition({{1}}), Multipartition({{1, 1}}), 2, {0}),
        std::invalid_argument);
}

TEST_CASE("dg compatibility implies a precedence matching") {
    for (int e : {2, 3}) {
        const ChargeParams params = ChargeParams::uglov(e, {0, 1});
        for (int n = 0; n <= 3; ++n) {
            const auto all = bsk::enumerate_multipartitions(n, 2, bsk::Kind::partition);
            for (const auto& lambda : all)
                for (const auto& lambda_prime : all)
                    if (bsk::dg_compatible(lambda, lambda_prime, e, params.s()))
                        CHECK(bsk::precedence_matching(lambda, lambda_prime, params).has_value());
        }
    }
}

TEST_CASE("theorem sweep holds at small sizes") {
    // one-node pairs always pass
    const SweepReport tiny =
        bsk::check_theorem_5_6(1, 2, 2, {0, 0}, {Rational(0), Rational(1)});
    CHECK(tiny.pairs_tested == 4);
    CHECK(tiny.pass());

    for (int e : {2, 3}) {
        std::vector<Rational> uglov_u = {Rational(0), Rational(e, 2)};
        const SweepReport report = bsk::check_theorem_5_6(3, 2, e, {0, 1}, uglov_u);
        CHECK(report.pass());
        CHECK(report.pairs_matched == report.pairs_held);

        // a second admissible shift, spread above one
        std::vector<Rational> wide_u = {Rational(0), Rational(e, 2) + Rational(1, 3)};
        CHECK(bsk::check_theorem_5_6(3, 2, e, {0, 1}, wide_u).pass());
    }

    const SweepReport single = bsk::check_theorem_5_6(4, 1, 2, {0}, {Rational(0)});
    CHECK(single.pass());
}

TEST_CASE("theorem sweep tallies do not depend on the job count") {
    const std::vector<Rational> u = {Rational(0), Rational(1)};
    const SweepReport base = bsk::check_theorem_5_6(3, 2, 2, {0, 0}, u, 1);
    for (int jobs : {2, 4}) {
        const SweepReport other = bsk::check_theorem_5_6(3, 2, 2, {0, 0}, u, jobs);
        CHECK(other.pairs_tested == base.pairs_tested);
        CHECK(other.pairs_matched == base.pairs_matched);
        CHECK(other.pairs_held == base.pairs_held);
        CHECK(other.counterexample.has_value() == base.counterexample.has_value());
    }
}

TEST_CASE("theorem sweep validates the level") {
    CHECK_THROWS_AS(bsk::check_theorem_5_6(2, 1, 2, {0, 0}, {Rational(0), Rational(1)}),
                    std::invalid_argument);
}
