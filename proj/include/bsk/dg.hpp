#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "bsk/enumerate.hpp"
#include "bsk/kappa.hpp"
#include "bsk/matching.hpp"
#include "bsk/multipartition.hpp"
#include "bsk/sweep.hpp"

namespace bsk {

// Witness for the arithmetic compatibility condition between two node
// multisets: every pair carries the nonnegative integer mu determined by
// the component and charged-content differences.
struct DgCertificate {
    struct Entry {
        Node from;
        Node to;
        long long mu;
    };
    std::vector<Entry> pairs;
    int e = 1;
    std::vector<int> s;
};

// The unique candidate mu for a node pair is
//   mu = c(from) - c(to) + (l/e) * (theta(to) - theta(from)),
// computed exactly; the pair is an edge iff mu is an integer, mu >= 0,
// and mu = c(from) - c(to) mod l. l/e need not be integral, so the
// integrality test runs on exact rationals.
inline std::optional<long long> dg_edge(const Node& from, const Node& to, int e,
                                        const std::vector<int>& s) {
    if (e < 1 || s.empty())
        throw std::invalid_argument("dg_edge: need e >= 1 and a nonempty multicharge");
    const int level = static_cast<int>(s.size());
    if (from.component < 0 || from.component >= level || to.component < 0 ||
        to.component >= level)
        throw std::out_of_range("dg_edge: component index out of range");

    const int theta_from = content(from) + s[static_cast<std::size_t>(from.component)];
    const int theta_to = content(to) + s[static_cast<std::size_t>(to.component)];
    const long long comp_diff = from.component - to.component;
    const Rational mu = Rational(comp_diff) + Rational(level, e) * Rational(theta_to - theta_from);
    if (!is_integer(mu) || mu < Rational(0))
        return std::nullopt;
    const long long value = mu.numerator();
    if (((value - comp_diff) % level + level) % level != 0)
        return std::nullopt;
    return value;
}

// Bipartite perfect matching on dg_edge between the node multisets.
inline std::optional<DgCertificate> dg_compatible(const Multipartition& lambda,
                                                  const Multipartition& lambda_prime, int e,
                                                  const std::vector<int>& s) {
    if (lambda.size() != lambda_prime.size())
        throw std::invalid_argument("dg_compatible: sizes differ");
    const std::vector<Node> from = lambda.nodes();
    const std::vector<Node> to = lambda_prime.nodes();
    const int n = static_cast<int>(from.size());

    std::vector<std::vector<std::optional<long long>>> mu(
        static_cast<std::size_t>(n), std::vector<std::optional<long long>>(static_cast<std::size_t>(n)));
    BipartiteMatcher matcher(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                dg_edge(from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(j)], e, s);
            if (mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                matcher.add_edge(i, j);
        }
    const auto assignment = matcher.perfect_matching();
    if (!assignment)
        return std::nullopt;

    DgCertificate cert;
    cert.e = e;
    cert.s = s;
    cert.pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int j = (*assignment)[static_cast<std::size_t>(i)];
        cert.pairs.push_back({from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(j)],
                              *mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
    }
    return cert;
}

// Exhaustive check over all ordered pairs of level-l partitions of n:
// dg-compatibility implies lambda = lambda' or a_t(lambda) > a_t(lambda').
inline SweepReport check_theorem_5_6(int n, int level, int e, const std::vector<int>& s,
                                     const std::vector<Rational>& u, int jobs = 0) {
    const ChargeParams params(e, s, u);
    if (params.level() != level)
        throw std::invalid_argument("check_theorem_5_6: level does not match multicharge length");
    const std::vector<Multipartition> all = enumerate_multipartitions(n, level, Kind::partition);
    const long long count = static_cast<long long>(all.size());

    std::vector<Rational> a_values;
    a_values.reserve(all.size());
    for (const auto& mp : all)
        a_values.push_back(a_function(mp, params));

    const auto outcome = [&](long long k) {
        const auto& lambda = all[static_cast<std::size_t>(k / count)];
        const auto& lambda_prime = all[static_cast<std::size_t>(k % count)];
        if (!dg_compatible(lambda, lambda_prime, e, s))
            return PairOutcome::not_matched;
        if (lambda == lambda_prime ||
            a_values[static_cast<std::size_t>(k / count)] > a_values[static_cast<std::size_t>(k % count)])
            return PairOutcome::held;
        return PairOutcome::violated;
    };
    const PairSweepTally tally = run_pair_sweep(count * count, jobs, outcome);

    SweepReport report;
    report.pairs_tested = tally.tested;
    report.pairs_matched = tally.matched;
    report.pairs_held = tally.held;
    if (tally.first_violation) {
        const long long k = *tally.first_violation;
        report.counterexample.emplace(SweepCounterexample{
            all[static_cast<std::size_t>(k / count)], all[static_cast<std::size_t>(k % count)],
            a_values[static_cast<std::size_t>(k / count)],
            a_values[static_cast<std::size_t>(k % count)]});
    }
    return report;
}

}  // namespace bsk
