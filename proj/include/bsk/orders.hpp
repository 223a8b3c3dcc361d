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

// The node-precedence order: smaller charged content first, ties broken
// in favour of the larger component index. A strict partial order on
// nodes; two nodes on the same diagonal of the same component are
// incomparable, but the addable and removable corners of one component
// have pairwise distinct contents, so signatures never see a tie. Only
// the multicharge enters, so an overload without the shift vector exists.
inline bool precedes(const Node& a, const Node& b, const std::vector<int>& s) {
    const int ta = content(a) + s.at(static_cast<std::size_t>(a.component));
    const int tb = content(b) + s.at(static_cast<std::size_t>(b.component));
    return ta < tb || (ta == tb && a.component > b.component);
}

inline bool precedes(const Node& a, const Node& b, const ChargeParams& params) {
    return precedes(a, b, params.s());
}

enum class PairRelation { equal, strictly_precedes };

// Witness that the node multisets of two multipartitions can be paired
// off with every pair equal or strictly preceding.
struct NodePairing {
    struct Entry {
        Node from;
        Node to;
        PairRelation relation;
    };
    std::vector<Entry> pairs;
};

// Searches for a bijection between the nodes of lambda and lambda_prime
// in which each node either equals its partner or strictly precedes it.
// Any perfect matching of the induced bipartite graph is a valid witness.
inline std::optional<NodePairing> precedence_matching(const Multipartition& lambda,
                                                      const Multipartition& lambda_prime,
                                                      const ChargeParams& params) {
    if (lambda.size() != lambda_prime.size())
        throw std::invalid_argument("precedence_matching: sizes differ");
    const std::vector<Node> from = lambda.nodes();
    const std::vector<Node> to = lambda_prime.nodes();
    const int n = static_cast<int>(from.size());

    BipartiteMatcher matcher(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (from[static_cast<std::size_t>(i)] == to[static_cast<std::size_t>(j)] ||
                precedes(from[static_cast<std::size_t>(i)], to[static_cast<std::size_t>(j)], params))
                matcher.add_edge(i, j);
    const auto assignment = matcher.perfect_matching();
    if (!assignment)
        return std::nullopt;

    NodePairing pairing;
    pairing.pairs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Node& src = from[static_cast<std::size_t>(i)];
        const Node& dst = to[static_cast<std::size_t>((*assignment)[static_cast<std::size_t>(i)])];
        pairing.pairs.push_back({src, dst,
                                 src == dst ? PairRelation::equal : PairRelation::strictly_precedes});
    }
    return pairing;
}

// Exhaustive check over all ordered pairs of level-l compositions of n:
// whenever a precedence matching exists, lambda = lambda' or
// a_t(lambda) > a_t(lambda'). Counterexamples are data, not errors.
inline SweepReport check_prop_5_4(int n, int level, const ChargeParams& params, int jobs = 0) {
    if (params.level() != level)
        throw std::invalid_argument("check_prop_5_4: level does not match multicharge length");
    const std::vector<Multipartition> all = enumerate_multipartitions(n, level, Kind::composition);
    const long long count = static_cast<long long>(all.size());

    std::vector<Rational> a_values;
    a_values.reserve(all.size());
    for (const auto& mp : all)
        a_values.push_back(a_function(mp, params));

    const auto outcome = [&](long long k) {
        const auto& lambda = all[static_cast<std::size_t>(k / count)];
        const auto& lambda_prime = all[static_cast<std::size_t>(k % count)];
        if (!precedence_matching(lambda, lambda_prime, params))
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
        const auto& lambda = all[static_cast<std::size_t>(k / count)];
        const auto& lambda_prime = all[static_cast<std::size_t>(k % count)];
        report.counterexample.emplace(SweepCounterexample{
            lambda, lambda_prime, a_values[static_cast<std::size_t>(k / count)],
            a_values[static_cast<std::size_t>(k % count)]});
    }
    return report;
}

}  // namespace bsk
