#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsk/multipartition.hpp"
#include "bsk/rational.hpp"

namespace bsk {

// Truncation parameters a shifted beta-sequence was built with. Two
// sequences are dominance-comparable only when these agree exactly.
struct KappaMeta {
    int z = 0;
    int r = 0;
    std::vector<Rational> t;

    friend bool operator==(const KappaMeta&, const KappaMeta&) = default;
};

// The merged list of shifted beta-numbers of all components, sorted
// descending, duplicates kept with multiplicity. Its length depends only
// on (r, t), never on the multipartition.
struct KappaSequence {
    std::vector<Rational> entries;
    KappaMeta meta;
};

namespace detail {

inline Rational min_t(const ChargeParams& params) {
    return *std::min_element(params.t().begin(), params.t().end());
}

}  // namespace detail

// Least admissible truncation pair for mp: the smallest positive integer
// z with z >= n + 1 - min t_j, and the smallest r with r >= n and
// r + floor(t_i) >= len(component i) for every i.
inline std::pair<int, int> minimal_zr(const Multipartition& mp, const ChargeParams& params) {
    if (mp.level() != params.level())
        throw std::invalid_argument("kappa: multipartition level does not match charge params");
    const int n = mp.size();
    const int z = std::max<long long>(
        1, ceil_rational(Rational(n + 1) - detail::min_t(params)));
    long long r = n;
    for (int i = 0; i < mp.level(); ++i) {
        const long long len = static_cast<long long>(mp.component(i).size());
        r = std::max(r, len - floor_rational(params.t_at(i)));
    }
    return {static_cast<int>(z), static_cast<int>(r)};
}

// Shifted beta-numbers: component i contributes the r + floor(t_i)
// values { part(i, j) - j + t_i + z : 1 <= j <= r + floor(t_i) }, parts
// past the component's length reading 0. The merged multiset is returned
// sorted descending with the truncation recorded in meta.
inline KappaSequence kappa_sequence(const Multipartition& mp, const ChargeParams& params,
                                    int z, int r) {
    if (mp.level() != params.level())
        throw std::invalid_argument("kappa: multipartition level does not match charge params");
    const int n = mp.size();
    if (z < 1 || Rational(z) < Rational(n + 1) - detail::min_t(params))
        throw std::invalid_argument("kappa: z = " + std::to_string(z) +
                                    " is below the bound n + 1 - min(t)");
    if (r < n)
        throw std::invalid_argument("kappa: r = " + std::to_string(r) +
                                    " is below n = " + std::to_string(n));

    KappaSequence seq;
    seq.meta = KappaMeta{z, r, params.t()};
    for (int i = 0; i < mp.level(); ++i) {
        const long long count = r + floor_rational(params.t_at(i));
        if (count < static_cast<long long>(mp.component(i).size()))
            throw std::invalid_argument(
                "kappa: truncation too short for component " + std::to_string(i) +
                ": r + floor(t_i) = " + std::to_string(count) + " < component length " +
                std::to_string(mp.component(i).size()));
        const Rational shift = params.t_at(i) + Rational(z);
        for (long long j = 1; j <= count; ++j)
            seq.entries.push_back(Rational(mp.part(i, static_cast<int>(j)) - j) + shift);
    }
    std::sort(seq.entries.begin(), seq.entries.end(), std::greater<Rational>());
    return seq;
}

// Sum of (position - 1) * entry over the finite list.
inline Rational n_stat(const std::vector<Rational>& entries) {
    Rational total(0);
    for (std::size_t i = 0; i < entries.size(); ++i)
        total += Rational(static_cast<long long>(i)) * entries[i];
    return total;
}

inline Rational n_stat(const KappaSequence& seq) { return n_stat(seq.entries); }

// a_t at an explicit truncation: n_t(lambda) - n_t(empty), both sides
// built with the same (z, r).
inline Rational a_function_at(const Multipartition& mp, const ChargeParams& params,
                              int z, int r) {
    const Multipartition empty = Multipartition::empty(mp.level());
    return n_stat(kappa_sequence(mp, params, z, r)) - n_stat(kappa_sequence(empty, params, z, r));
}

// a_t with the minimal admissible truncation. The value is independent
// of the (z, r) choice; the acceptance suite pins that down exhaustively.
inline Rational a_function(const Multipartition& mp, const ChargeParams& params) {
    const auto [z, r] = minimal_zr(mp, params);
    return a_function_at(mp, params, z, r);
}

enum class Dominance { strictly_dominated, equal, strictly_dominates, incomparable };

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::strictly_dominated: return "strictly_dominated";
        case Dominance::equal: return "equal";
        case Dominance::strictly_dominates: return "strictly_dominates";
        case Dominance::incomparable: return "incomparable";
    }
    return "?";
}

// Classifies lhs against rhs under the partial-sum dominance order:
// strictly_dominated means lhs is dominated by rhs (every prefix sum of
// lhs is <= the corresponding prefix sum of rhs, and the lists differ).
inline Dominance dominance(const KappaSequence& lhs, const KappaSequence& rhs) {
    if (!(lhs.meta == rhs.meta))
        throw std::invalid_argument("dominance: sequences built with different (z, r, t)");
    if (lhs.entries.size() != rhs.entries.size())
        throw std::invalid_argument("dominance: sequence lengths differ");
    if (lhs.entries == rhs.entries)
        return Dominance::equal;
    Rational diff(0);
    bool some_below = false, some_above = false;
    for (std::size_t i = 0; i < lhs.entries.size(); ++i) {
        diff += lhs.entries[i] - rhs.entries[i];
        if (diff < Rational(0))
            some_below = true;
        else if (diff > Rational(0))
            some_above = true;
    }
    if (some_below && some_above)
        return Dominance::incomparable;
    return some_above ? Dominance::strictly_dominates : Dominance::strictly_dominated;
}

}  // namespace bsk
