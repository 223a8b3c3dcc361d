#pragma once

#include <algorithm>
#include <vector>

#include "bsk/multipartition.hpp"

namespace bsk {

namespace detail {

// Partitions of exactly n with parts <= max_part, descending
// lexicographic: (n) first, (1,...,1) last.
inline void emit_partitions(int n, int max_part, std::vector<int>& stem,
                            std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(stem);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        stem.push_back(p);
        emit_partitions(n - p, p, stem, out);
        stem.pop_back();
    }
}

// Compositions of exactly n into positive parts, descending lexicographic.
inline void emit_compositions(int n, std::vector<int>& stem,
                              std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(stem);
        return;
    }
    for (int p = n; p >= 1; --p) {
        stem.push_back(p);
        emit_compositions(n - p, stem, out);
        stem.pop_back();
    }
}

}  // namespace detail

inline std::vector<std::vector<int>> partitions_of(int n, Kind kind = Kind::partition) {
    std::vector<std::vector<int>> out;
    std::vector<int> stem;
    if (kind == Kind::partition)
        detail::emit_partitions(n, n, stem, out);
    else
        detail::emit_compositions(n, stem, out);
    return out;
}

// Order on single components used throughout: x before y iff y is
// lexicographically smaller, so (3) < (2,1) < (2) < (1,1,1) < ... < ().
inline bool component_before(const std::vector<int>& x, const std::vector<int>& y) {
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

// The canonical enumeration order: lexicographic on component tuples,
// components compared by component_before. Total on multipartitions of a
// common level; used to fix "first counterexample" and output order.
inline bool canonical_before(const Multipartition& a, const Multipartition& b) {
    for (int c = 0; c < std::min(a.level(), b.level()); ++c)
        if (a.component(c) != b.component(c))
            return component_before(a.component(c), b.component(c));
    return a.level() < b.level();
}

// Complete duplicate-free list of the level-l multipartitions of n of the
// given kind (compositions take positive parts), in canonical order.
inline std::vector<Multipartition> enumerate_multipartitions(int n, int level, Kind kind) {
    if (n < 0 || level < 1)
        throw std::invalid_argument("enumerate: need n >= 0 and level >= 1");

    // Candidate components of every size 0..n, canonically ordered.
    std::vector<std::vector<std::vector<int>>> by_size(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        by_size[static_cast<std::size_t>(k)] = partitions_of(k, kind);
    std::vector<std::vector<int>> candidates;
    for (const auto& group : by_size)
        candidates.insert(candidates.end(), group.begin(), group.end());
    std::sort(candidates.begin(), candidates.end(), component_before);

    std::vector<Multipartition> out;
    std::vector<std::vector<int>> tuple;
    auto rec = [&](auto&& self, int c, int remaining) -> void {
        if (c == level) {
            if (remaining == 0)
                out.emplace_back(tuple);
            return;
        }
        for (const auto& cand : candidates) {
            int sz = 0;
            for (int p : cand)
                sz += p;
            if (sz > remaining)
                continue;
            if (c == level - 1 && sz != remaining)
                continue;
            tuple.push_back(cand);
            self(self, c + 1, remaining - sz);
            tuple.pop_back();
        }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace bsk
