#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "bsk/kappa.hpp"
#include "bsk/multipartition.hpp"

namespace bsk {

enum class PairOutcome { not_matched, held, violated };

struct PairSweepTally {
    long long tested = 0;
    long long matched = 0;
    long long held = 0;
    std::optional<long long> first_violation;
};

// Evaluates `outcome` on every index in [0, total) and aggregates.
// Workers own disjoint contiguous ranges and the merge is a sum plus a
// min over violation indices, so the tally does not depend on `jobs`.
inline PairSweepTally run_pair_sweep(long long total, int jobs,
                                     const std::function<PairOutcome(long long)>& outcome) {
    if (jobs <= 0)
        jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    jobs = static_cast<int>(std::min<long long>(jobs, std::max<long long>(1, total)));

    std::vector<PairSweepTally> partial(static_cast<std::size_t>(jobs));
    auto work = [&](int worker) {
        const long long begin = total * worker / jobs;
        const long long end = total * (worker + 1) / jobs;
        PairSweepTally& tally = partial[static_cast<std::size_t>(worker)];
        for (long long k = begin; k < end; ++k) {
            ++tally.tested;
            switch (outcome(k)) {
                case PairOutcome::not_matched:
                    break;
                case PairOutcome::held:
                    ++tally.matched;
                    ++tally.held;
                    break;
                case PairOutcome::violated:
                    ++tally.matched;
                    if (!tally.first_violation)
                        tally.first_violation = k;
                    break;
            }
        }
    };

    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
        for (auto& th : pool)
            th.join();
    }

    PairSweepTally merged;
    for (const auto& tally : partial) {
        merged.tested += tally.tested;
        merged.matched += tally.matched;
        merged.held += tally.held;
        if (tally.first_violation &&
            (!merged.first_violation || *tally.first_violation < *merged.first_violation))
            merged.first_violation = tally.first_violation;
    }
    return merged;
}

// First counterexample of an exhaustive pair check, in canonical
// enumeration order.
struct SweepCounterexample {
    Multipartition lambda;
    Multipartition lambda_prime;
    Rational a_lambda;
    Rational a_lambda_prime;
};

struct SweepReport {
    long long pairs_tested = 0;
    long long pairs_matched = 0;
    long long pairs_held = 0;
    std::optional<SweepCounterexample> counterexample;

    bool pass() const { return !counterexample.has_value(); }
};

}  // namespace bsk
