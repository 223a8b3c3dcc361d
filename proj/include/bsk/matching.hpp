#pragma once

#include <limits>
#include <optional>
#include <vector>

namespace bsk {

// Hopcroft-Karp maximum matching on a bipartite graph with `left` and
// `right` vertices, 0-based. The instances here are tiny (one vertex per
// node of a multipartition) but the callers need a certified witness,
// so the matching itself is returned, not just its size.
class BipartiteMatcher {
  public:
    BipartiteMatcher(int left, int right)
        : left_(left), right_(right), adj_(static_cast<std::size_t>(left)) {}

    void add_edge(int u, int v) { adj_[static_cast<std::size_t>(u)].push_back(v); }

    int max_matching() {
        match_left_.assign(static_cast<std::size_t>(left_), kFree);
        match_right_.assign(static_cast<std::size_t>(right_), kFree);
        int matched = 0;
        while (bfs()) {
            for (int u = 0; u < left_; ++u)
                if (match_left_[static_cast<std::size_t>(u)] == kFree && dfs(u))
                    ++matched;
        }
        return matched;
    }

    // The left-to-right assignment if a perfect matching exists.
    std::optional<std::vector<int>> perfect_matching() {
        if (left_ != right_)
            return std::nullopt;
        if (max_matching() != left_)
            return std::nullopt;
        return match_left_;
    }

  private:
    static constexpr int kFree = -1;
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        dist_.assign(static_cast<std::size_t>(left_), kInf);
        queue_.clear();
        for (int u = 0; u < left_; ++u)
            if (match_left_[static_cast<std::size_t>(u)] == kFree) {
                dist_[static_cast<std::size_t>(u)] = 0;
                queue_.push_back(u);
            }
        bool reachable_free = false;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int u = queue_[head];
            for (int v : adj_[static_cast<std::size_t>(u)]) {
                const int w = match_right_[static_cast<std::size_t>(v)];
                if (w == kFree) {
                    reachable_free = true;
                } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
                    dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
                    queue_.push_back(w);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            const int w = match_right_[static_cast<std::size_t>(v)];
            if (w == kFree ||
                (dist_[static_cast<std::size_t>(w)] == dist_[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
                match_left_[static_cast<std::size_t>(u)] = v;
                match_right_[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(u)] = kInf;
        return false;
    }

    int left_;
    int right_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_;
    std::vector<int> match_right_;
    std::vector<int> dist_;
    std::vector<int> queue_;
};

}  // namespace bsk
