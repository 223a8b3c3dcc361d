#pragma once

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bsk/rational.hpp"

namespace bsk {

// A cell (row, column, component) of the Young diagram of an
// l-composition. Rows and columns are 1-based, components 0-based.
struct Node {
    int row = 1;
    int col = 1;
    int component = 0;

    friend bool operator==(const Node&, const Node&) = default;
    // (component, row, col) ascending; the canonical traversal order.
    friend auto operator<=>(const Node&, const Node&) = default;
};

inline int content(const Node& node) { return node.col - node.row; }

// Whether membership/addability is judged against compositions (any
// nonnegative rows) or partitions (weakly decreasing rows).
enum class Kind { partition, composition };

// An l-tuple of integer compositions with total size n. Components are
// stored in canonical form: trailing zero parts stripped, so structural
// equality is equality of canonical forms. Immutable after construction.
class Multipartition {
  public:
    using Component = std::vector<int>;

    Multipartition(std::initializer_list<Component> components)
        : Multipartition(std::vector<Component>(components)) {}

    explicit Multipartition(std::vector<Component> components)
        : components_(std::move(components)) {
        if (components_.empty())
            throw std::invalid_argument("multipartition: level must be >= 1");
        for (auto& comp : components_) {
            for (int part : comp)
                if (part < 0)
                    throw std::invalid_argument("multipartition: negative part");
            while (!comp.empty() && comp.back() == 0)
                comp.pop_back();
            for (int part : comp)
                size_ += part;
        }
    }

    static Multipartition empty(int level) {
        return Multipartition(std::vector<Component>(static_cast<std::size_t>(level)));
    }

    int level() const { return static_cast<int>(components_.size()); }
    int size() const { return size_; }

    const Component& component(int c) const { return components_.at(static_cast<std::size_t>(c)); }
    const std::vector<Component>& components() const { return components_; }

    // Part of row `row` (1-based) of component c; rows past the end read 0.
    int part(int c, int row) const {
        const Component& comp = component(c);
        if (row < 1)
            throw std::out_of_range("multipartition: row index must be >= 1");
        return row <= static_cast<int>(comp.size()) ? comp[static_cast<std::size_t>(row - 1)] : 0;
    }

    bool is_partition() const {
        for (const Component& comp : components_)
            for (std::size_t i = 1; i < comp.size(); ++i)
                if (comp[i] > comp[i - 1])
                    return false;
        return true;
    }

    bool contains(const Node& node) const {
        if (node.component < 0 || node.component >= level() || node.row < 1)
            return false;
        return node.col >= 1 && node.col <= part(node.component, node.row);
    }

    // All size() nodes, ordered (component, row, column) ascending.
    std::vector<Node> nodes() const {
        std::vector<Node> out;
        out.reserve(static_cast<std::size_t>(size_));
        for (int c = 0; c < level(); ++c) {
            const Component& comp = component(c);
            for (int a = 1; a <= static_cast<int>(comp.size()); ++a)
                for (int b = 1; b <= comp[static_cast<std::size_t>(a - 1)]; ++b)
                    out.push_back(Node{a, b, c});
        }
        return out;
    }

    friend bool operator==(const Multipartition&, const Multipartition&) = default;

  private:
    std::vector<Component> components_;
    int size_ = 0;
};

// Integer multicharge s, rational shift vector u with 0 < u_j - u_i < e
// for i < j, and the derived t = s - u. Everything downstream (theta,
// eta, kappa sequences, residues) is driven by one of these.
class ChargeParams {
  public:
    ChargeParams(int e, std::vector<int> s, std::vector<Rational> u)
        : e_(e), s_(std::move(s)), u_(std::move(u)) {
        if (e_ < 1)
            throw std::invalid_argument("charge params: e must be a positive integer");
        if (s_.empty() || s_.size() != u_.size())
            throw std::invalid_argument("charge params: s and u must be nonempty lists of equal length");
        const Rational bound(e_);
        for (std::size_t i = 0; i < u_.size(); ++i)
            for (std::size_t j = i + 1; j < u_.size(); ++j) {
                const Rational diff = u_[j] - u_[i];
                if (!(Rational(0) < diff && diff < bound))
                    throw std::invalid_argument(
                        "charge params: 0 < u_j - u_i < e violated at (i,j) = (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
            }
        t_.reserve(u_.size());
        for (std::size_t j = 0; j < u_.size(); ++j)
            t_.push_back(Rational(s_[j]) - u_[j]);
    }

    // The shift u_j = j*e/l. Admissible for every e >= 1.
    static ChargeParams uglov(int e, std::vector<int> s) {
        const int level = static_cast<int>(s.size());
        std::vector<Rational> u;
        u.reserve(s.size());
        for (int j = 0; j < level; ++j)
            u.emplace_back(static_cast<long long>(j) * e, level);
        return ChargeParams(e, std::move(s), std::move(u));
    }

    int e() const { return e_; }
    int level() const { return static_cast<int>(s_.size()); }
    const std::vector<int>& s() const { return s_; }
    const std::vector<Rational>& u() const { return u_; }
    const std::vector<Rational>& t() const { return t_; }

    int s_at(int c) const { return s_.at(static_cast<std::size_t>(check_component(c))); }
    const Rational& u_at(int c) const { return u_.at(static_cast<std::size_t>(check_component(c))); }
    const Rational& t_at(int c) const { return t_.at(static_cast<std::size_t>(check_component(c))); }

    friend bool operator==(const ChargeParams&, const ChargeParams&) = default;

  private:
    int check_component(int c) const {
        if (c < 0 || c >= level())
            throw std::out_of_range("charge params: component index out of range");
        return c;
    }

    int e_;
    std::vector<int> s_;
    std::vector<Rational> u_;
    std::vector<Rational> t_;
};

// Charged content of a node.
inline int theta(const Node& node, const ChargeParams& params) {
    return content(node) + params.s_at(node.component);
}

// Shifted charged content; differs from theta by u at the node's component.
inline Rational eta(const Node& node, const ChargeParams& params) {
    return Rational(content(node)) + params.t_at(node.component);
}

namespace detail {

inline int component_length(const Multipartition& mp, int c) {
    return static_cast<int>(mp.component(c).size());
}

}  // namespace detail

// A node is addable when appending it to the end of its row keeps the
// component valid for `kind`. For compositions any row works as long as
// the column is right (rows skipped over become explicit zero parts);
// for partitions the result must stay weakly decreasing.
inline bool addable(const Multipartition& mp, const Node& node, Kind kind) {
    if (node.component < 0 || node.component >= mp.level() || node.row < 1)
        return false;
    if (node.col != mp.part(node.component, node.row) + 1)
        return false;
    if (kind == Kind::partition) {
        if (!mp.is_partition())
            return false;
        if (node.row > detail::component_length(mp, node.component) + 1)
            return false;
        if (node.row > 1 && mp.part(node.component, node.row - 1) < node.col)
            return false;
    }
    return true;
}

// A node is removable when it is the last box of its row and removing it
// keeps the component valid for `kind`.
inline bool removable(const Multipartition& mp, const Node& node, Kind kind) {
    if (!mp.contains(node) || node.col != mp.part(node.component, node.row))
        return false;
    if (kind == Kind::partition) {
        if (!mp.is_partition())
            return false;
        if (node.col - 1 < mp.part(node.component, node.row + 1))
            return false;
    }
    return true;
}

inline Multipartition add_node(const Multipartition& mp, const Node& node, Kind kind) {
    if (!addable(mp, node, kind))
        throw std::invalid_argument("add_node: position (" + std::to_string(node.row) + "," +
                                    std::to_string(node.col) + "," + std::to_string(node.component) +
                                    ") is not addable");
    auto components = mp.components();
    auto& comp = components[static_cast<std::size_t>(node.component)];
    if (node.row > static_cast<int>(comp.size()))
        comp.resize(static_cast<std::size_t>(node.row), 0);
    comp[static_cast<std::size_t>(node.row - 1)] += 1;
    return Multipartition(std::move(components));
}

inline Multipartition remove_node(const Multipartition& mp, const Node& node, Kind kind) {
    if (!removable(mp, node, kind))
        throw std::invalid_argument("remove_node: position (" + std::to_string(node.row) + "," +
                                    std::to_string(node.col) + "," + std::to_string(node.component) +
                                    ") is not removable");
    auto components = mp.components();
    components[static_cast<std::size_t>(node.component)][static_cast<std::size_t>(node.row - 1)] -= 1;
    return Multipartition(std::move(components));
}

// The canonical finite list of addable positions: rows 1..len+1 of each
// component (additions that would create new zero rows are not listed,
// though add_node accepts them for compositions). Ordered like nodes().
inline std::vector<Node> addable_nodes(const Multipartition& mp, Kind kind) {
    std::vector<Node> out;
    for (int c = 0; c < mp.level(); ++c) {
        const int len = detail::component_length(mp, c);
        for (int a = 1; a <= len + 1; ++a) {
            const Node node{a, mp.part(c, a) + 1, c};
            if (addable(mp, node, kind))
                out.push_back(node);
        }
    }
    return out;
}

inline std::vector<Node> removable_nodes(const Multipartition& mp, Kind kind) {
    std::vector<Node> out;
    for (int c = 0; c < mp.level(); ++c) {
        const int len = detail::component_length(mp, c);
        for (int a = 1; a <= len; ++a) {
            const Node node{a, mp.part(c, a), c};
            if (removable(mp, node, kind))
                out.push_back(node);
        }
    }
    return out;
}

}  // namespace bsk
