#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bsk/enumerate.hpp"
#include "bsk/multipartition.hpp"
#include "bsk/orders.hpp"

namespace bsk {

// Residue of a node: charged content mod e, in [0, e-1].
inline int residue(const Node& node, int e, const std::vector<int>& s) {
    if (e < 1)
        throw std::invalid_argument("residue: e must be >= 1");
    if (node.component < 0 || node.component >= static_cast<int>(s.size()))
        throw std::out_of_range("residue: component index out of range");
    const int charged = content(node) + s[static_cast<std::size_t>(node.component)];
    return ((charged % e) + e) % e;
}

// The i-signature of a multipartition: its addable and removable i-nodes
// in increasing precedence order, together with the reduced form after
// cancellation and the distinguished good node, if any.
struct Signature {
    struct Entry {
        Node node;
        bool addable;  // false: removable
    };
    std::vector<Entry> entries;  // unreduced, precedence-ascending
    std::vector<Entry> reduced;  // addables first, then removables
    std::optional<Node> good;
};

// Builds the i-signature. Scanning the precedence-ascending word, a
// removable node immediately followed by an addable one cancels; after
// full reduction the word reads A...AR...R and the good node is the
// precedence-greatest surviving addable. Two distinct signature entries
// can never tie under the precedence order; that is asserted, not assumed.
inline Signature signature(const Multipartition& mp, int i, int e, const std::vector<int>& s) {
    if (i < 0 || i >= e)
        throw std::invalid_argument("signature: residue out of range");
    if (static_cast<int>(s.size()) != mp.level())
        throw std::invalid_argument("signature: multicharge length does not match level");

    Signature sig;
    for (const Node& node : addable_nodes(mp, Kind::partition))
        if (residue(node, e, s) == i)
            sig.entries.push_back({node, true});
    for (const Node& node : removable_nodes(mp, Kind::partition))
        if (residue(node, e, s) == i)
            sig.entries.push_back({node, false});

    const auto before = [&](const Signature::Entry& a, const Signature::Entry& b) {
        return precedes(a.node, b.node, s);
    };
    std::sort(sig.entries.begin(), sig.entries.end(), before);
    for (std::size_t k = 1; k < sig.entries.size(); ++k)
        if (!before(sig.entries[k - 1], sig.entries[k]))
            throw std::logic_error("signature: tie in the precedence order");

    for (const Signature::Entry& entry : sig.entries) {
        if (entry.addable && !sig.reduced.empty() && !sig.reduced.back().addable)
            sig.reduced.pop_back();
        else
            sig.reduced.push_back(entry);
    }
    for (auto it = sig.reduced.rbegin(); it != sig.reduced.rend(); ++it)
        if (it->addable) {
            sig.good = it->node;
            break;
        }
    return sig;
}

inline std::optional<Node> good_node(const Multipartition& mp, int i, int e,
                                     const std::vector<int>& s) {
    return signature(mp, i, e, s).good;
}

struct GoodNodeStep {
    int residue;
    Node node;
};

// The multipartitions reachable from empty by good-node additions,
// sorted canonically, each with the first-discovered generating path.
struct UglovSet {
    std::vector<Multipartition> elements;
    std::vector<std::vector<GoodNodeStep>> paths;
};

// Breadth-first by size: expand every element of the current layer by
// the good i-node for each residue i, deduplicating canonical forms.
// Layer elements are visited in canonical order and residues ascending,
// so the recorded paths are deterministic.
inline UglovSet uglov_multipartitions(int n, int level, int e, const std::vector<int>& s) {
    if (n < 0 || level < 1 || e < 1)
        throw std::invalid_argument("uglov: need n >= 0, level >= 1, e >= 1");
    if (static_cast<int>(s.size()) != level)
        throw std::invalid_argument("uglov: multicharge length does not match level");

    using Layer = std::map<Multipartition, std::vector<GoodNodeStep>,
                           bool (*)(const Multipartition&, const Multipartition&)>;
    Layer layer(&canonical_before);
    layer.emplace(Multipartition::empty(level), std::vector<GoodNodeStep>{});

    for (int step = 0; step < n; ++step) {
        Layer next(&canonical_before);
        for (const auto& [mp, path] : layer)
            for (int i = 0; i < e; ++i)
                if (const auto good = good_node(mp, i, e, s)) {
                    Multipartition grown = add_node(mp, *good, Kind::partition);
                    if (next.find(grown) == next.end()) {
                        auto grown_path = path;
                        grown_path.push_back({i, *good});
                        next.emplace(std::move(grown), std::move(grown_path));
                    }
                }
        layer = std::move(next);
    }

    UglovSet out;
    out.elements.reserve(layer.size());
    out.paths.reserve(layer.size());
    for (auto& [mp, path] : layer) {
        out.elements.push_back(mp);
        out.paths.push_back(path);
    }
    return out;
}

}  // namespace bsk
