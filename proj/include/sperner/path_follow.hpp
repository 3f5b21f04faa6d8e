#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sperner/errors.hpp"
#include "sperner/sperner.hpp"
#include "sperner/subdivision.hpp"

namespace sperner {

struct PathStats {
    std::size_t steps = 0;
    std::size_t label_queries = 0;
};

/// Door-graph walk through the nested faces F_0 ⊂ F_1 ⊂ ... ⊂ F_n, where
/// F_k = conv(v_1, ..., v_{k+1}) and F_{n-1} = Δ_{n+1}.
///
/// Nodes are k-simplices inside F_k whose labels contain {1..k}. A node is
/// joined to the far side of each of its doors (facets labeled exactly
/// {1..k}), which is either the neighbouring k-simplex in F_k or, for a door
/// lying in F_{k-1}, the door itself as a level k-1 node. A node labeled
/// exactly {1..k+1} is also joined to its unique cofacet in F_{k+1}. Every
/// node has degree 2 except v_1 (degree 1, the start) and the fully labeled
/// n-simplices, so the walk from v_1 ends at one of them.
///
/// Space provides: Node, Key, dim(), start(), level(node), labels(node),
/// facet_in_lower(node, i), lower(node, i), across(node, i), upper(node),
/// key(node).
template <class Space>
typename Space::Node walk_nested_doors(Space& space, PathStats* stats = nullptr, std::size_t max_steps = 0) {
    using Node = typename Space::Node;
    using Key = typename Space::Key;
    const int n = space.dim();

    Node cur = space.start();
    std::optional<Key> prev;

    // Brent cycle detection on the (prev, cur) state: a correct door graph is a
    // simple path, so any repeated state is an invariant breach.
    std::optional<std::pair<std::optional<Key>, Key>> saved;
    std::size_t power = 1, lambda = 0, steps = 0;

    for (;;) {
        const int k = space.level(cur);
        const std::vector<Label> labels = space.labels(cur);
        std::uint32_t mask = 0;
        for (Label l : labels) mask |= 1u << (l - 1);
        if (k == n && mask == (1u << (n + 1)) - 1) {
            if (stats) stats->steps = steps;
            return cur;
        }

        std::vector<Node> next;
        if (k >= 1) {
            const std::uint32_t door = (1u << k) - 1;
            for (int i = 0; i <= k; ++i) {
                std::uint32_t fm = 0;
                for (int j = 0; j <= k; ++j)
                    if (j != i) fm |= 1u << (labels[j] - 1);
                if (fm != door) continue;
                if (space.facet_in_lower(cur, i)) {
                    next.push_back(space.lower(cur, i));
                } else {
                    auto across = space.across(cur, i);
                    if (!across) throw InvariantBreach("door on the boundary of F_" + std::to_string(k) + " outside F_" +
                                                       std::to_string(k - 1));
                    next.push_back(std::move(*across));
                }
            }
        }
        if (k < n && mask == (1u << (k + 1)) - 1) next.push_back(space.upper(cur));

        const Key cur_key = space.key(cur);
        std::optional<Node> chosen;
        std::size_t remaining = 0;
        for (Node& nb : next) {
            if (prev && space.key(nb) == *prev) continue;
            ++remaining;
            chosen = std::move(nb);
        }
        if (remaining != 1)
            throw InvariantBreach("door-graph node at level " + std::to_string(k) + " has " + std::to_string(remaining) +
                                  " onward doors");

        prev = cur_key;
        cur = std::move(*chosen);
        ++steps;
        if (max_steps && steps > max_steps) throw InvariantBreach("path-following exceeded the step budget");

        const Key key = space.key(cur);
        if (saved && saved->first == prev && saved->second == key)
            throw InvariantBreach("path-following revisited a door");
        if (++lambda == power) {
            saved.emplace(prev, key);
            power *= 2;
            lambda = 0;
        }
    }
}

/// Door-graph walk over an explicit complex. Returns the index of a fully
/// labeled top simplex.
FaceIndex find_fully_labeled_pathfollow(const Labeling& L, PathStats* stats = nullptr);

/// Assigns labels to lattice points of an edgewise grid.
using LatticeLabeler = std::function<Label(const LatticePoint&)>;

/// Door-graph walk over an implicit edgewise grid; only the cells on the path
/// are generated and only their vertices are labeled (memoized in a bounded
/// cache). Throws InvalidLabeling if the labeler breaks the Sperner condition
/// on a visited vertex.
KuhnCell find_fully_labeled_pathfollow(const EdgewiseGrid& grid, const LatticeLabeler& labeler,
                                       PathStats* stats = nullptr);

} // namespace sperner
