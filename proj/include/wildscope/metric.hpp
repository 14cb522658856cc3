#pragma once

// Hierarchy tree over the segment namespace, the LCA-depth distance between
// actions, and the diameter (minimum pairwise distance) of action sets.
// Larger distance means semantically closer; diameter 1 means a set spans
// resource providers.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wildscope/action_path.hpp"

namespace wildscope {

/// Prefix tree over segment paths. The root (depth 0) is the global
/// namespace; each distinct segment-path prefix is one node. Leaves record
/// which actions terminate there. The tree views the action array it was
/// built from, which must outlive it.
class HierarchyTree {
public:
    struct Node {
        std::string label;
        int depth = 0;
        int parent = -1;
        std::map<std::string, int, std::less<>> children;
        std::vector<std::uint32_t> terminating; // indices into the source array
    };

    static HierarchyTree build(std::span<const ActionPath> actions);

    const Node& root() const { return nodes_[0]; }
    const Node& node(int idx) const { return nodes_[idx]; }
    std::size_t node_count() const { return nodes_.size(); }

    /// Index of the node at the end of the action's segment path, or -1
    /// when the path (or the action itself) is not in the tree.
    int find_terminal(const ActionPath& a) const;

    bool contains(const ActionPath& a) const { return find_terminal(a) >= 0; }

private:
    std::vector<Node> nodes_;
    std::span<const ActionPath> source_;
};

struct DistanceResult {
    int distance = 0;       // depth of the lowest common ancestor
    std::string lca_path;   // its full label path; empty for the root
};

/// d(u, v) = depth of the lowest common ancestor of u and v.
/// Throws DomainError when u == v or either action is absent from the tree.
DistanceResult distance(const ActionPath& u, const ActionPath& v, const HierarchyTree& t);

struct DiameterResult {
    int value = 0;
    const ActionPath* left = nullptr;  // witness pair attaining the minimum,
    const ActionPath* right = nullptr; // lexicographically smallest by raw
};

/// Minimum pairwise distance over the set, with the witness pair that
/// attains it. nullopt for sets of fewer than two actions.
///
/// Runs in O(n log n): equal to the O(n^2) pairwise scan (every element of
/// the set participates in some minimizing pair, so the raw-smallest member
/// always anchors the witness).
std::optional<DiameterResult> diameter(std::span<const ActionPath* const> members);

} // namespace wildscope
