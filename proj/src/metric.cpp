#include "wildscope/metric.hpp"

#include <algorithm>

#include "wildscope/errors.hpp"

namespace wildscope {

HierarchyTree HierarchyTree::build(std::span<const ActionPath> actions) {
    HierarchyTree tree;
    tree.source_ = actions;
    tree.nodes_.push_back(Node{});
    for (std::uint32_t ai = 0; ai < actions.size(); ++ai) {
        const ActionPath& a = actions[ai];
        int cur = 0;
        for (std::size_t s = 0; s < a.depth(); ++s) {
            std::string_view label = a.segment(s);
            auto it = tree.nodes_[cur].children.find(label);
            if (it == tree.nodes_[cur].children.end()) {
                int next = static_cast<int>(tree.nodes_.size());
                Node n;
                n.label = std::string(label);
                n.depth = tree.nodes_[cur].depth + 1;
                n.parent = cur;
                tree.nodes_[cur].children.emplace(n.label, next);
                tree.nodes_.push_back(std::move(n));
                cur = next;
            } else {
                cur = it->second;
            }
        }
        tree.nodes_[cur].terminating.push_back(ai);
    }
    return tree;
}

int HierarchyTree::find_terminal(const ActionPath& a) const {
    int cur = 0;
    for (std::size_t s = 0; s < a.depth(); ++s) {
        auto it = nodes_[cur].children.find(a.segment(s));
        if (it == nodes_[cur].children.end()) return -1;
        cur = it->second;
    }
    for (std::uint32_t idx : nodes_[cur].terminating) {
        if (source_[idx].raw() == a.raw()) return cur;
    }
    return -1;
}

DistanceResult distance(const ActionPath& u, const ActionPath& v, const HierarchyTree& t) {
    if (u.raw() == v.raw()) {
        throw DomainError("distance requires two distinct actions");
    }
    if (!t.contains(u)) throw DomainError("unknown action: " + u.raw());
    if (!t.contains(v)) throw DomainError("unknown action: " + v.raw());

    std::size_t k = ActionPath::common_depth(u, v);
    DistanceResult r;
    r.distance = static_cast<int>(k);
    r.lca_path = std::string(u.raw_prefix(k));
    return r;
}

std::optional<DiameterResult> diameter(std::span<const ActionPath* const> members) {
    if (members.size() < 2) return std::nullopt;

    std::vector<const ActionPath*> by_segments(members.begin(), members.end());
    std::sort(by_segments.begin(), by_segments.end(),
              [](const ActionPath* a, const ActionPath* b) {
                  return ActionPath::segment_less(*a, *b);
              });

    // In segment order the minimum pairwise LCA depth is attained by an
    // adjacent pair: the common depth of any pair is the minimum over the
    // adjacent common depths between them.
    std::size_t min_depth = ActionPath::common_depth(*by_segments[0], *by_segments[1]);
    for (std::size_t i = 2; i < by_segments.size(); ++i) {
        min_depth = std::min(
            min_depth, ActionPath::common_depth(*by_segments[i - 1], *by_segments[i]));
    }

    const ActionPath* left = members[0];
    for (const ActionPath* m : members) {
        if (m->raw() < left->raw()) left = m;
    }
    const ActionPath* right = nullptr;
    for (const ActionPath* m : members) {
        if (m == left) continue;
        if (ActionPath::common_depth(*left, *m) == min_depth) {
            if (right == nullptr || m->raw() < right->raw()) right = m;
        }
    }

    DiameterResult r;
    r.value = static_cast<int>(min_depth);
    r.left = left;
    r.right = right;
    return r;
}

} // namespace wildscope
