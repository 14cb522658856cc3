#include "wildscope/expansion.hpp"

#include <algorithm>

namespace wildscope {

MatchSet expand(const WildcardPattern& w, const Catalog& c) {
    MatchSet result;
    result.pattern = w;

    if (w.is_explicit()) {
        if (const ActionPath* hit = c.find(w.raw)) {
            result.members.push_back(hit);
        }
        return result;
    }

    // The catalog is sorted by raw string, so the anchored prefix bounds a
    // contiguous slice; only the suffix needs checking inside it.
    auto [lo, hi] = c.prefix_range(w.matcher.prefix);
    const auto& actions = c.actions();
    for (std::size_t i = lo; i < hi; ++i) {
        if (w.matcher.matches(actions[i].raw())) {
            result.members.push_back(&actions[i]);
        }
    }
    return result;
}

EffectiveSet effective_set(const WildcardPattern& action,
                           std::span<const WildcardPattern> not_actions,
                           const Catalog& c) {
    EffectiveSet result;
    MatchSet base = expand(action, c);

    std::vector<const ActionPath*> excluded;
    for (const WildcardPattern& n : not_actions) {
        MatchSet sub = expand(n, c);
        if (sub.members.empty()) {
            result.inert_not_actions.push_back(n.raw);
            continue;
        }
        excluded.insert(excluded.end(), sub.members.begin(), sub.members.end());
    }
    std::sort(excluded.begin(), excluded.end());
    excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());

    result.granted.pattern = std::move(base.pattern);
    std::set_difference(base.members.begin(), base.members.end(), excluded.begin(),
                        excluded.end(), std::back_inserter(result.granted.members));
    return result;
}

} // namespace wildscope
