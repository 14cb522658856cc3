#pragma once

// Expansion of patterns against the catalog universe, and the effective
// permission set: everything granted by an action pattern minus everything
// matched by its NotAction patterns.

#include <span>
#include <string>
#include <vector>

#include "wildscope/catalog.hpp"
#include "wildscope/grammar.hpp"

namespace wildscope {

/// The exact subset of the catalog matched by a pattern. Members point
/// into the catalog and stay sorted by raw string.
struct MatchSet {
    WildcardPattern pattern;
    std::vector<const ActionPath*> members;
};

MatchSet expand(const WildcardPattern& w, const Catalog& c);

struct EffectiveSet {
    MatchSet granted;
    // NotActions that matched nothing: legal no-ops, usually typos.
    std::vector<std::string> inert_not_actions;
};

EffectiveSet effective_set(const WildcardPattern& action,
                           std::span<const WildcardPattern> not_actions,
                           const Catalog& c);

} // namespace wildscope
