#pragma once

// Wildcard candidate generation: replaces a character span of an explicit
// action with '*', subject to constraints that rule out trivial global
// patterns. Spans are 0-based with both ends inclusive: [first, last].

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "wildscope/action_path.hpp"
#include "wildscope/grammar.hpp"
#include "wildscope/rng.hpp"

namespace wildscope {

enum class InsertViolation {
    OutOfBounds,
    ProviderGap, // C1: at least 3 literal characters between the provider dot and the star
    VerbSplit,   // C2: the star may not split the final segment unless it replaces it entirely
    Grammar,     // the resulting pattern fails to parse
};

std::string_view insert_violation_name(InsertViolation v);

/// A wildcard pattern derived from one explicit origin action.
struct Candidate {
    const ActionPath* origin = nullptr;
    int first = 0; // inclusive start of the replaced span in origin raw
    int last = 0;  // inclusive end
    WildcardPattern pattern;
};

struct InsertResult {
    std::optional<Candidate> candidate;
    std::optional<InsertViolation> violation;
    bool ok() const { return candidate.has_value(); }
};

/// Deterministic string surgery: origin raw with [first, last] replaced by
/// '*'. Returns the candidate or the first violated constraint.
InsertResult insert_wildcard(const ActionPath& origin, int first, int last);

/// Every valid (first, last) span, by brute force over all pairs. Doubles
/// as the sampling fallback and the constraint oracle in tests.
std::vector<std::pair<int, int>> enumerate_valid_intervals(const ActionPath& origin);

/// Uniformly samples a valid span by rejection (200 attempts), then falls
/// back to a uniform pick from the enumerated list. nullopt when the origin
/// admits no valid insertion.
std::optional<Candidate> random_candidate(const ActionPath& origin, Rng& rng);

/// Same, with a caller-provided enumeration to avoid recomputing it.
std::optional<Candidate> random_candidate(const ActionPath& origin, Rng& rng,
                                          const std::vector<std::pair<int, int>>& fallback);

} // namespace wildscope
