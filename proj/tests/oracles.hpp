#pragma once

// Independent reference implementations used only by tests. These stay
// deliberately naive: a character-walk glob matcher, split-based segment
// distance, and an O(n^2) diameter scan, none of which share code with the
// library paths they check.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wildscope/rng.hpp"

namespace oracle {

/// Anchored glob match by backtracking character walk. Supports any number
/// of '*'; every other character is literal.
inline bool glob_match(std::string_view pattern, std::string_view s) {
    std::size_t pi = 0, si = 0;
    std::size_t star = std::string_view::npos, backtrack = 0;
    while (si < s.size()) {
        if (pi < pattern.size() && pattern[pi] == '*') {
            star = pi++;
            backtrack = si;
        } else if (pi < pattern.size() && pattern[pi] == s[si]) {
            ++pi;
            ++si;
        } else if (star != std::string_view::npos) {
            pi = star + 1;
            si = ++backtrack;
        } else {
            return false;
        }
    }
    while (pi < pattern.size() && pattern[pi] == '*') ++pi;
    return pi == pattern.size();
}

inline std::vector<std::string> segments(std::string_view raw) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : raw) {
        if (c == '/' || c == '.') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline int lca_depth(std::string_view a, std::string_view b) {
    auto sa = segments(a);
    auto sb = segments(b);
    std::size_t n = std::min(sa.size(), sb.size());
    std::size_t k = 0;
    while (k < n && sa[k] == sb[k]) ++k;
    return static_cast<int>(k);
}

struct Diameter {
    int value;
    std::string left;
    std::string right;
};

/// O(n^2) scan over raw-sorted input; keeps the first pair attaining the
/// final minimum, which is the lexicographically smallest one.
inline std::optional<Diameter> diameter(std::vector<std::string> raws) {
    if (raws.size() < 2) return std::nullopt;
    std::sort(raws.begin(), raws.end());
    std::optional<Diameter> best;
    for (std::size_t i = 0; i < raws.size(); ++i) {
        for (std::size_t j = i + 1; j < raws.size(); ++j) {
            int d = lca_depth(raws[i], raws[j]);
            if (!best || d < best->value) {
                best = Diameter{d, raws[i], raws[j]};
            }
        }
    }
    return best;
}

/// Random synthetic action strings for property tests. Segments draw from
/// a small pool (dashes and digits included, so raw-string order and
/// segment order can disagree); separators mix '/' and '.'.
inline std::vector<std::string> random_catalog(wildscope::Rng& rng, std::size_t max_size) {
    static const char* const pool[] = {"alpha", "al",    "beta",  "b-2",   "gamma",
                                       "ga",    "delta", "d_x",   "ops",   "op-s",
                                       "reg",   "zone9", "core",  "c$b",   "nodes",
                                       "node",  "feeds", "feed3", "store", "st"};
    static const char* const verbs[] = {"read", "write", "delete", "action"};
    std::size_t n = 1 + rng.below(max_size);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
        std::string raw = "microsoft.";
        raw += pool[rng.below(std::size(pool))];
        std::size_t levels = rng.below(4);
        for (std::size_t l = 0; l < levels; ++l) {
            raw += rng.below(5) == 0 ? '.' : '/';
            raw += pool[rng.below(std::size(pool))];
        }
        raw += '/';
        raw += verbs[rng.below(4)];
        out.push_back(std::move(raw));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Random pattern with one star, derived from a catalog member half the
/// time (so matches actually occur) and fully random otherwise.
inline std::string random_pattern(wildscope::Rng& rng, const std::vector<std::string>& catalog) {
    if (!catalog.empty() && rng.coin()) {
        const std::string& base = catalog[rng.below(catalog.size())];
        std::size_t a = rng.below(base.size());
        std::size_t b = a + rng.below(base.size() - a);
        return base.substr(0, a) + "*" + base.substr(b + 1);
    }
    static const char* const bits[] = {"microsoft.al", "microsoft.beta/ops",
                                       "microsoft.ga",  "microsoft.store/feeds"};
    static const char* const tails[] = {"/read", "/write", "/delete", "/action", ""};
    return std::string(bits[rng.below(std::size(bits))]) + "*" + tails[rng.below(std::size(tails))];
}

} // namespace oracle
