#include "wildscope/generator.hpp"

namespace wildscope {

std::string_view insert_violation_name(InsertViolation v) {
    switch (v) {
        case InsertViolation::OutOfBounds: return "out-of-bounds";
        case InsertViolation::ProviderGap: return "C1";
        case InsertViolation::VerbSplit:   return "C2";
        case InsertViolation::Grammar:     return "grammar";
    }
    return "unknown";
}

InsertResult insert_wildcard(const ActionPath& origin, int first, int last) {
    const std::string& raw = origin.raw();
    const int len = static_cast<int>(raw.size());

    auto refuse = [](InsertViolation v) {
        InsertResult r;
        r.violation = v;
        return r;
    };

    if (first < 0 || last < first || last >= len) {
        return refuse(InsertViolation::OutOfBounds);
    }

    // C1: the star must start at least 4 positions after the first dot,
    // keeping 3 or more literal characters of the provider name.
    std::size_t dot = raw.find('.');
    if (dot == std::string::npos || first < static_cast<int>(dot) + 4) {
        return refuse(InsertViolation::ProviderGap);
    }

    // C2: either the span runs to the end of the string and swallows the
    // whole final segment, or it ends strictly before the final segment.
    const int verb_start = static_cast<int>(raw.size() - origin.verb().size());
    if (last == len - 1) {
        if (first > verb_start) return refuse(InsertViolation::VerbSplit);
    } else if (last >= verb_start) {
        return refuse(InsertViolation::VerbSplit);
    }

    std::string pattern_raw = raw.substr(0, static_cast<std::size_t>(first)) + "*" +
                              raw.substr(static_cast<std::size_t>(last) + 1);
    ParseReport report = parse(pattern_raw);
    if (!report.accepted) {
        return refuse(InsertViolation::Grammar);
    }

    InsertResult r;
    Candidate cand;
    cand.origin = &origin;
    cand.first = first;
    cand.last = last;
    cand.pattern = std::move(*report.pattern);
    r.candidate = std::move(cand);
    return r;
}

std::vector<std::pair<int, int>> enumerate_valid_intervals(const ActionPath& origin) {
    std::vector<std::pair<int, int>> out;
    const int len = static_cast<int>(origin.raw().size());
    for (int first = 0; first < len; ++first) {
        for (int last = first; last < len; ++last) {
            if (insert_wildcard(origin, first, last).ok()) {
                out.emplace_back(first, last);
            }
        }
    }
    return out;
}

namespace {

std::optional<Candidate> sample_by_rejection(const ActionPath& origin, Rng& rng) {
    const std::uint64_t len = origin.raw().size();
    for (int attempt = 0; attempt < 200; ++attempt) {
        int a = static_cast<int>(rng.below(len));
        int b = static_cast<int>(rng.below(len));
        if (a > b) continue;
        InsertResult r = insert_wildcard(origin, a, b);
        if (r.ok()) return std::move(r.candidate);
    }
    return std::nullopt;
}

std::optional<Candidate> pick_from(const ActionPath& origin, Rng& rng,
                                   const std::vector<std::pair<int, int>>& intervals) {
    if (intervals.empty()) return std::nullopt;
    auto [first, last] = intervals[rng.below(intervals.size())];
    return std::move(insert_wildcard(origin, first, last).candidate);
}

} // namespace

std::optional<Candidate> random_candidate(const ActionPath& origin, Rng& rng,
                                          const std::vector<std::pair<int, int>>& fallback) {
    if (auto hit = sample_by_rejection(origin, rng)) return hit;
    return pick_from(origin, rng, fallback);
}

std::optional<Candidate> random_candidate(const ActionPath& origin, Rng& rng) {
    // Rejection rarely misses 200 times; enumeration is only needed to
    // complete the fallback draw or to decide unsatisfiability.
    if (auto hit = sample_by_rejection(origin, rng)) return hit;
    return pick_from(origin, rng, enumerate_valid_intervals(origin));
}

} // namespace wildscope
