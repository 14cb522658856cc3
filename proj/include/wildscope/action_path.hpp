#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wildscope {

/// A fully explicit (wildcard-free) action, normalized to lowercase, with
/// its segment decomposition. Segments are split on both '/' and '.'; the
/// original separator positions are kept so the raw string can always be
/// reconstructed.
class ActionPath {
public:
    /// Builds from a raw action string (trimmed and lowercased here).
    /// Returns nullopt and fills `error` when the string contains a
    /// wildcard or an empty segment (doubled, leading or trailing
    /// separators).
    static std::optional<ActionPath> from_raw(std::string_view input,
                                              std::string* error = nullptr);

    const std::string& raw() const { return raw_; }

    std::size_t depth() const { return bounds_.size(); }

    std::string_view segment(std::size_t i) const {
        return std::string_view(raw_).substr(bounds_[i].start, bounds_[i].len);
    }

    /// Separator character preceding segment i (i >= 1): '/' or '.'.
    char separator_before(std::size_t i) const { return raw_[bounds_[i].start - 1]; }

    /// Raw prefix covering the first k segments with their separators.
    std::string_view raw_prefix(std::size_t k) const {
        if (k == 0) return {};
        const auto& b = bounds_[k - 1];
        return std::string_view(raw_).substr(0, b.start + b.len);
    }

    /// Final slash-delimited segment ("read", "write", ...).
    std::string_view verb() const { return std::string_view(raw_).substr(verb_start_); }

    /// First slash-delimited segment, e.g. "microsoft.compute".
    std::string_view provider() const {
        std::size_t slash = raw_.find('/');
        return std::string_view(raw_).substr(0, slash == std::string::npos ? raw_.size() : slash);
    }

    /// Segment-wise lexicographic comparison (each segment as one atom).
    /// This is the sort order under which equal segment prefixes are
    /// contiguous; it differs from raw-string order when a segment is a
    /// prefix of another and the next character sorts below '.'.
    static bool segment_less(const ActionPath& a, const ActionPath& b);

    /// Number of leading segments shared by a and b.
    static std::size_t common_depth(const ActionPath& a, const ActionPath& b);

    friend bool operator<(const ActionPath& a, const ActionPath& b) { return a.raw_ < b.raw_; }
    friend bool operator==(const ActionPath& a, const ActionPath& b) { return a.raw_ == b.raw_; }

private:
    struct Bound {
        std::uint32_t start;
        std::uint32_t len;
    };

    std::string raw_;
    std::vector<Bound> bounds_;
    std::size_t verb_start_ = 0;
};

} // namespace wildscope
