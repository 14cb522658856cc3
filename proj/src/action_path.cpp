#include "wildscope/action_path.hpp"

#include "wildscope/strings.hpp"

namespace wildscope {

std::optional<ActionPath> ActionPath::from_raw(std::string_view input, std::string* error) {
    auto fail = [&](std::string_view why) -> std::optional<ActionPath> {
        if (error) *error = std::string(why);
        return std::nullopt;
    };

    std::string raw = to_lower_copy(trim_view(input));
    if (raw.empty()) return fail("empty action");
    if (raw.find('*') != std::string::npos) return fail("wildcard in explicit action");

    ActionPath path;
    std::uint32_t start = 0;
    for (std::uint32_t i = 0; i <= raw.size(); ++i) {
        if (i == raw.size() || raw[i] == '/' || raw[i] == '.') {
            if (i == start) return fail("empty segment");
            path.bounds_.push_back({start, i - start});
            start = i + 1;
        }
    }

    std::size_t slash = raw.rfind('/');
    path.verb_start_ = slash == std::string::npos ? 0 : slash + 1;
    path.raw_ = std::move(raw);
    return path;
}

bool ActionPath::segment_less(const ActionPath& a, const ActionPath& b) {
    std::size_t n = std::min(a.depth(), b.depth());
    for (std::size_t i = 0; i < n; ++i) {
        int c = a.segment(i).compare(b.segment(i));
        if (c != 0) return c < 0;
    }
    return a.depth() < b.depth();
}

std::size_t ActionPath::common_depth(const ActionPath& a, const ActionPath& b) {
    std::size_t n = std::min(a.depth(), b.depth());
    std::size_t k = 0;
    while (k < n && a.segment(k) == b.segment(k)) ++k;
    return k;
}

} // namespace wildscope
