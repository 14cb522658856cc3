#include "wildscope/grammar.hpp"

#include <algorithm>
#include <array>

#include "wildscope/strings.hpp"

namespace wildscope {

namespace {

constexpr std::array<std::string_view, 4> kVerbs = {"read", "write", "delete", "action"};

bool is_known_verb(std::string_view s) {
    return std::find(kVerbs.begin(), kVerbs.end(), s) != kVerbs.end();
}

} // namespace

bool is_text_char(char c) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isalnum(u)) return true;
    switch (c) {
        case '.':
        case '-':
        case '_':
        case '$':
        case '{':
        case '}':
            return true;
        default:
            return false;
    }
}

LexResult lex(std::string_view input) {
    LexResult result;
    std::size_t i = 0;
    while (i < input.size()) {
        char c = input[i];
        if (is_space_char(c)) {
            ++i;
            continue;
        }
        if (c == '*') {
            result.tokens.push_back({TokenKind::Wildcard, "*", i, i + 1});
            ++i;
            continue;
        }
        if (c == '/') {
            result.tokens.push_back({TokenKind::Slash, "/", i, i + 1});
            ++i;
            continue;
        }
        if (is_text_char(c)) {
            std::size_t start = i;
            while (i < input.size() && is_text_char(input[i])) ++i;
            result.tokens.push_back(
                {TokenKind::Text, std::string(input.substr(start, i - start)), start, i});
            continue;
        }
        result.issues.push_back({i, c});
        ++i;
    }
    return result;
}

std::string_view rule_id(Rule r) {
    switch (r) {
        case Rule::MultiWildcard:  return "E_MULTI_WILDCARD";
        case Rule::WildcardInVerb: return "E_WILDCARD_IN_VERB";
        case Rule::BadVerb:        return "E_BAD_VERB";
        case Rule::BareWildcard:   return "E_BARE_WILDCARD";
        case Rule::TrailingSlash:  return "E_TRAILING_SLASH";
        case Rule::IllegalChar:    return "E_ILLEGAL_CHAR";
        case Rule::EmptySegment:   return "E_EMPTY_SEGMENT";
    }
    return "E_UNKNOWN";
}

namespace {

void add(std::vector<Violation>& vs, Rule r, std::size_t offset, std::string message) {
    vs.push_back({r, offset, std::move(message)});
}

std::vector<PatternSegment> build_segments(std::string_view raw) {
    std::vector<PatternSegment> out;
    std::size_t pos = 0;
    while (pos <= raw.size()) {
        std::size_t slash = raw.find('/', pos);
        std::string_view seg =
            slash == std::string_view::npos ? raw.substr(pos) : raw.substr(pos, slash - pos);
        PatternSegment ps;
        std::size_t star = seg.find('*');
        if (star == std::string_view::npos) {
            ps.shape = SegmentShape::Text;
            ps.head = std::string(seg);
        } else if (seg.size() == 1) {
            ps.shape = SegmentShape::Star;
        } else if (star == 0) {
            ps.shape = SegmentShape::StarText;
            ps.tail = std::string(seg.substr(1));
        } else if (star == seg.size() - 1) {
            ps.shape = SegmentShape::TextStar;
            ps.head = std::string(seg.substr(0, star));
        } else {
            ps.shape = SegmentShape::TextStarText;
            ps.head = std::string(seg.substr(0, star));
            ps.tail = std::string(seg.substr(star + 1));
        }
        out.push_back(std::move(ps));
        if (slash == std::string_view::npos) break;
        pos = slash + 1;
    }
    return out;
}

} // namespace

ParseReport parse(std::string_view input, const ParseOptions& opts) {
    ParseReport report;
    std::string raw = to_lower_copy(trim_view(input));

    if (raw.empty()) {
        add(report.violations, Rule::EmptySegment, 0, "empty pattern");
        return report;
    }

    for (std::size_t i = 0; i < raw.size(); ++i) {
        char c = raw[i];
        if (is_space_char(c)) {
            add(report.violations, Rule::IllegalChar, i, "whitespace inside pattern");
        } else if (c != '*' && c != '/' && !is_text_char(c)) {
            add(report.violations, Rule::IllegalChar, i,
                std::string("illegal character '") + c + "'");
        }
    }

    if (raw.front() == '/') {
        add(report.violations, Rule::EmptySegment, 0, "empty leading segment");
    }
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
        if (raw[i] == '/' && raw[i + 1] == '/') {
            add(report.violations, Rule::EmptySegment, i + 1, "empty segment");
        }
    }
    if (raw.back() == '/' && raw.size() > 1) {
        add(report.violations, Rule::TrailingSlash, raw.size() - 1, "trailing slash");
    }

    std::vector<std::size_t> stars;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == '*') stars.push_back(i);
    }
    if (stars.size() > 1) {
        add(report.violations, Rule::MultiWildcard, stars[1], "more than one wildcard");
    }

    if (raw == "*" && !opts.allow_bare_wildcard) {
        add(report.violations, Rule::BareWildcard, 0,
            "pattern has no segments outside the wildcard");
    }

    // Final-segment rules. A wildcard mixed into the last segment is only
    // legal when the pattern has no slash at all: then the star spans from
    // the first segment through the verb (prefix form such as "abc.def*").
    std::size_t last_slash = raw.rfind('/');
    bool has_slash = last_slash != std::string::npos;
    std::size_t verb_start = has_slash ? last_slash + 1 : 0;
    std::string_view lastseg = std::string_view(raw).substr(verb_start);

    if (!lastseg.empty()) {
        std::size_t star_in_last = raw.find('*', verb_start);
        if (star_in_last != std::string::npos) {
            if (lastseg != "*" && has_slash) {
                add(report.violations, Rule::WildcardInVerb, star_in_last,
                    "wildcard inside the final segment");
            }
        } else {
            bool lex_ok = std::all_of(lastseg.begin(), lastseg.end(),
                                      [](char c) { return is_text_char(c); });
            if (lex_ok && !is_known_verb(lastseg)) {
                add(report.violations, Rule::BadVerb, verb_start,
                    "final segment must be read, write, delete or action");
            }
        }
    }

    if (!report.violations.empty()) return report;

    WildcardPattern pattern;
    pattern.raw = std::move(raw);
    pattern.segments = build_segments(pattern.raw);
    if (!stars.empty()) pattern.wildcard_index = stars[0];
    pattern.matcher = compile(pattern);

    report.accepted = true;
    report.pattern = std::move(pattern);
    return report;
}

Matcher compile(const WildcardPattern& p) {
    Matcher m;
    if (p.wildcard_index) {
        m.has_wildcard = true;
        m.prefix = p.raw.substr(0, *p.wildcard_index);
        m.suffix = p.raw.substr(*p.wildcard_index + 1);
    } else {
        m.prefix = p.raw;
    }
    return m;
}

} // namespace wildscope
