#pragma once

// Lexer, parser and matcher compiler for action pattern strings.
//
// A pattern is a slash-separated list of segments over the TEXT alphabet
// (letters, digits, '.', '-', '_', '$', '{', '}') with at most one '*'.
// The wildcard matches any character run, crossing segment boundaries, so
// a valid pattern always reduces to an anchored <prefix>*<suffix> form.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wildscope {

enum class TokenKind { Text, Wildcard, Slash };

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t start; // 0-based char offset into the lexed string
    std::size_t end;   // exclusive
};

struct LexIssue {
    std::size_t offset;
    char ch;
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<LexIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// True for characters the TEXT token accepts.
bool is_text_char(char c);

/// Tokenizes input. Whitespace is skipped; every other character belongs to
/// exactly one token. Illegal characters are reported with their offset and
/// skipped, so lexing is total.
LexResult lex(std::string_view input);

enum class Rule {
    MultiWildcard,
    WildcardInVerb,
    BadVerb,
    BareWildcard,
    TrailingSlash,
    IllegalChar,
    EmptySegment,
};

/// Stable identifier, e.g. "E_MULTI_WILDCARD".
std::string_view rule_id(Rule r);

struct Violation {
    Rule rule;
    std::size_t offset; // into the normalized (trimmed, lowercased) pattern
    std::string message;
};

enum class SegmentShape { Text, Star, TextStar, StarText, TextStarText };

struct PatternSegment {
    SegmentShape shape;
    std::string head; // literal before the star, or the whole text segment
    std::string tail; // literal after the star
};

/// Anchored full-string matcher. All characters are literal; the single
/// wildcard matches any run of characters, slashes and dots included.
struct Matcher {
    bool has_wildcard = false;
    std::string prefix; // whole pattern when explicit
    std::string suffix;

    bool matches(std::string_view s) const {
        if (!has_wildcard) return s == prefix;
        if (s.size() < prefix.size() + suffix.size()) return false;
        return s.substr(0, prefix.size()) == prefix &&
               s.substr(s.size() - suffix.size()) == suffix;
    }
};

struct WildcardPattern {
    std::string raw;                      // trimmed, lowercased
    std::vector<PatternSegment> segments; // slash-delimited shapes
    std::optional<std::size_t> wildcard_index; // offset of '*' in raw
    Matcher matcher;

    bool is_explicit() const { return !wildcard_index.has_value(); }
};

struct ParseOptions {
    // "*" (every operation) is rejected by default; real role definitions
    // use it, so callers may opt in.
    bool allow_bare_wildcard = false;
};

struct ParseReport {
    bool accepted = false;
    std::optional<WildcardPattern> pattern;
    std::vector<Violation> violations;
};

/// Normalizes (trim + lowercase), lexes and parses a pattern, collecting
/// every rule violation instead of stopping at the first.
ParseReport parse(std::string_view input, const ParseOptions& opts = {});

/// Builds the anchored matcher for a successfully parsed pattern.
Matcher compile(const WildcardPattern& p);

} // namespace wildscope
