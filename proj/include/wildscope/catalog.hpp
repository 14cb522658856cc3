#pragma once

// Ingestion of the explicit-action universe: normalization, validation,
// deduplication and indexing, plus the hierarchy tree shared by all
// downstream analyses.

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wildscope/action_path.hpp"
#include "wildscope/metric.hpp"

namespace wildscope {

enum class CatalogFormat {
    Plaintext,      // one action per line, '#' comments and blank lines ignored
    AzProviderJson, // provider-operations JSON: "name" under any "operations" array
};

struct CatalogSummary {
    std::size_t total = 0;
    std::size_t providers = 0; // distinct first slash-segments
    std::map<std::string, std::size_t> verb_histogram;
    std::size_t max_depth = 0;
};

/// Immutable, deduplicated, lexicographically sorted action universe.
/// Safe to share read-only across threads after loading.
class Catalog {
public:
    const std::vector<ActionPath>& actions() const { return actions_; }
    const HierarchyTree& tree() const { return *tree_; }
    const std::string& source_digest() const { return digest_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    /// Binary search by normalized raw string.
    const ActionPath* find(std::string_view raw) const;

    /// Index range [first, last) of actions whose raw starts with prefix.
    std::pair<std::size_t, std::size_t> prefix_range(std::string_view prefix) const;

    std::size_t max_raw_length() const;

private:
    friend Catalog load_catalog(std::istream&, CatalogFormat);

    std::vector<ActionPath> actions_;
    std::unique_ptr<HierarchyTree> tree_; // stable address; views actions_
    std::string digest_;
    std::vector<std::string> warnings_;
};

/// Loads and normalizes a catalog. Entries are lowercased, trimmed and
/// deduplicated; entries with an unknown final verb are kept with a
/// warning; entries containing '*' or failing to parse are excluded with a
/// warning. Throws CatalogError on unreadable input, malformed JSON, or an
/// empty result.
Catalog load_catalog(std::istream& in, CatalogFormat format);

Catalog load_catalog_file(const std::string& path, CatalogFormat format);

/// Writes the normalized action list, one per line (the canonical
/// interchange form: load(serialize(c)) reproduces c exactly).
void serialize(const Catalog& c, std::ostream& out);

CatalogSummary catalog_stats(const Catalog& c);

} // namespace wildscope
