#include "wildscope/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wildscope/errors.hpp"
#include "wildscope/grammar.hpp"
#include "wildscope/rng.hpp"
#include "wildscope/strings.hpp"

namespace wildscope {

namespace {

struct SourceEntry {
    std::string text;  // as read, surrounding whitespace trimmed
    std::string where; // "line 12" or "entry 34"
};

std::vector<SourceEntry> read_plaintext(std::istream& in) {
    std::vector<SourceEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view t = trim_view(line);
        if (t.empty() || t.front() == '#') continue;
        entries.push_back({std::string(t), "line " + std::to_string(lineno)});
    }
    if (in.bad()) throw CatalogError("failed reading catalog source");
    return entries;
}

// Harvests "name" fields from every object inside any "operations" array,
// anywhere in the document. Data-plane operations (isDataAction: true) are
// skipped: this catalog models the control plane only.
void walk_json(const nlohmann::json& node, std::vector<SourceEntry>& out) {
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (key == "operations" && value.is_array()) {
                for (const auto& op : value) {
                    if (!op.is_object() || !op.contains("name") || !op["name"].is_string()) {
                        continue;
                    }
                    if (op.contains("isDataAction") && op["isDataAction"].is_boolean() &&
                        op["isDataAction"].get<bool>()) {
                        continue;
                    }
                    std::string name = op["name"].get<std::string>();
                    std::string_view t = trim_view(name);
                    if (!t.empty()) {
                        out.push_back(
                            {std::string(t), "entry " + std::to_string(out.size() + 1)});
                    }
                }
            }
            walk_json(value, out);
        }
    } else if (node.is_array()) {
        for (const auto& item : node) walk_json(item, out);
    }
}

std::vector<SourceEntry> read_az_provider_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CatalogError(std::string("malformed provider-operations JSON: ") + e.what());
    }
    std::vector<SourceEntry> entries;
    walk_json(doc, entries);
    return entries;
}

} // namespace

Catalog load_catalog(std::istream& in, CatalogFormat format) {
    if (!in) throw CatalogError("unreadable catalog source");

    std::vector<SourceEntry> entries = format == CatalogFormat::Plaintext
                                           ? read_plaintext(in)
                                           : read_az_provider_json(in);

    Catalog catalog;
    std::vector<std::string> raws;
    raws.reserve(entries.size());

    for (const SourceEntry& entry : entries) {
        std::string lowered = to_lower_copy(entry.text);

        if (lowered.find('*') != std::string::npos) {
            catalog.warnings_.push_back(entry.where + ": wildcard in catalog entry '" +
                                        lowered + "'");
            continue;
        }

        ParseReport report = parse(lowered);
        bool unknown_verb = false;
        bool rejected = false;
        std::string reject_ids;
        for (const Violation& v : report.violations) {
            if (v.rule == Rule::BadVerb) {
                unknown_verb = true;
            } else {
                rejected = true;
                if (!reject_ids.empty()) reject_ids += ", ";
                reject_ids += rule_id(v.rule);
            }
        }
        if (rejected) {
            catalog.warnings_.push_back(entry.where + ": rejected (" + reject_ids + ") '" +
                                        lowered + "'");
            continue;
        }

        std::string path_error;
        auto path = ActionPath::from_raw(lowered, &path_error);
        if (!path) {
            catalog.warnings_.push_back(entry.where + ": rejected (" + path_error + ") '" +
                                        lowered + "'");
            continue;
        }

        if (unknown_verb) {
            catalog.warnings_.push_back(entry.where + ": unknown verb '" +
                                        std::string(path->verb()) + "' kept '" + lowered + "'");
        }
        raws.push_back(std::move(lowered));
    }

    std::sort(raws.begin(), raws.end());
    std::vector<std::string> unique_raws;
    unique_raws.reserve(raws.size());
    for (std::string& r : raws) {
        if (!unique_raws.empty() && unique_raws.back() == r) {
            catalog.warnings_.push_back("duplicate action '" + r + "'");
            continue;
        }
        unique_raws.push_back(std::move(r));
    }

    if (unique_raws.empty()) {
        throw CatalogError("catalog is empty after filtering");
    }

    std::string joined;
    for (const std::string& r : unique_raws) {
        joined += r;
        joined += '\n';
    }
    std::uint64_t digest = fnv1a64(joined);
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << digest;
    catalog.digest_ = hex.str();

    catalog.actions_.reserve(unique_raws.size());
    for (const std::string& r : unique_raws) {
        catalog.actions_.push_back(*ActionPath::from_raw(r));
    }

    catalog.tree_ = std::make_unique<HierarchyTree>(
        HierarchyTree::build(std::span<const ActionPath>(catalog.actions_)));
    return catalog;
}

Catalog load_catalog_file(const std::string& path, CatalogFormat format) {
    std::ifstream in(path);
    if (!in) throw CatalogError("cannot open catalog file: " + path);
    return load_catalog(in, format);
}

const ActionPath* Catalog::find(std::string_view raw) const {
    auto it = std::lower_bound(actions_.begin(), actions_.end(), raw,
                               [](const ActionPath& a, std::string_view r) {
                                   return a.raw() < r;
                               });
    if (it == actions_.end() || it->raw() != raw) return nullptr;
    return &*it;
}

std::pair<std::size_t, std::size_t> Catalog::prefix_range(std::string_view prefix) const {
    if (prefix.empty()) return {0, actions_.size()};
    auto lo = std::lower_bound(actions_.begin(), actions_.end(), prefix,
                               [](const ActionPath& a, std::string_view p) {
                                   return std::string_view(a.raw()) < p;
                               });
    std::string hi_key(prefix);
    hi_key.back() = static_cast<char>(hi_key.back() + 1);
    auto hi = std::lower_bound(lo, actions_.end(), std::string_view(hi_key),
                               [](const ActionPath& a, std::string_view p) {
                                   return std::string_view(a.raw()) < p;
                               });
    return {static_cast<std::size_t>(lo - actions_.begin()),
            static_cast<std::size_t>(hi - actions_.begin())};
}

std::size_t Catalog::max_raw_length() const {
    std::size_t m = 0;
    for (const ActionPath& a : actions_) m = std::max(m, a.raw().size());
    return m;
}

void serialize(const Catalog& c, std::ostream& out) {
    for (const ActionPath& a : c.actions()) {
        out << a.raw() << '\n';
    }
}

CatalogSummary catalog_stats(const Catalog& c) {
    CatalogSummary s;
    s.total = c.actions().size();
    std::vector<std::string_view> providers;
    for (const ActionPath& a : c.actions()) {
        providers.push_back(a.provider());
        ++s.verb_histogram[std::string(a.verb())];
        s.max_depth = std::max(s.max_depth, a.depth());
    }
    std::sort(providers.begin(), providers.end());
    s.providers = static_cast<std::size_t>(
        std::unique(providers.begin(), providers.end()) - providers.begin());
    return s;
}

} // namespace wildscope
