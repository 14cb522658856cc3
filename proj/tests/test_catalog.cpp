#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "test_support.hpp"
#include "wildscope/catalog.hpp"
#include "wildscope/errors.hpp"
#include "wildscope/grammar.hpp"
#include "wildscope/rng.hpp"
#include "wildscope/strings.hpp"

using namespace wildscope;
using testsupport::catalog_from_lines;

TEST_CASE("loading lowercases and deduplicates case-insensitively") {
    Catalog c = catalog_from_lines(
        "Microsoft.AAD/register/action\n"
        "microsoft.aad/REGISTER/action\n");
    REQUIRE(c.actions().size() == 1);
    CHECK(c.actions()[0].raw() == "microsoft.aad/register/action");
    REQUIRE(c.warnings().size() == 1);
    CHECK(c.warnings()[0].find("duplicate") != std::string::npos);
}

TEST_CASE("segments split on both slash and dot") {
    Catalog c = catalog_from_lines("Microsoft.AAD/domainServices/oucontainer/write\n");
    const ActionPath& a = c.actions()[0];
    REQUIRE(a.depth() == 5);
    CHECK(a.segment(0) == "microsoft");
    CHECK(a.segment(1) == "aad");
    CHECK(a.segment(2) == "domainservices");
    CHECK(a.segment(3) == "oucontainer");
    CHECK(a.segment(4) == "write");
    CHECK(a.verb() == "write");
    CHECK(a.provider() == "microsoft.aad");
}

TEST_CASE("wildcard entries are excluded with a warning") {
    Catalog c = catalog_from_lines(
        "Microsoft.Compute/virtualMachines/*\n"
        "Microsoft.Compute/virtualMachines/start/action\n");
    REQUIRE(c.actions().size() == 1);
    REQUIRE(c.warnings().size() == 1);
    CHECK(c.warnings()[0].find("wildcard in catalog entry") != std::string::npos);
}

TEST_CASE("unknown verbs are kept with a warning") {
    Catalog c = catalog_from_lines("Microsoft.Compute/virtualMachines/hibernate\n");
    REQUIRE(c.actions().size() == 1);
    CHECK(c.actions()[0].verb() == "hibernate");
    REQUIRE(c.warnings().size() == 1);
    CHECK(c.warnings()[0].find("unknown verb") != std::string::npos);
}

TEST_CASE("doubled separators are rejected with a warning") {
    Catalog c = catalog_from_lines(
        "Microsoft..AAD/register/action\n"
        "Microsoft.AAD//register/action\n"
        "Microsoft.AAD/register/action\n");
    REQUIRE(c.actions().size() == 1);
    CHECK(c.warnings().size() == 2);
}

TEST_CASE("comments and blank lines are ignored") {
    Catalog c = catalog_from_lines(
        "# a comment\n"
        "\n"
        "   \n"
        "Microsoft.AAD/register/action\n");
    CHECK(c.actions().size() == 1);
    CHECK(c.warnings().empty());
}

TEST_CASE("empty catalog is an error") {
    std::istringstream in("# only comments\n");
    CHECK_THROWS_AS(load_catalog(in, CatalogFormat::Plaintext), CatalogError);
}

TEST_CASE("provider-operations JSON harvests names under any operations array") {
    std::istringstream in(R"([
      {
        "displayName": "Example provider",
        "operations": [
          {"name": "Microsoft.AAD/register/action", "isDataAction": false},
          {"name": "Microsoft.AAD/unregister/action"}
        ],
        "resourceTypes": [
          {
            "name": "domainServices",
            "operations": [
              {"name": "Microsoft.AAD/domainServices/write"},
              {"name": "Microsoft.AAD/domainServices/blobs/read", "isDataAction": true}
            ]
          }
        ]
      }
    ])");
    Catalog c = load_catalog(in, CatalogFormat::AzProviderJson);
    REQUIRE(c.actions().size() == 3);
    CHECK(c.find("microsoft.aad/domainservices/write") != nullptr);
    // data-plane operation skipped
    CHECK(c.find("microsoft.aad/domainservices/blobs/read") == nullptr);
}

TEST_CASE("malformed JSON is an error") {
    std::istringstream in("{not json");
    CHECK_THROWS_AS(load_catalog(in, CatalogFormat::AzProviderJson), CatalogError);
}

TEST_CASE("serialize then load reproduces the catalog exactly") {
    Catalog original = testsupport::load_sample_catalog();
    std::ostringstream out;
    serialize(original, out);
    std::istringstream in(out.str());
    Catalog reloaded = load_catalog(in, CatalogFormat::Plaintext);

    REQUIRE(reloaded.actions().size() == original.actions().size());
    for (std::size_t i = 0; i < original.actions().size(); ++i) {
        CHECK(reloaded.actions()[i].raw() == original.actions()[i].raw());
    }
    CHECK(reloaded.source_digest() == original.source_digest());
    CHECK(reloaded.warnings().empty());
}

TEST_CASE("actions are normalized, sorted and unique") {
    Catalog c = testsupport::load_sample_catalog();
    CHECK(c.warnings().empty());
    for (std::size_t i = 0; i < c.actions().size(); ++i) {
        const std::string& raw = c.actions()[i].raw();
        CHECK(raw == to_lower_copy(raw));
        if (i > 0) CHECK(c.actions()[i - 1].raw() < raw);
    }
}

TEST_CASE("every segment rejoin reproduces the raw string") {
    Catalog c = testsupport::load_sample_catalog();
    for (const ActionPath& a : c.actions()) {
        std::string rebuilt(a.segment(0));
        for (std::size_t i = 1; i < a.depth(); ++i) {
            rebuilt += a.separator_before(i);
            rebuilt += a.segment(i);
        }
        CHECK(rebuilt == a.raw());
    }
}

TEST_CASE("every catalog action parses with zero violations and no wildcard") {
    Catalog c = testsupport::load_sample_catalog();
    for (const ActionPath& a : c.actions()) {
        ParseReport r = parse(a.raw());
        CHECK(r.accepted);
        CHECK(r.pattern->is_explicit());
    }
}

TEST_CASE("catalog_stats summarizes the universe") {
    Catalog aad = catalog_from_lines(
        "Microsoft.AAD/domainServices/oucontainer/write\n"
        "Microsoft.AAD/domainServices/write\n"
        "Microsoft.AAD/register/action\n"
        "Microsoft.AAD/domainServices/providers/Microsoft.Insights/diagnosticSettings/write\n"
        "Microsoft.AAD/unregister/action\n");
    CatalogSummary s = catalog_stats(aad);
    CHECK(s.total == 5);
    CHECK(s.providers == 1);
    CHECK(s.verb_histogram.at("write") == 3);
    CHECK(s.verb_histogram.at("action") == 2);
    CHECK(s.max_depth == 8);

    Catalog single = catalog_from_lines("Microsoft.AAD/register/action\n");
    CHECK(catalog_stats(single).total == 1);
}

TEST_CASE("find and prefix_range agree with linear scans") {
    Catalog c = testsupport::load_sample_catalog();
    CHECK(c.find("microsoft.aad/register/action") != nullptr);
    CHECK(c.find("microsoft.aad/missing/read") == nullptr);

    Rng rng(99);
    const auto& actions = c.actions();
    for (int iter = 0; iter < 200; ++iter) {
        const std::string& base = actions[rng.below(actions.size())].raw();
        std::string prefix = base.substr(0, rng.below(base.size() + 1));
        auto [lo, hi] = c.prefix_range(prefix);
        for (std::size_t i = 0; i < actions.size(); ++i) {
            bool starts = actions[i].raw().compare(0, prefix.size(), prefix) == 0;
            bool inside = i >= lo && i < hi;
            CHECK(starts == inside);
        }
    }
}
