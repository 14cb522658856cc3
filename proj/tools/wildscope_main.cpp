// wildscope: expand Azure RBAC wildcard patterns against an action catalog,
// measure their semantic spread, and search for maximally over-broad
// placements.
//
// Results go to stdout (machine-parseable, no banners); diagnostics and
// summaries go to stderr. Exit codes: 0 success, 1 domain error (pattern
// violations, unknown actions), 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wildscope/catalog.hpp"
#include "wildscope/errors.hpp"
#include "wildscope/evolution.hpp"
#include "wildscope/expansion.hpp"
#include "wildscope/generator.hpp"
#include "wildscope/grammar.hpp"
#include "wildscope/metric.hpp"
#include "wildscope/stats.hpp"
#include "wildscope/strings.hpp"

namespace {

using namespace wildscope;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string default_catalog_path() {
    if (const char* env = std::getenv("WILDSCOPE_CATALOG")) return env;
    return "./actions.txt";
}

CatalogFormat parse_format(const std::string& name) {
    if (name == "plaintext") return CatalogFormat::Plaintext;
    if (name == "az-provider-json") return CatalogFormat::AzProviderJson;
    throw UsageError("unknown catalog format: " + name);
}

void print_violations(const std::string& shown, const ParseReport& report) {
    for (const Violation& v : report.violations) {
        std::cerr << "error: " << rule_id(v.rule) << " at offset " << v.offset << ": "
                  << v.message << '\n';
    }
    if (!report.violations.empty() && !shown.empty()) {
        std::cerr << "  " << shown << '\n';
        std::cerr << "  " << std::string(report.violations.front().offset, ' ') << "^\n";
    }
}

/// Parses a pattern argument or reports its violations and exits with a
/// domain error.
WildcardPattern require_pattern(const std::string& text, bool allow_bare) {
    ParseOptions opts;
    opts.allow_bare_wildcard = allow_bare;
    ParseReport report = parse(text, opts);
    if (!report.accepted) {
        std::string shown = to_lower_copy(trim_view(text));
        print_violations(shown, report);
        std::exit(kExitDomain);
    }
    return std::move(*report.pattern);
}

Fraction parse_fraction(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            return Fraction{std::stoll(text.substr(0, slash)),
                            std::stoll(text.substr(slash + 1))};
        }
        // decimal form, e.g. "0.5"
        std::size_t dot = text.find('.');
        if (dot == std::string::npos) return Fraction{std::stoll(text), 1};
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        long long den = 1;
        for (std::size_t i = 0; i < text.size() - dot - 1; ++i) den *= 10;
        return Fraction{std::stoll(digits), den};
    } catch (const std::exception&) {
        throw UsageError("cannot parse fraction: " + text);
    }
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string piece = comma == std::string::npos ? text.substr(pos)
                                                       : text.substr(pos, comma - pos);
        if (!trim_view(piece).empty()) out.push_back(std::string(trim_view(piece)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

struct CommonArgs {
    std::string catalog_path = default_catalog_path();
    std::string catalog_format = "plaintext";

    Catalog load() const {
        Catalog c = load_catalog_file(catalog_path, parse_format(catalog_format));
        for (const std::string& w : c.warnings()) {
            std::cerr << "catalog warning: " << w << '\n';
        }
        return c;
    }
};

void add_catalog_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--catalog", args.catalog_path,
                    "action catalog file (env WILDSCOPE_CATALOG overrides the default)")
        ->capture_default_str();
    cmd->add_option("--catalog-format", args.catalog_format,
                    "catalog format: plaintext or az-provider-json")
        ->check(CLI::IsMember({"plaintext", "az-provider-json"}))
        ->capture_default_str();
}

int run_validate(const std::string& pattern_text, bool allow_bare) {
    ParseOptions opts;
    opts.allow_bare_wildcard = allow_bare;
    ParseReport report = parse(pattern_text, opts);
    if (!report.accepted) {
        print_violations(to_lower_copy(trim_view(pattern_text)), report);
        return kExitDomain;
    }
    std::cout << report.pattern->raw << '\n';
    return kExitOk;
}

int run_expand(const CommonArgs& common, const std::string& action, bool allow_bare) {
    Catalog catalog = common.load();
    WildcardPattern pattern = require_pattern(action, allow_bare);
    MatchSet ms = expand(pattern, catalog);
    for (const ActionPath* a : ms.members) std::cout << a->raw() << '\n';
    std::cerr << ms.members.size() << " actions\n";
    return kExitOk;
}

int run_effective(const CommonArgs& common, const std::string& action,
                  const std::string& nots_csv, const std::vector<std::string>& nots_repeat,
                  const std::string& nots_file, bool allow_bare) {
    Catalog catalog = common.load();
    WildcardPattern pattern = require_pattern(action, allow_bare);

    std::vector<std::string> not_texts = split_commas(nots_csv);
    not_texts.insert(not_texts.end(), nots_repeat.begin(), nots_repeat.end());
    if (!nots_file.empty()) {
        std::ifstream in(nots_file);
        if (!in) throw UsageError("cannot open NotActions file: " + nots_file);
        std::string line;
        while (std::getline(in, line)) {
            std::string_view t = trim_view(line);
            if (!t.empty() && t.front() != '#') not_texts.push_back(std::string(t));
        }
    }

    std::vector<WildcardPattern> nots;
    nots.reserve(not_texts.size());
    for (const std::string& text : not_texts) {
        nots.push_back(require_pattern(text, allow_bare));
    }

    EffectiveSet eff = effective_set(pattern, nots, catalog);
    for (const ActionPath* a : eff.granted.members) std::cout << a->raw() << '\n';

    std::cerr << eff.granted.members.size() << " effective actions (expanded "
              << expand(pattern, catalog).members.size() << ", " << nots.size()
              << " NotActions)\n";
    for (const std::string& inert : eff.inert_not_actions) {
        std::cerr << "note: NotAction matches nothing: " << inert << '\n';
    }
    return kExitOk;
}

int run_distance(const CommonArgs& common, const std::string& left_text,
                 const std::string& right_text) {
    Catalog catalog = common.load();
    std::string left = to_lower_copy(trim_view(left_text));
    std::string right = to_lower_copy(trim_view(right_text));
    if (left == right) throw UsageError("distance requires two distinct actions");
    if (left.find('*') != std::string::npos || right.find('*') != std::string::npos) {
        throw DomainError("distance operands must be explicit actions, not patterns");
    }
    const ActionPath* u = catalog.find(left);
    const ActionPath* v = catalog.find(right);
    if (!u) throw DomainError("unknown action: " + left);
    if (!v) throw DomainError("unknown action: " + right);
    DistanceResult r = distance(*u, *v, catalog.tree());
    std::cout << r.distance;
    if (!r.lca_path.empty()) std::cout << ' ' << r.lca_path;
    std::cout << '\n';
    return kExitOk;
}

int run_diameter(const std::string& file) {
    Catalog set = load_catalog_file(file, CatalogFormat::Plaintext);
    std::vector<const ActionPath*> members;
    for (const ActionPath& a : set.actions()) members.push_back(&a);
    auto d = diameter(members);
    if (!d) {
        std::cout << "undefined\n";
        return kExitOk;
    }
    std::cout << d->value << ' ' << d->left->raw() << ' ' << d->right->raw() << '\n';
    return kExitOk;
}

int run_generate(const std::string& origin_text, std::optional<int> first,
                 std::optional<int> last, std::optional<int> count, std::uint64_t seed,
                 bool enumerate) {
    auto origin = ActionPath::from_raw(origin_text);
    if (!origin) throw DomainError("invalid origin action: " + origin_text);

    std::cout << "origin,pattern,first,last\n";
    auto emit = [&](const Candidate& cand) {
        std::cout << origin->raw() << ',' << cand.pattern.raw << ',' << cand.first << ','
                  << cand.last << '\n';
    };

    if (first.has_value() || last.has_value()) {
        if (!first.has_value() || !last.has_value()) {
            throw UsageError("--first and --last must be given together");
        }
        InsertResult r = insert_wildcard(*origin, *first, *last);
        if (!r.ok()) {
            throw DomainError(std::string("invalid span: constraint ") +
                              std::string(insert_violation_name(*r.violation)) +
                              " violated");
        }
        emit(*r.candidate);
        return kExitOk;
    }

    if (enumerate) {
        for (auto [f, l] : enumerate_valid_intervals(*origin)) {
            emit(*insert_wildcard(*origin, f, l).candidate);
        }
        return kExitOk;
    }

    Rng rng(seed);
    auto intervals = enumerate_valid_intervals(*origin);
    if (intervals.empty()) {
        throw DomainError("origin admits no valid wildcard insertion: " + origin->raw());
    }
    for (int i = 0; i < count.value_or(1); ++i) {
        emit(*random_candidate(*origin, rng, intervals));
    }
    return kExitOk;
}

struct EvolveArgs {
    CommonArgs common;
    EvolutionConfig cfg;
    std::string survivors_text = "1/2";
    std::string output;
    std::string checkpoint;
    bool resume = false;
    std::vector<std::string> origins;
};

int run_evolve(EvolveArgs& args) {
    args.cfg.survivor_fraction = parse_fraction(args.survivors_text);
    Catalog catalog = args.common.load();

    if (args.resume && args.output.empty()) {
        throw UsageError("--resume requires --output");
    }

    // origin subset: run directly, no checkpointing
    if (!args.origins.empty()) {
        std::vector<const ActionPath*> subset;
        for (const std::string& text : args.origins) {
            const ActionPath* a = catalog.find(to_lower_copy(trim_view(text)));
            if (!a) throw DomainError("unknown origin action: " + text);
            subset.push_back(a);
        }
        std::sort(subset.begin(), subset.end(),
                  [](const ActionPath* a, const ActionPath* b) { return *a < *b; });
        write_record_csv_header(std::cout);
        for (const ActionPath* origin : subset) {
            auto records = evolve_origin(*origin, args.cfg, catalog);
            write_record_csv_rows(std::cout, records);
        }
        return kExitOk;
    }

    std::set<std::string> completed;
    std::ofstream csv_out;
    std::ofstream ck_out;

    if (!args.output.empty()) {
        if (args.checkpoint.empty()) args.checkpoint = args.output + ".checkpoint";

        std::vector<ExtremePairRecord> kept;
        if (args.resume) {
            std::ifstream ck_in(args.checkpoint);
            if (ck_in) completed = read_checkpoint(ck_in);
            std::ifstream csv_in(args.output);
            if (csv_in) {
                // drop rows of origins that never reached the checkpoint
                for (ExtremePairRecord& r : read_record_csv(csv_in)) {
                    if (completed.count(r.origin)) kept.push_back(std::move(r));
                }
            } else {
                completed.clear();
            }
        }

        csv_out.open(args.output, std::ios::trunc);
        if (!csv_out) throw UsageError("cannot write output file: " + args.output);
        write_record_csv_header(csv_out);
        write_record_csv_rows(csv_out, kept);
        csv_out.flush();

        ck_out.open(args.checkpoint, std::ios::trunc);
        if (!ck_out) throw UsageError("cannot write checkpoint file: " + args.checkpoint);
        for (const std::string& raw : completed) ck_out << raw << '\n';
        ck_out.flush();
    } else {
        write_record_csv_header(std::cout);
    }

    std::size_t done = 0;
    auto sink = [&](std::size_t, const ActionPath& origin,
                    const std::vector<ExtremePairRecord>& records) {
        std::ostream& out = args.output.empty() ? std::cout : csv_out;
        write_record_csv_rows(out, records);
        if (!args.output.empty()) {
            csv_out.flush();
            append_checkpoint(ck_out, origin.raw());
            ck_out.flush();
        }
        ++done;
        if (done % 250 == 0) {
            std::cerr << "evolved " << done << " origins\n";
        }
    };
    auto diag = [](const std::string& message) {
        std::cerr << "warning: " << message << '\n';
    };

    evolve_all(args.cfg, catalog, completed, sink, diag);
    std::cerr << "evolve complete: " << done << " origins processed, " << completed.size()
              << " resumed, " << catalog.actions().size() << " total\n";
    return kExitOk;
}

int run_stats(const std::string& pairs_file, const std::string& plot_file) {
    std::ifstream in(pairs_file);
    if (!in) throw UsageError("cannot open pairs file: " + pairs_file);
    std::vector<ExtremePairRecord> records = read_record_csv(in);
    DiameterHistogram h = histogram(records);
    if (h.total == 0) throw DomainError("no records in " + pairs_file);

    emit_plot_data(h, PlotFormat::Csv, std::cout);
    Rational median = interpolated_median(h);
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", median.value());
    std::cout << "median," << buf << '\n';

    if (!plot_file.empty()) {
        std::ofstream svg(plot_file);
        if (!svg) throw UsageError("cannot write plot file: " + plot_file);
        emit_plot_data(h, PlotFormat::SvgBars, svg);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Azure RBAC wildcard expansion and spread analysis"};
    app.require_subcommand(1);

    // validate
    std::string validate_pattern;
    bool validate_allow_bare = false;
    CLI::App* validate_cmd =
        app.add_subcommand("validate", "parse a pattern and report violations");
    validate_cmd->add_option("pattern", validate_pattern, "action pattern")->required();
    validate_cmd->add_flag("--allow-bare-wildcard", validate_allow_bare,
                           "accept the pattern '*'");

    // expand
    CommonArgs expand_common;
    std::string expand_action;
    bool expand_allow_bare = false;
    CLI::App* expand_cmd =
        app.add_subcommand("expand", "list catalog actions matched by a pattern");
    add_catalog_options(expand_cmd, expand_common);
    expand_cmd->add_option("--action", expand_action, "pattern to expand")->required();
    expand_cmd->add_flag("--allow-bare-wildcard", expand_allow_bare,
                         "accept the pattern '*'");

    // effective
    CommonArgs eff_common;
    std::string eff_action;
    std::string eff_nots_csv;
    std::vector<std::string> eff_nots_repeat;
    std::string eff_nots_file;
    bool eff_allow_bare = false;
    CLI::App* eff_cmd =
        app.add_subcommand("effective", "expand an Action and subtract its NotActions");
    add_catalog_options(eff_cmd, eff_common);
    eff_cmd->add_option("--action", eff_action, "granted Action pattern")->required();
    eff_cmd->add_option("--notActions", eff_nots_csv, "comma-separated NotAction patterns");
    eff_cmd->add_option("--not-action", eff_nots_repeat,
                        "one NotAction pattern (repeatable)");
    eff_cmd->add_option("--not-actions-file", eff_nots_file,
                        "file with one NotAction pattern per line");
    eff_cmd->add_flag("--allow-bare-wildcard", eff_allow_bare, "accept the pattern '*'");

    // distance
    CommonArgs dist_common;
    std::string dist_left, dist_right;
    CLI::App* dist_cmd =
        app.add_subcommand("distance", "LCA depth between two explicit catalog actions");
    add_catalog_options(dist_cmd, dist_common);
    dist_cmd->add_option("--left", dist_left, "first action")->required();
    dist_cmd->add_option("--right", dist_right, "second action")->required();

    // diameter
    std::string diam_file;
    CLI::App* diam_cmd =
        app.add_subcommand("diameter", "minimum pairwise distance over a list of actions");
    diam_cmd->add_option("--file", diam_file, "file with one explicit action per line")
        ->required();

    // generate
    std::string gen_origin;
    std::optional<int> gen_first, gen_last, gen_count;
    std::uint64_t gen_seed = 1;
    bool gen_enumerate = false;
    CLI::App* gen_cmd =
        app.add_subcommand("generate", "derive wildcard candidates from an origin action");
    gen_cmd->add_option("--origin", gen_origin, "explicit origin action")->required();
    gen_cmd->add_option("--first", gen_first, "span start (inclusive)");
    gen_cmd->add_option("--last", gen_last, "span end (inclusive)");
    gen_cmd->add_option("--count", gen_count, "number of random candidates");
    gen_cmd->add_option("--seed", gen_seed, "random seed")->capture_default_str();
    gen_cmd->add_flag("--enumerate", gen_enumerate, "list every valid span");

    // evolve
    EvolveArgs evolve_args;
    CLI::App* evolve_cmd = app.add_subcommand(
        "evolve", "evolutionary search for extreme wildcard placements per origin");
    add_catalog_options(evolve_cmd, evolve_args.common);
    evolve_cmd->add_option("--seed", evolve_args.cfg.master_seed, "master seed")
        ->capture_default_str();
    evolve_cmd
        ->add_option("--population", evolve_args.cfg.population_size,
                     "candidates per origin")
        ->capture_default_str();
    evolve_cmd
        ->add_option("--generations", evolve_args.cfg.generations, "generations to run")
        ->capture_default_str();
    evolve_cmd
        ->add_option("--survivors", evolve_args.survivors_text,
                     "surviving fraction per generation, e.g. 1/2 or 0.5")
        ->capture_default_str();
    evolve_cmd
        ->add_option("--mutation-offset", evolve_args.cfg.mutation_max_offset,
                     "largest span shift per mutation")
        ->capture_default_str();
    evolve_cmd->add_option("--jobs", evolve_args.cfg.jobs, "worker threads")
        ->capture_default_str();
    evolve_cmd->add_option("--output", evolve_args.output,
                           "write records CSV here instead of stdout");
    evolve_cmd->add_option("--checkpoint", evolve_args.checkpoint,
                           "checkpoint path (default: <output>.checkpoint)");
    evolve_cmd->add_flag("--resume", evolve_args.resume,
                         "continue a previous run from its checkpoint");
    evolve_cmd->add_option("--origin", evolve_args.origins,
                           "restrict the search to these origins (repeatable)");

    // stats
    std::string stats_pairs, stats_plot;
    CLI::App* stats_cmd =
        app.add_subcommand("stats", "diameter distribution and interpolated median");
    stats_cmd->add_option("--pairs", stats_pairs, "records CSV from evolve")->required();
    stats_cmd->add_option("--plot", stats_plot, "write an SVG bar chart here");

    try {
        app.parse(argc, argv);

        if (validate_cmd->parsed()) return run_validate(validate_pattern, validate_allow_bare);
        if (expand_cmd->parsed()) {
            return run_expand(expand_common, expand_action, expand_allow_bare);
        }
        if (eff_cmd->parsed()) {
            return run_effective(eff_common, eff_action, eff_nots_csv, eff_nots_repeat,
                                 eff_nots_file, eff_allow_bare);
        }
        if (dist_cmd->parsed()) return run_distance(dist_common, dist_left, dist_right);
        if (diam_cmd->parsed()) return run_diameter(diam_file);
        if (gen_cmd->parsed()) {
            return run_generate(gen_origin, gen_first, gen_last, gen_count, gen_seed,
                                gen_enumerate);
        }
        if (evolve_cmd->parsed()) return run_evolve(evolve_args);
        if (stats_cmd->parsed()) return run_stats(stats_pairs, stats_plot);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CatalogError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
