#pragma once

// Per-origin evolutionary search for maximally over-broad wildcard
// placements. Populations of candidates are ranked by the scalar fitness
// weight * diameter - wildcard_position (minimized), the top fraction
// survives each generation, and offspring mutate one end of the replaced
// span. Runs are reproducible: every origin draws from its own generator
// seeded from (master_seed, origin), so scheduling and parallelism never
// change the output.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wildscope/catalog.hpp"
#include "wildscope/generator.hpp"
#include "wildscope/rng.hpp"

namespace wildscope {

struct Fraction {
    long long num = 1;
    long long den = 2;

    /// ceil(num * n / den) in exact integer arithmetic.
    long long ceil_of(long long n) const { return (num * n + den - 1) / den; }
};

struct EvolutionConfig {
    int population_size = 40;
    int generations = 10;
    Fraction survivor_fraction{1, 2};
    int mutation_max_offset = 4;
    std::uint64_t master_seed = 1;
    long long fitness_weight = 1000; // must exceed the longest action
    int jobs = 1;
};

struct FitnessScore {
    int diameter = 0;
    int wildcard_pos = 0;       // offset of '*' in the pattern string
    long long value = 0;        // fitness_weight * diameter - wildcard_pos
    int expansion_size = 0;
    const ActionPath* witness_left = nullptr;
    const ActionPath* witness_right = nullptr;
};

/// A population member. Candidates whose expansion has fewer than two
/// members carry no fitness and rank behind every scored one.
struct Individual {
    Candidate candidate;
    std::optional<FitnessScore> fitness;
    int born_generation = 0;
};

using Population = std::vector<Individual>;

struct ExtremePairRecord {
    std::string pattern;
    std::string left;
    std::string right;
    int diameter = 0;
    std::string origin;
    int generation_found = 0;
};

/// Expands the candidate over the catalog and scores it. nullopt (unfit)
/// when the expansion has fewer than two members.
std::optional<FitnessScore> evaluate(const Candidate& cand, const Catalog& c,
                                     long long fitness_weight);

/// Ranking predicate: scored before unfit, then ascending fitness value,
/// ties broken by pattern string.
bool rank_less(const Individual& a, const Individual& b);

/// One selection + reproduction step. Survivors are retained unmodified
/// (their fitness is cached); offspring clone a uniformly chosen survivor
/// and shift one end of its span by a nonzero offset, re-mutating up to 20
/// times before keeping the unmutated clone.
Population step_generation(const Population& pop, const EvolutionConfig& cfg,
                           const Catalog& c, Rng& rng, int generation);

using GenerationObserver = std::function<void(int generation, const Population& pop)>;

/// Runs the full search for one origin and returns records for every
/// candidate tied at the best fitness value (deduplicated by pattern,
/// sorted by pattern). Empty when the origin admits no valid insertion or
/// no candidate ever matched two actions.
std::vector<ExtremePairRecord> evolve_origin(const ActionPath& origin,
                                             const EvolutionConfig& cfg, const Catalog& c,
                                             const GenerationObserver& observer = {});

using RecordSink = std::function<void(std::size_t origin_index, const ActionPath& origin,
                                      const std::vector<ExtremePairRecord>& records)>;
using Diagnostic = std::function<void(const std::string& message)>;

/// Maps evolve_origin over every catalog action, fanning out across
/// cfg.jobs threads. The sink runs on the calling thread in catalog order,
/// skipping origins named in `completed`. Per-origin failures go to diag
/// and do not stop the run.
void evolve_all(const EvolutionConfig& cfg, const Catalog& c,
                const std::set<std::string>& completed, const RecordSink& sink,
                const Diagnostic& diag = {});

// --- record CSV and checkpoint formats ---

inline constexpr std::string_view kRecordCsvHeader =
    "pattern,left,right,diameter,origin,generation_found";

void write_record_csv_header(std::ostream& out);
void write_record_csv_rows(std::ostream& out, std::span<const ExtremePairRecord> records);

/// Parses a record CSV (header required). Throws DomainError on shape
/// errors.
std::vector<ExtremePairRecord> read_record_csv(std::istream& in);

/// Checkpoint: completed origin raw strings, one per line.
std::set<std::string> read_checkpoint(std::istream& in);
void append_checkpoint(std::ostream& out, const std::string& origin_raw);

} // namespace wildscope
