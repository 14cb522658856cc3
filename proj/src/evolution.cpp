#include "wildscope/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "wildscope/errors.hpp"
#include "wildscope/expansion.hpp"
#include "wildscope/strings.hpp"

namespace wildscope {

namespace {

void validate_config(const EvolutionConfig& cfg, const Catalog& c) {
    if (cfg.population_size < 2) throw DomainError("population size must be at least 2");
    if (cfg.generations < 0) throw DomainError("generations must be non-negative");
    if (cfg.survivor_fraction.num <= 0 || cfg.survivor_fraction.den <= 0 ||
        cfg.survivor_fraction.num >= cfg.survivor_fraction.den) {
        throw DomainError("survivor fraction must be strictly between 0 and 1");
    }
    if (cfg.mutation_max_offset < 1) throw DomainError("mutation offset bound must be >= 1");
    if (static_cast<long long>(c.max_raw_length()) >= cfg.fitness_weight) {
        throw DomainError(
            "fitness weight must exceed the longest catalog action, or diameter "
            "and position contributions would mix");
    }
}

} // namespace

std::optional<FitnessScore> evaluate(const Candidate& cand, const Catalog& c,
                                     long long fitness_weight) {
    MatchSet ms = expand(cand.pattern, c);
    if (ms.members.size() < 2) return std::nullopt;

    auto diam = diameter(ms.members);
    FitnessScore score;
    score.diameter = diam->value;
    score.wildcard_pos = static_cast<int>(*cand.pattern.wildcard_index);
    score.value = fitness_weight * score.diameter - score.wildcard_pos;
    score.expansion_size = static_cast<int>(ms.members.size());
    score.witness_left = diam->left;
    score.witness_right = diam->right;
    return score;
}

bool rank_less(const Individual& a, const Individual& b) {
    if (a.fitness.has_value() != b.fitness.has_value()) return a.fitness.has_value();
    if (a.fitness && b.fitness && a.fitness->value != b.fitness->value) {
        return a.fitness->value < b.fitness->value;
    }
    return a.candidate.pattern.raw < b.candidate.pattern.raw;
}

Population step_generation(const Population& pop, const EvolutionConfig& cfg,
                           const Catalog& c, Rng& rng, int generation) {
    Population ranked = pop;
    std::stable_sort(ranked.begin(), ranked.end(), rank_less);

    const auto survivor_count = static_cast<std::size_t>(
        cfg.survivor_fraction.ceil_of(static_cast<long long>(ranked.size())));
    Population next(ranked.begin(), ranked.begin() + static_cast<long>(survivor_count));

    while (next.size() < static_cast<std::size_t>(cfg.population_size)) {
        const std::size_t parent_idx = rng.below(survivor_count);
        bool mutated = false;
        for (int attempt = 0; attempt < 20 && !mutated; ++attempt) {
            bool mutate_first = rng.coin();
            int delta = static_cast<int>(rng.nonzero_offset(cfg.mutation_max_offset));
            const Candidate& pc = next[parent_idx].candidate;
            int first = pc.first + (mutate_first ? delta : 0);
            int last = pc.last + (mutate_first ? 0 : delta);
            InsertResult r = insert_wildcard(*pc.origin, first, last);
            if (!r.ok()) continue;
            Individual child;
            child.candidate = std::move(*r.candidate);
            child.fitness = evaluate(child.candidate, c, cfg.fitness_weight);
            child.born_generation = generation;
            next.push_back(std::move(child));
            mutated = true;
        }
        if (!mutated) next.push_back(Individual(next[parent_idx]));
    }
    return next;
}

std::vector<ExtremePairRecord> evolve_origin(const ActionPath& origin,
                                             const EvolutionConfig& cfg, const Catalog& c,
                                             const GenerationObserver& observer) {
    Rng rng(derive_seed(cfg.master_seed, origin.raw()));

    std::vector<std::pair<int, int>> intervals = enumerate_valid_intervals(origin);
    if (intervals.empty()) return {};

    Population pop;
    pop.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
        Individual ind;
        ind.candidate = *random_candidate(origin, rng, intervals);
        ind.fitness = evaluate(ind.candidate, c, cfg.fitness_weight);
        ind.born_generation = 0;
        pop.push_back(std::move(ind));
    }
    if (observer) observer(0, pop);

    for (int g = 1; g <= cfg.generations; ++g) {
        pop = step_generation(pop, cfg, c, rng, g);
        if (observer) observer(g, pop);
    }

    std::optional<long long> best;
    for (const Individual& ind : pop) {
        if (ind.fitness && (!best || ind.fitness->value < *best)) best = ind.fitness->value;
    }
    if (!best) return {};

    // All candidates tied at the best value, one record per distinct
    // pattern, keeping the earliest generation it appeared in.
    std::map<std::string, const Individual*> winners;
    for (const Individual& ind : pop) {
        if (!ind.fitness || ind.fitness->value != *best) continue;
        auto [it, inserted] = winners.emplace(ind.candidate.pattern.raw, &ind);
        if (!inserted && ind.born_generation < it->second->born_generation) {
            it->second = &ind;
        }
    }

    std::vector<ExtremePairRecord> records;
    records.reserve(winners.size());
    for (const auto& [pattern_raw, ind] : winners) {
        ExtremePairRecord rec;
        rec.pattern = pattern_raw;
        rec.left = ind->fitness->witness_left->raw();
        rec.right = ind->fitness->witness_right->raw();
        rec.diameter = ind->fitness->diameter;
        rec.origin = origin.raw();
        rec.generation_found = ind->born_generation;
        records.push_back(std::move(rec));
    }
    return records;
}

void evolve_all(const EvolutionConfig& cfg, const Catalog& c,
                const std::set<std::string>& completed, const RecordSink& sink,
                const Diagnostic& diag) {
    validate_config(cfg, c);
    const auto& actions = c.actions();
    const std::size_t n = actions.size();

    auto run_one = [&](std::size_t i) -> std::vector<ExtremePairRecord> {
        try {
            return evolve_origin(actions[i], cfg, c);
        } catch (const std::exception& e) {
            if (diag) diag("origin '" + actions[i].raw() + "' failed: " + e.what());
            return {};
        }
    };

    if (cfg.jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            if (completed.count(actions[i].raw())) continue;
            sink(i, actions[i], run_one(i));
        }
        return;
    }

    struct Slot {
        bool ready = false;
        std::vector<ExtremePairRecord> records;
    };
    std::vector<Slot> slots(n);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            std::vector<ExtremePairRecord> records;
            if (!completed.count(actions[i].raw())) {
                records = run_one(i);
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                slots[i].records = std::move(records);
                slots[i].ready = true;
            }
            cv.notify_all();
        }
    };

    std::vector<std::thread> threads;
    const int thread_count = std::min<int>(cfg.jobs, static_cast<int>(n));
    threads.reserve(static_cast<std::size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);

    for (std::size_t i = 0; i < n; ++i) {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return slots[i].ready; });
        std::vector<ExtremePairRecord> records = std::move(slots[i].records);
        lock.unlock();
        if (!completed.count(actions[i].raw())) {
            sink(i, actions[i], records);
        }
    }
    for (std::thread& t : threads) t.join();
}

void write_record_csv_header(std::ostream& out) { out << kRecordCsvHeader << '\n'; }

void write_record_csv_rows(std::ostream& out, std::span<const ExtremePairRecord> records) {
    for (const ExtremePairRecord& r : records) {
        out << r.pattern << ',' << r.left << ',' << r.right << ',' << r.diameter << ','
            << r.origin << ',' << r.generation_found << '\n';
    }
}

std::vector<ExtremePairRecord> read_record_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || trim_view(line) != kRecordCsvHeader) {
        throw DomainError("record CSV must start with header: " +
                          std::string(kRecordCsvHeader));
    }
    std::vector<ExtremePairRecord> out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view t = trim_view(line);
        if (t.empty()) continue;
        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = t.find(',', pos);
            if (comma == std::string_view::npos) {
                fields.emplace_back(t.substr(pos));
                break;
            }
            fields.emplace_back(t.substr(pos, comma - pos));
            pos = comma + 1;
        }
        if (fields.size() != 6) {
            throw DomainError("record CSV line " + std::to_string(lineno) +
                              ": expected 6 fields");
        }
        ExtremePairRecord rec;
        rec.pattern = fields[0];
        rec.left = fields[1];
        rec.right = fields[2];
        try {
            rec.diameter = std::stoi(fields[3]);
            rec.generation_found = std::stoi(fields[5]);
        } catch (const std::exception&) {
            throw DomainError("record CSV line " + std::to_string(lineno) +
                              ": malformed integer field");
        }
        rec.origin = fields[4];
        out.push_back(std::move(rec));
    }
    return out;
}

std::set<std::string> read_checkpoint(std::istream& in) {
    std::set<std::string> done;
    std::string line;
    while (std::getline(in, line)) {
        std::string_view t = trim_view(line);
        if (!t.empty()) done.insert(std::string(t));
    }
    return done;
}

void append_checkpoint(std::ostream& out, const std::string& origin_raw) {
    out << origin_raw << '\n';
}

} // namespace wildscope
