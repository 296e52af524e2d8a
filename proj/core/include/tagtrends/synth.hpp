#pragma once

#include "tagtrends/corpus.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tagtrends {

struct DecaySpec {
    enum class Kind { None, Vanish, Exponential, Polynomial, Dip };
    Kind kind = Kind::None;
    double vanish_years = 0; // Vanish: years from peak to zero
    double rate = 0;         // Exponential: lambda; Polynomial: alpha
    // Dip: drop to dip_rate for dip_years, then rebound to rebound_rate.
    double dip_rate = 0;
    int dip_years = 0;
    double rebound_rate = 0;
};

struct PlantedTrendSpec {
    std::string tag;
    double base_rate = 0.05;
    int rise_start = 0;   // first year of the linear rise (0 = no rise)
    int rise_years = 0;
    double peak_rate = 0.05;
    DecaySpec decay;
    double hp_fraction = 0.5; // target share of assignments in the hp rank band
};

struct SynthConfig {
    int year_min = 2012;
    int year_max = 2024;
    std::map<int, long> games_per_year; // empty: geometric growth default
    std::uint64_t seed = 1;
};

// Tag assignment probability for the spec in a given year.
double planted_rate(const PlantedTrendSpec& spec, int year);

struct SynthCorpus {
    std::vector<GameRecord> games;
    std::vector<PlantedTrendSpec> ground_truth;
};

// Each game independently carries each planted tag with its year rate; rank
// placement routes roughly hp_fraction of a tag's assignments into the rank
// band that compute_priority maps to priority >= 0.6 (band capacity permits
// only ~40% of a game's list, so fractions above that saturate).
// Deterministic for a fixed seed.
SynthCorpus generate_corpus(const SynthConfig& config,
                            const std::vector<PlantedTrendSpec>& specs);

// JSON-lines in the exact load_corpus input schema, byte-stable.
void write_corpus_jsonl(const SynthCorpus& corpus, const std::string& path);
// Ground-truth sidecar echoing every spec.
void write_ground_truth(const SynthCorpus& corpus, const SynthConfig& config,
                        const std::string& path);

struct SynthProfile {
    SynthConfig config;
    std::vector<PlantedTrendSpec> specs;
};

// Named profiles used by the CLI and the acceptance suite:
//   planted-4yr  500 tags, 30% with 4-year rises and a post-peak dip
//   classify-mix 90 tags, 30 fad / 30 fashion / 30 classic decays
//   small        a few tags, quick smoke corpus
SynthProfile make_profile(const std::string& name, std::uint64_t seed);

} // namespace tagtrends
