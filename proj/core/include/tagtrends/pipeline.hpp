#pragma once

#include "tagtrends/classify.hpp"
#include "tagtrends/corpus.hpp"
#include "tagtrends/scores.hpp"
#include "tagtrends/synth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tagtrends {

inline constexpr const char* kToolVersion = "0.1.0";

struct PipelineOptions {
    std::string input;                 // corpus file; empty when a profile is used
    CorpusFormat format = CorpusFormat::JsonLines;
    std::string profile;               // synth profile name
    int year_min = 2012;
    int year_max = 2024;
    double hp_threshold = 0.6;
    ScoreConfig score;
    int resamples = 1000;
    bool null_with_replacement = false;
    EligibilityFilter filter;
    double vanish_epsilon = kVanishEpsilon;
    int interpret_window = 3;
    std::uint64_t seed = 1;
    std::string out_dir = "out";
    std::vector<std::string> chart_tags; // empty: top tags by peak |f_c|
    int max_charts = 8;
};

// Corpus from --input or from the named synth profile (writing corpus.jsonl
// and ground_truth.json into out_dir in the profile case).
Corpus resolve_corpus(const PipelineOptions& opt);

std::vector<TrendSeries> compute_all_series(const Corpus& corpus,
                                            const ScoreConfig& config);

// Per-stage runners; each writes its artifacts under opt.out_dir and returns
// the list of files written (relative paths).
std::vector<std::string> run_scores(const Corpus& corpus, const PipelineOptions& opt);
std::vector<std::string> run_spca(const Corpus& corpus, const PipelineOptions& opt);
std::vector<std::string> run_durations(const Corpus& corpus, const PipelineOptions& opt);
std::vector<std::string> run_classify(const Corpus& corpus, const PipelineOptions& opt);
std::vector<std::string> run_interpret(const Corpus& corpus, const PipelineOptions& opt);
std::vector<std::string> run_report(const Corpus& corpus, const PipelineOptions& opt);

// Full chain in dependency order plus manifest.json; byte-identical reruns
// for identical inputs. Returns the manifest hash.
std::string run_all(const PipelineOptions& opt);

// Manifest hash of an existing output directory (hash of manifest.json bytes).
std::string manifest_hash(const std::string& out_dir);

} // namespace tagtrends
