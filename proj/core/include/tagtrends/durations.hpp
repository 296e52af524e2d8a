#pragma once

#include "tagtrends/scores.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tagtrends {

struct DurationStats {
    std::string tag;
    std::vector<int> runs;       // lengths of maximal f_c > 0 stretches
    int max_run = 0;
    std::optional<int> onset;    // first year of the longest run
    std::optional<int> offset;   // first year after the longest run with f_c <= 0
    int peak_year = 0;           // argmax of the general trend score (tie: earliest)
};

enum class HistogramSource { Observed, NullModel };

struct DurationHistogram {
    std::map<int, double> bins;  // run length -> tag count (fractional for null)
    HistogramSource source = HistogramSource::Observed;
    int resamples = 0;
    std::uint64_t seed = 0;
};

// Maximal runs of strictly positive values; exact zeros break runs.
std::vector<int> positive_runs(const std::vector<double>& f_c);

DurationStats compute_duration_stats(const TrendSeries& series);

DurationHistogram duration_histogram(const std::vector<DurationStats>& all_stats);

// Within-tag permutation null (or i.i.d. resampling with replacement when
// `with_replacement`). Per-tag stream seeded with seed ^ fnv1a(tag), so the
// result is independent of scheduling order.
DurationHistogram null_model_histogram(const std::vector<TrendSeries>& all_series,
                                       int resamples, std::uint64_t seed,
                                       bool with_replacement = false);

struct ExtendedDurations {
    int total = 0;     // length of the longest positive run
    int increase = 0;  // onset to peak
    int decrease = 0;  // peak to end of run
    std::vector<int> interpeak_intervals;
};

// Absent (nullopt) when the series has no positive run.
std::optional<ExtendedDurations> duration_stats_extended(const TrendSeries& series);

} // namespace tagtrends
