#pragma once

#include "tagtrends/durations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tagtrends {

struct EligibilityFilter {
    int min_increase_years = 4;
    int peak_year_max = 2020; // strictly before 2021
};

enum class TrendClass { Fad, Fashion, Classic };

const char* to_string(TrendClass c);

struct TrendClassification {
    std::string tag;
    TrendClass cls = TrendClass::Fad;
    int peak_year = 0;
    // Fad: year offset (from peak) where the proportion fell below the floor.
    std::optional<int> vanish_offset;
    // Fashion: rate of the exponential fit; Classic: exponent of the power fit.
    std::optional<double> lambda;
    std::optional<double> alpha;
    double rmse_exp = 0.0;
    double rmse_poly = 0.0;
    bool clamped = false;  // non-positive mid-series values clamped for fitting
    bool rmse_tie = false; // tie broken toward classic
};

std::vector<std::string> eligible_tags(const std::vector<DurationStats>& all_stats,
                                       const EligibilityFilter& filter);

// Relative vanish floor: a value below epsilon * peak is "vanished".
inline constexpr double kVanishEpsilon = 0.05;

// post_peak: proportions from the peak year onward (post_peak[0] = peak value).
// Requires at least 3 points after the peak.
TrendClassification fit_decay(const std::vector<double>& post_peak,
                              double epsilon = kVanishEpsilon);

} // namespace tagtrends
