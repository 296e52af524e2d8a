#pragma once

#include "tagtrends/scores.hpp"

#include <optional>
#include <string>

namespace tagtrends {

enum class Quadrant {
    Commoditization,      // general rising faster, combined recent positive
    RisingStaple,         // high-priority rising faster, combined recent positive
    ImplicitExpectation,  // general rising faster, combined recent negative
    Decline,              // high-priority rising faster, combined recent negative
    Indeterminate,        // exact zero slope gap or mean combined score
};

const char* to_string(Quadrant q);

struct InterpretationLabel {
    std::string tag;
    int window_end = 0;
    Quadrant label = Quadrant::Indeterminate;
    double slope_gap = 0.0; // ls-slope(f) - ls-slope(f_hp) over the window
    double mean_f_c = 0.0;
};

// Trailing window [window_end - window_len + 1, window_end]. Needs at least
// two defined years of f, f_hp and f_c inside the window.
InterpretationLabel quadrant_label(const TrendSeries& series, int window_end,
                                   int window_len = 3);

} // namespace tagtrends
