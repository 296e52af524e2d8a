#pragma once

#include "tagtrends/durations.hpp"
#include "tagtrends/scores.hpp"

#include <string>

namespace tagtrends {

struct CurveSelection {
    bool general = true;
    bool high_priority = true;
    bool recent = true;
    bool high_priority_recent = true;
    bool combined_recent = true;

    int count() const {
        return int(general) + int(high_priority) + int(recent) +
               int(high_priority_recent) + int(combined_recent);
    }
};

struct ChartColors {
    std::string general = "#1f77b4";              // blue
    std::string high_priority = "#2ca02c";        // green
    std::string recent = "#d62728";               // red
    std::string high_priority_recent = "#ff7f0e"; // orange
    std::string combined_recent = "#9467bd";
};

// One polyline per selected curve, legend, zero axis, year ticks.
// Byte-stable: values are rounded to 6 decimals before layout.
std::string render_trend_chart(const TrendSeries& series,
                               const CurveSelection& curves = {},
                               const ChartColors& colors = {});

// Grouped bars per run length, observed vs null, counts labeled; missing bins
// padded with zero-height bars so both series share the axis.
std::string render_histogram_chart(const DurationHistogram& observed,
                                   const DurationHistogram& null_model);

} // namespace tagtrends
