#include "tagtrends/interpret.hpp"

#include "tagtrends/common.hpp"

#include <cmath>
#include <vector>

namespace tagtrends {

const char* to_string(Quadrant q) {
    switch (q) {
    case Quadrant::Commoditization: return "commoditization";
    case Quadrant::RisingStaple: return "rising_staple";
    case Quadrant::ImplicitExpectation: return "implicit_expectation";
    case Quadrant::Decline: return "decline";
    case Quadrant::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

InterpretationLabel quadrant_label(const TrendSeries& series, int window_end,
                                   int window_len) {
    if (window_len < 2)
        throw InputError("quadrant_label: window_len must be >= 2");
    const int y0 = window_end - window_len + 1;

    std::vector<double> xs, f_vals, f_hp_vals;
    double fc_sum = 0.0;
    int fc_count = 0;
    for (std::size_t i = 0; i < series.years.size(); ++i) {
        const int y = series.years[i];
        if (y < y0 || y > window_end)
            continue;
        xs.push_back(static_cast<double>(y));
        f_vals.push_back(series.f[i]);
        f_hp_vals.push_back(series.f_hp[i]);
        const int ri = static_cast<int>(i) - series.recent_offset;
        if (ri >= 0 && ri < static_cast<int>(series.f_c.size())) {
            fc_sum += series.f_c[ri];
            ++fc_count;
        }
    }
    if (xs.size() < 2 || fc_count < 2)
        throw InputError("quadrant_label: need >= 2 defined years of f, f_hp and f_c "
                         "in the window ending " + std::to_string(window_end));

    InterpretationLabel out;
    out.tag = series.tag;
    out.window_end = window_end;
    out.slope_gap = ls_slope(xs, f_vals) - ls_slope(xs, f_hp_vals);
    out.mean_f_c = fc_sum / fc_count;

    if (out.slope_gap == 0.0 || out.mean_f_c == 0.0) {
        out.label = Quadrant::Indeterminate;
    } else if (out.mean_f_c > 0.0) {
        out.label = out.slope_gap > 0.0 ? Quadrant::Commoditization : Quadrant::RisingStaple;
    } else {
        out.label = out.slope_gap > 0.0 ? Quadrant::ImplicitExpectation : Quadrant::Decline;
    }
    return out;
}

} // namespace tagtrends
