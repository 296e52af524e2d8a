#include "tagtrends/classify.hpp"

#include "tagtrends/common.hpp"

#include <cmath>

namespace tagtrends {

const char* to_string(TrendClass c) {
    switch (c) {
    case TrendClass::Fad: return "fad";
    case TrendClass::Fashion: return "fashion";
    case TrendClass::Classic: return "classic";
    }
    return "?";
}

std::vector<std::string> eligible_tags(const std::vector<DurationStats>& all_stats,
                                       const EligibilityFilter& filter) {
    std::vector<std::string> out;
    for (const auto& s : all_stats)
        if (s.max_run >= filter.min_increase_years && s.peak_year <= filter.peak_year_max)
            out.push_back(s.tag);
    return out;
}

namespace {

struct LinFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rmse = 0.0;
};

LinFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinFit f;
    f.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss += r * r;
    }
    f.rmse = std::sqrt(ss / n);
    return f;
}

} // namespace

TrendClassification fit_decay(const std::vector<double>& post_peak, double epsilon) {
    if (post_peak.size() < 4)
        throw InputError("fit_decay: need the peak plus at least 3 post-peak points");
    const double peak = post_peak[0];
    if (!(peak > 0.0))
        throw InputError("fit_decay: peak proportion must be positive");
    const double floor = epsilon * peak;

    TrendClassification c;

    // fad: the proportion vanishes (falls below the relative floor) in-window
    for (std::size_t i = 1; i < post_peak.size(); ++i) {
        if (post_peak[i] < floor) {
            c.cls = TrendClass::Fad;
            c.vanish_offset = static_cast<int>(i);
            return c;
        }
    }

    std::vector<double> t, log_t1, log_y;
    for (std::size_t i = 0; i < post_peak.size(); ++i) {
        double v = post_peak[i];
        if (v <= 0.0) { // cannot happen past the fad gate unless floor == 0
            v = floor > 0.0 ? floor : 1e-12;
            c.clamped = true;
        }
        t.push_back(static_cast<double>(i));
        log_t1.push_back(std::log(static_cast<double>(i) + 1.0));
        log_y.push_back(std::log(v));
    }

    const LinFit exp_fit = least_squares(t, log_y);      // log y = ln A - lambda t
    const LinFit poly_fit = least_squares(log_t1, log_y); // log y = ln A - alpha ln(t+1)
    c.rmse_exp = exp_fit.rmse;
    c.rmse_poly = poly_fit.rmse;

    if (std::abs(exp_fit.rmse - poly_fit.rmse) < 1e-9) {
        c.rmse_tie = true;
        c.cls = TrendClass::Classic;
        c.alpha = -poly_fit.slope;
    } else if (exp_fit.rmse < poly_fit.rmse) {
        c.cls = TrendClass::Fashion;
        c.lambda = -exp_fit.slope;
    } else {
        c.cls = TrendClass::Classic;
        c.alpha = -poly_fit.slope;
    }
    return c;
}

} // namespace tagtrends
