#pragma once

#include "tagtrends/corpus.hpp"

#include <string>
#include <vector>

namespace tagtrends {

struct ScoreConfig {
    int window = 5;
    double coeff_a = 0.82; // weight on the recent trend score
    double coeff_b = 0.57; // weight on the high-priority recent trend score
    bool window_inclusive = false; // include year i itself in its benchmark
};

// Scores indexed by year; the recent family is only defined once a full
// benchmark window precedes the year, i.e. from index recent_offset on.
struct TrendSeries {
    std::string tag;
    std::vector<int> years;
    std::vector<double> p;
    std::vector<double> p_hp;
    std::vector<double> f;      // general trend score
    std::vector<double> f_hp;   // high-priority trend score
    int recent_offset = 0;
    std::vector<double> f_r;    // recent trend score, years[recent_offset..]
    std::vector<double> f_hp_r;
    std::vector<double> f_c;    // combined recent trend score
};

// phi(p) = 2 arcsin(sqrt(p)), monotone, phi(0)=0, phi(1)=pi.
double phi(double p);

// Cohen's h = phi(p1) - phi(p2), in [-pi, pi].
double cohens_h(double p1, double p2);

// Cohen's h of each value against the unweighted series mean.
std::vector<double> general_trend(const std::vector<double>& p_series);

struct RecentScores {
    int offset = 0; // first index of the input series with a defined score
    std::vector<double> values;
};

// Cohen's h of each value against the mean of the `window` values strictly
// before it (or including it when `inclusive`). Empty when the series is too
// short; that is not an error.
RecentScores recent_trend(const std::vector<double>& p_series, int window,
                          bool inclusive = false);

// Pointwise a*f_r + b*f_hp_r over a shared year domain.
std::vector<double> combined_recent(const std::vector<double>& f_r,
                                    const std::vector<double>& f_hp_r,
                                    double a, double b);

TrendSeries compute_trend_series(const Corpus& corpus, const std::string& tag,
                                 const ScoreConfig& config);

} // namespace tagtrends
