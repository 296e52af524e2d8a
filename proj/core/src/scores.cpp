#include "tagtrends/scores.hpp"

#include "tagtrends/common.hpp"

#include <cmath>
#include <numeric>

namespace tagtrends {

double phi(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("phi: proportion " + std::to_string(p) + " outside [0,1]");
    return 2.0 * std::asin(std::sqrt(p));
}

double cohens_h(double p1, double p2) {
    return phi(p1) - phi(p2);
}

std::vector<double> general_trend(const std::vector<double>& p_series) {
    if (p_series.empty())
        throw InputError("general_trend: empty series");
    const double mean =
        std::accumulate(p_series.begin(), p_series.end(), 0.0) / p_series.size();
    std::vector<double> out;
    out.reserve(p_series.size());
    for (double p : p_series)
        out.push_back(cohens_h(p, mean));
    return out;
}

RecentScores recent_trend(const std::vector<double>& p_series, int window,
                          bool inclusive) {
    if (window < 1)
        throw InputError("recent_trend: window must be >= 1");
    RecentScores out;
    out.offset = window;
    const int n = static_cast<int>(p_series.size());
    for (int i = window; i < n; ++i) {
        // benchmark over [i-window, i-1], or [i-window, i] in inclusive mode
        double sum = 0.0;
        int count = 0;
        for (int j = i - window; j < i + (inclusive ? 1 : 0); ++j) {
            sum += p_series[j];
            ++count;
        }
        out.values.push_back(cohens_h(p_series[i], sum / count));
    }
    return out;
}

std::vector<double> combined_recent(const std::vector<double>& f_r,
                                    const std::vector<double>& f_hp_r,
                                    double a, double b) {
    if (f_r.size() != f_hp_r.size())
        throw InputError("combined_recent: mismatched year domains");
    std::vector<double> out;
    out.reserve(f_r.size());
    for (std::size_t i = 0; i < f_r.size(); ++i)
        out.push_back(a * f_r[i] + b * f_hp_r[i]);
    return out;
}

TrendSeries compute_trend_series(const Corpus& corpus, const std::string& tag,
                                 const ScoreConfig& config) {
    TrendSeries s;
    s.tag = tag;
    s.years = corpus.years();
    auto [p, p_hp] = corpus.yearly_proportions(tag);
    s.p = std::move(p);
    s.p_hp = std::move(p_hp);
    s.f = general_trend(s.p);
    s.f_hp = general_trend(s.p_hp);
    auto r = recent_trend(s.p, config.window, config.window_inclusive);
    auto r_hp = recent_trend(s.p_hp, config.window, config.window_inclusive);
    s.recent_offset = r.offset;
    s.f_r = std::move(r.values);
    s.f_hp_r = std::move(r_hp.values);
    s.f_c = combined_recent(s.f_r, s.f_hp_r, config.coeff_a, config.coeff_b);
    return s;
}

} // namespace tagtrends
