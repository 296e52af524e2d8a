#include "tagtrends/durations.hpp"

#include "tagtrends/common.hpp"
#include "tagtrends/rng.hpp"

#include <algorithm>

namespace tagtrends {

std::vector<int> positive_runs(const std::vector<double>& f_c) {
    std::vector<int> runs;
    int cur = 0;
    for (double v : f_c) {
        if (v > 0.0) {
            ++cur;
        } else if (cur > 0) {
            runs.push_back(cur);
            cur = 0;
        }
    }
    if (cur > 0)
        runs.push_back(cur);
    return runs;
}

namespace {

int max_run(const std::vector<double>& v) {
    int best = 0, cur = 0;
    for (double x : v) {
        cur = x > 0.0 ? cur + 1 : 0;
        best = std::max(best, cur);
    }
    return best;
}

// Start index (within the defined f_c region) of the earliest longest run.
int longest_run_start(const std::vector<double>& f_c, int len) {
    int cur = 0;
    for (int i = 0; i < static_cast<int>(f_c.size()); ++i) {
        cur = f_c[i] > 0.0 ? cur + 1 : 0;
        if (cur == len)
            return i - len + 1;
    }
    return -1;
}

} // namespace

DurationStats compute_duration_stats(const TrendSeries& series) {
    DurationStats d;
    d.tag = series.tag;
    d.runs = positive_runs(series.f_c);
    d.max_run = d.runs.empty() ? 0 : *std::max_element(d.runs.begin(), d.runs.end());

    if (d.max_run > 0) {
        const int start = longest_run_start(series.f_c, d.max_run);
        d.onset = series.years[series.recent_offset + start];
        const int after = start + d.max_run;
        if (after < static_cast<int>(series.f_c.size()))
            d.offset = series.years[series.recent_offset + after];
    }

    // peak on the general trend score over the whole timeframe, earliest tie
    int peak_idx = 0;
    for (int i = 1; i < static_cast<int>(series.f.size()); ++i)
        if (series.f[i] > series.f[peak_idx])
            peak_idx = i;
    d.peak_year = series.years[peak_idx];
    return d;
}

DurationHistogram duration_histogram(const std::vector<DurationStats>& all_stats) {
    if (all_stats.empty())
        throw InputError("duration_histogram: no tags");
    DurationHistogram h;
    h.source = HistogramSource::Observed;
    for (const auto& s : all_stats)
        h.bins[s.max_run] += 1.0;
    return h;
}

DurationHistogram null_model_histogram(const std::vector<TrendSeries>& all_series,
                                       int resamples, std::uint64_t seed,
                                       bool with_replacement) {
    if (resamples < 1)
        throw InputError("null_model_histogram: resamples must be >= 1");
    DurationHistogram h;
    h.source = HistogramSource::NullModel;
    h.resamples = resamples;
    h.seed = seed;
    const double weight = 1.0 / resamples;
    for (const auto& s : all_series) {
        Rng rng(seed ^ fnv1a64(s.tag));
        std::vector<double> values = s.f_c;
        for (int r = 0; r < resamples; ++r) {
            if (with_replacement) {
                std::vector<double> draw(s.f_c.size());
                for (auto& v : draw)
                    v = s.f_c[rng.below(s.f_c.size())];
                h.bins[max_run(draw)] += weight;
            } else {
                rng.shuffle(values);
                h.bins[max_run(values)] += weight;
            }
        }
    }
    return h;
}

std::optional<ExtendedDurations> duration_stats_extended(const TrendSeries& series) {
    const auto runs = positive_runs(series.f_c);
    if (runs.empty())
        return std::nullopt;
    const int len = *std::max_element(runs.begin(), runs.end());
    const int start = longest_run_start(series.f_c, len);
    const int onset_idx = series.recent_offset + start;
    const int run_end_idx = onset_idx + len - 1;

    ExtendedDurations d;
    d.total = len;

    // peak of the general score inside the run, earliest tie
    int peak_idx = onset_idx;
    for (int i = onset_idx; i <= run_end_idx; ++i)
        if (series.f[i] > series.f[peak_idx])
            peak_idx = i;
    d.increase = peak_idx - onset_idx;
    d.decrease = run_end_idx - peak_idx;

    // successive local maxima of f separated by >= 1 non-positive f_c year
    std::vector<int> maxima;
    const int n = static_cast<int>(series.f.size());
    for (int i = 0; i < n; ++i) {
        const bool left_ok = i == 0 || series.f[i] > series.f[i - 1];
        const bool right_ok = i == n - 1 || series.f[i] >= series.f[i + 1];
        if (left_ok && right_ok)
            maxima.push_back(i);
    }
    for (std::size_t k = 1; k < maxima.size(); ++k) {
        bool separated = false;
        for (int i = maxima[k - 1] + 1; i < maxima[k]; ++i) {
            const int ri = i - series.recent_offset;
            if (ri >= 0 && ri < static_cast<int>(series.f_c.size()) && series.f_c[ri] <= 0.0) {
                separated = true;
                break;
            }
        }
        if (separated)
            d.interpeak_intervals.push_back(series.years[maxima[k]] -
                                            series.years[maxima[k - 1]]);
    }
    return d;
}

} // namespace tagtrends
