#include "tagtrends/report.hpp"

#include "tagtrends/common.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tagtrends {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 600.0;  // legend sits to the right of this
constexpr double kTop = 30.0;
constexpr double kBottom = 380.0;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Curve {
    const char* name;
    const std::string* color;
    std::vector<std::pair<int, double>> points; // (year, value)
};

} // namespace

std::string render_trend_chart(const TrendSeries& series,
                               const CurveSelection& curves,
                               const ChartColors& colors) {
    if (curves.count() == 0)
        throw InputError("render_trend_chart: empty curve selection");

    std::vector<Curve> cs;
    auto full = [&](const char* name, const std::string& color,
                    const std::vector<double>& vals) {
        Curve c{name, &color, {}};
        for (std::size_t i = 0; i < vals.size(); ++i)
            c.points.emplace_back(series.years[i], round6(vals[i]));
        cs.push_back(std::move(c));
    };
    auto recent = [&](const char* name, const std::string& color,
                      const std::vector<double>& vals) {
        Curve c{name, &color, {}};
        for (std::size_t i = 0; i < vals.size(); ++i)
            c.points.emplace_back(series.years[series.recent_offset + i], round6(vals[i]));
        cs.push_back(std::move(c));
    };
    if (curves.general)
        full("general", colors.general, series.f);
    if (curves.high_priority)
        full("high-priority", colors.high_priority, series.f_hp);
    if (curves.recent)
        recent("recent", colors.recent, series.f_r);
    if (curves.high_priority_recent)
        recent("high-priority recent", colors.high_priority_recent, series.f_hp_r);
    if (curves.combined_recent)
        recent("combined recent", colors.combined_recent, series.f_c);

    double vmin = 0.0, vmax = 0.0;
    for (const auto& c : cs)
        for (const auto& [y, v] : c.points) {
            vmin = std::min(vmin, v);
            vmax = std::max(vmax, v);
        }
    if (vmax == vmin) {
        vmax = 1.0;
        vmin = -1.0;
    }
    const double pad = 0.05 * (vmax - vmin);
    vmax += pad;
    vmin -= pad;

    const int y0 = series.years.front(), y1 = series.years.back();
    auto sx = [&](int year) {
        return y1 == y0 ? kLeft
                        : kLeft + (kRight - kLeft) * (year - y0) / double(y1 - y0);
    };
    auto sy = [&](double v) {
        return kBottom - (kBottom - kTop) * (v - vmin) / (vmax - vmin);
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    svg << "<text x=\"" << px(kLeft) << "\" y=\"18\" font-family=\"sans-serif\" "
           "font-size=\"14\">"
        << series.tag << "</text>\n";

    // zero axis
    svg << "<line class=\"zero-axis\" x1=\"" << px(kLeft) << "\" y1=\""
        << px(sy(0.0)) << "\" x2=\"" << px(kRight) << "\" y2=\"" << px(sy(0.0))
        << "\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    // year ticks
    for (int y = y0; y <= y1; ++y) {
        svg << "<line x1=\"" << px(sx(y)) << "\" y1=\"" << px(kBottom) << "\" x2=\""
            << px(sx(y)) << "\" y2=\"" << px(kBottom + 5) << "\" stroke=\"#333333\"/>\n";
        svg << "<text x=\"" << px(sx(y)) << "\" y=\"" << px(kBottom + 18)
            << "\" font-family=\"sans-serif\" font-size=\"9\" text-anchor=\"middle\">"
            << y << "</text>\n";
    }

    for (const auto& c : cs) {
        svg << "<polyline fill=\"none\" stroke=\"" << *c.color
            << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [year, v] : c.points) {
            if (!first)
                svg << " ";
            first = false;
            svg << px(sx(year)) << "," << px(sy(v));
        }
        svg << "\"/>\n";
    }

    // legend
    double ly = kTop + 10;
    for (const auto& c : cs) {
        svg << "<line x1=\"" << px(kRight + 15) << "\" y1=\"" << px(ly) << "\" x2=\""
            << px(kRight + 40) << "\" y2=\"" << px(ly) << "\" stroke=\"" << *c.color
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << px(kRight + 45) << "\" y=\"" << px(ly + 3.5)
            << "\" font-family=\"sans-serif\" font-size=\"10\">" << c.name
            << "</text>\n";
        ly += 18;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_histogram_chart(const DurationHistogram& observed,
                                   const DurationHistogram& null_model) {
    if (observed.bins.empty() || null_model.bins.empty())
        throw InputError("render_histogram_chart: empty histogram");

    int bin_max = 0;
    double count_max = 0.0;
    for (const auto* h : {&observed, &null_model})
        for (const auto& [bin, count] : h->bins) {
            bin_max = std::max(bin_max, bin);
            count_max = std::max(count_max, round6(count));
        }
    if (count_max <= 0.0)
        count_max = 1.0;

    const int n_bins = bin_max + 1; // bin 0 included, empty bins zero-padded
    const double plot_w = kRight - kLeft;
    const double group_w = plot_w / n_bins;
    const double bar_w = group_w * 0.38;

    auto sy = [&](double count) {
        return kBottom - (kBottom - kTop) * count / count_max;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n";
    svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
        << "\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(kBottom) << "\" x2=\""
        << px(kRight) << "\" y2=\"" << px(kBottom) << "\" stroke=\"#333333\"/>\n";

    auto bar = [&](int bin, double count, double dx, const char* color,
                   const char* cls) {
        const double x = kLeft + bin * group_w + group_w / 2 + dx;
        const double y = sy(count);
        svg << "<rect class=\"" << cls << "\" x=\"" << px(x - bar_w / 2) << "\" y=\""
            << px(y) << "\" width=\"" << px(bar_w) << "\" height=\""
            << px(kBottom - y) << "\" fill=\"" << color << "\"/>\n";
        char label[32];
        std::snprintf(label, sizeof(label), "%.1f", round6(count));
        svg << "<text x=\"" << px(x) << "\" y=\"" << px(y - 3)
            << "\" font-family=\"sans-serif\" font-size=\"8\" "
               "text-anchor=\"middle\">"
            << label << "</text>\n";
    };

    for (int bin = 0; bin < n_bins; ++bin) {
        auto find = [bin](const DurationHistogram& h) {
            auto it = h.bins.find(bin);
            return it == h.bins.end() ? 0.0 : round6(it->second);
        };
        bar(bin, find(observed), -bar_w * 0.55, "#1f77b4", "observed");
        bar(bin, find(null_model), bar_w * 0.55, "#ff7f0e", "null");
        svg << "<text x=\"" << px(kLeft + bin * group_w + group_w / 2) << "\" y=\""
            << px(kBottom + 15)
            << "\" font-family=\"sans-serif\" font-size=\"10\" "
               "text-anchor=\"middle\">"
            << bin << "</text>\n";
    }

    // legend
    svg << "<rect x=\"" << px(kRight + 15) << "\" y=\"" << px(kTop) << "\" width=\"12\" "
           "height=\"12\" fill=\"#1f77b4\"/>\n";
    svg << "<text x=\"" << px(kRight + 32) << "\" y=\"" << px(kTop + 10)
        << "\" font-family=\"sans-serif\" font-size=\"10\">observed</text>\n";
    svg << "<rect x=\"" << px(kRight + 15) << "\" y=\"" << px(kTop + 20)
        << "\" width=\"12\" height=\"12\" fill=\"#ff7f0e\"/>\n";
    svg << "<text x=\"" << px(kRight + 32) << "\" y=\"" << px(kTop + 30)
        << "\" font-family=\"sans-serif\" font-size=\"10\">independent sampling</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

} // namespace tagtrends
