#include "tagtrends/common.hpp"
#include "tagtrends/report.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace tagtrends;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

TrendSeries demo_series() {
    TrendSeries s;
    s.tag = "PvE";
    for (int y = 2012; y <= 2024; ++y)
        s.years.push_back(y);
    for (int i = 0; i < 13; ++i) {
        s.p.push_back(0.05 + 0.01 * i);
        s.p_hp.push_back(0.02 + 0.005 * i);
        s.f.push_back(-0.3 + 0.05 * i);
        s.f_hp.push_back(-0.2 + 0.03 * i);
    }
    s.recent_offset = 5;
    for (int i = 0; i < 8; ++i) {
        s.f_r.push_back(0.02 * i);
        s.f_hp_r.push_back(0.01 * i);
        s.f_c.push_back(0.82 * s.f_r[i] + 0.57 * s.f_hp_r[i]);
    }
    return s;
}

} // namespace

TEST_CASE("trend chart draws one polyline per selected curve") {
    TrendSeries s = demo_series();
    std::string svg = render_trend_chart(s);
    CHECK(count_of(svg, "<polyline") == 5);
    CHECK(svg.find("class=\"zero-axis\"") != std::string::npos);
    CHECK(svg.find(">PvE</text>") != std::string::npos);
    CHECK(svg.find("#1f77b4") != std::string::npos); // general, blue
    CHECK(svg.find("#2ca02c") != std::string::npos); // high-priority, green
    CHECK(svg.find(">2012</text>") != std::string::npos);
    CHECK(svg.find(">2024</text>") != std::string::npos);

    CurveSelection sel;
    sel.combined_recent = false;
    CHECK(count_of(render_trend_chart(s, sel), "<polyline") == 4);
    sel = CurveSelection{};
    sel.general = sel.high_priority = sel.recent = sel.high_priority_recent = false;
    std::string only_combined = render_trend_chart(s, sel);
    CHECK(count_of(only_combined, "<polyline") == 1);
    CHECK(only_combined.find("#9467bd") != std::string::npos);
}

TEST_CASE("empty curve selection is an input error") {
    CurveSelection sel;
    sel.general = sel.high_priority = sel.recent = false;
    sel.high_priority_recent = sel.combined_recent = false;
    CHECK_THROWS_AS(render_trend_chart(demo_series(), sel), InputError);
}

TEST_CASE("all-zero series collapses onto the zero axis") {
    TrendSeries s = demo_series();
    for (auto* v : {&s.f, &s.f_hp})
        v->assign(13, 0.0);
    for (auto* v : {&s.f_r, &s.f_hp_r, &s.f_c})
        v->assign(8, 0.0);
    std::string svg = render_trend_chart(s);
    // the zero-axis y coordinate appears in every polyline point
    auto ypos = svg.find("class=\"zero-axis\"");
    REQUIRE(ypos != std::string::npos);
    auto y1 = svg.find("y1=\"", ypos) + 4;
    const std::string zero_y = svg.substr(y1, svg.find('"', y1) - y1);
    std::size_t pos = 0;
    while ((pos = svg.find("points=\"", pos)) != std::string::npos) {
        pos += 8;
        const std::string pts = svg.substr(pos, svg.find('"', pos) - pos);
        std::size_t c = 0;
        while ((c = pts.find(',', c)) != std::string::npos) {
            ++c;
            const std::string y = pts.substr(c, pts.find(' ', c) - c);
            CHECK(y == zero_y);
        }
    }
}

TEST_CASE("trend chart is byte-stable under sub-rounding perturbation") {
    TrendSeries a = demo_series();
    TrendSeries b = a;
    for (auto& v : b.f)
        v += 2e-9; // below the 6-decimal rounding step
    CHECK(render_trend_chart(a) == render_trend_chart(a));
    CHECK(render_trend_chart(a) == render_trend_chart(b));
    TrendSeries c = a;
    c.f[4] += 0.01;
    CHECK(render_trend_chart(a) != render_trend_chart(c));
}

TEST_CASE("histogram chart pads missing bins on both sides") {
    DurationHistogram obs;
    obs.source = HistogramSource::Observed;
    obs.bins[4] = 1.0;
    DurationHistogram null;
    null.source = HistogramSource::NullModel;
    null.bins[2] = 1.0;
    std::string svg = render_histogram_chart(obs, null);
    // bins 0..4 for both series
    CHECK(count_of(svg, "class=\"observed\"") == 5);
    CHECK(count_of(svg, "class=\"null\"") == 5);
    CHECK(svg.find(">observed</text>") != std::string::npos);
    CHECK(svg.find(">independent sampling</text>") != std::string::npos);
}

TEST_CASE("histogram bars carry count labels") {
    DurationHistogram obs;
    obs.source = HistogramSource::Observed;
    obs.bins[1] = 12.0;
    obs.bins[2] = 3.0;
    DurationHistogram null;
    null.source = HistogramSource::NullModel;
    null.bins[1] = 9.5;
    null.bins[2] = 5.5;
    std::string svg = render_histogram_chart(obs, null);
    CHECK(svg.find(">12.0</text>") != std::string::npos);
    CHECK(svg.find(">9.5</text>") != std::string::npos);
    CHECK(svg.find(">5.5</text>") != std::string::npos);
}

TEST_CASE("empty histograms are rejected") {
    DurationHistogram obs, null;
    obs.bins[1] = 1.0;
    CHECK_THROWS_AS(render_histogram_chart(obs, null), InputError);
    CHECK_THROWS_AS(render_histogram_chart(null, obs), InputError);
}
