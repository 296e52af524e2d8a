#include "tagtrends/common.hpp"
#include "tagtrends/interpret.hpp"

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

using namespace tagtrends;

namespace {

// 13-year series with explicit f, f_hp and a constant f_c over 2017-2024.
TrendSeries make_series(std::vector<double> f, std::vector<double> f_hp,
                        double f_c_value) {
    TrendSeries s;
    s.tag = "t";
    for (int y = 2012; y <= 2024; ++y)
        s.years.push_back(y);
    REQUIRE(f.size() == 13);
    REQUIRE(f_hp.size() == 13);
    s.f = std::move(f);
    s.f_hp = std::move(f_hp);
    s.recent_offset = 5;
    s.f_r.assign(8, 0.0);
    s.f_hp_r.assign(8, 0.0);
    s.f_c.assign(8, f_c_value);
    s.p.assign(13, 0.1);
    s.p_hp.assign(13, 0.05);
    return s;
}

std::vector<double> ramp(double start, double step) {
    std::vector<double> v(13);
    for (int i = 0; i < 13; ++i)
        v[i] = start + step * i;
    return v;
}

// Closed-form least-squares slope, recomputed here as the oracle.
double slope_of(const std::vector<double>& y, int y_end, int len) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int k = 0; k < len; ++k) {
        const int year = y_end - len + 1 + k;
        const double v = y[year - 2012];
        sx += year;
        sy += v;
        sxx += double(year) * year;
        sxy += year * v;
    }
    return (len * sxy - sx * sy) / (len * sxx - sx * sx);
}

TrendSeries swapped(TrendSeries s) {
    std::swap(s.f, s.f_hp);
    return s;
}

} // namespace

TEST_CASE("four quadrant fixtures") {
    // general rising faster, demand positive
    auto commod = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), 0.5);
    CHECK(quadrant_label(commod, 2024).label == Quadrant::Commoditization);

    // high-priority rising faster, demand positive
    auto staple = make_series(ramp(0.0, 0.0), ramp(-0.3, 0.05), 0.5);
    CHECK(quadrant_label(staple, 2024).label == Quadrant::RisingStaple);

    // general rising faster, demand negative
    auto expectation = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), -0.4);
    CHECK(quadrant_label(expectation, 2024).label == Quadrant::ImplicitExpectation);

    // general falling faster, demand negative
    auto decline = make_series(ramp(0.3, -0.05), ramp(0.0, -0.01), -0.4);
    CHECK(quadrant_label(decline, 2024).label == Quadrant::Decline);
}

TEST_CASE("slope gap matches the closed-form least squares oracle") {
    std::vector<double> f = {0.1, -0.2, 0.05, 0.3, -0.1, 0.2,  0.25,
                             0.4, 0.1,  0.5,  0.2, 0.45, 0.55};
    std::vector<double> f_hp = {0.0, 0.1,  -0.1, 0.2, 0.0,  0.15, 0.1,
                                0.3, 0.05, 0.4,  0.1, 0.35, 0.3};
    auto s = make_series(f, f_hp, 0.2);
    auto lab = quadrant_label(s, 2023, 4);
    const double expect = slope_of(f, 2023, 4) - slope_of(f_hp, 2023, 4);
    CHECK(lab.slope_gap == doctest::Approx(expect).epsilon(1e-12));
    CHECK(lab.mean_f_c == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(lab.window_end == 2023);
}

TEST_CASE("swapping f and f_hp flips the column") {
    auto commod = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), 0.5);
    CHECK(quadrant_label(swapped(commod), 2024).label == Quadrant::RisingStaple);

    auto expectation = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), -0.4);
    CHECK(quadrant_label(swapped(expectation), 2024).label == Quadrant::Decline);

    auto staple = make_series(ramp(0.0, 0.0), ramp(-0.3, 0.05), 0.5);
    CHECK(quadrant_label(swapped(staple), 2024).label == Quadrant::Commoditization);

    auto decline = make_series(ramp(0.3, -0.05), ramp(0.0, -0.01), -0.4);
    CHECK(quadrant_label(swapped(decline), 2024).label == Quadrant::ImplicitExpectation);
}

TEST_CASE("adding a common constant to both curves changes nothing") {
    auto base = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), 0.5);
    auto shifted = base;
    for (auto& v : shifted.f)
        v += 0.37;
    for (auto& v : shifted.f_hp)
        v += 0.37;
    auto a = quadrant_label(base, 2024);
    auto b = quadrant_label(shifted, 2024);
    CHECK(a.label == b.label);
    CHECK(a.slope_gap == doctest::Approx(b.slope_gap).epsilon(1e-9));
}

TEST_CASE("positively rescaling f_c keeps the label") {
    auto base = make_series(ramp(0.3, -0.05), ramp(0.0, -0.01), -0.4);
    auto lab = quadrant_label(base, 2024);
    auto scaled = base;
    for (auto& v : scaled.f_c)
        v *= 0.001;
    CHECK(quadrant_label(scaled, 2024).label == lab.label);
}

TEST_CASE("exact zeros are indeterminate") {
    // identical curves give a bitwise-zero slope gap
    auto zero_gap = make_series(ramp(0.0, 0.05), ramp(0.0, 0.05), 0.5);
    CHECK(quadrant_label(zero_gap, 2024).label == Quadrant::Indeterminate);

    auto zero_mean = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), 0.0);
    CHECK(quadrant_label(zero_mean, 2024).label == Quadrant::Indeterminate);
}

TEST_CASE("window without enough defined years is an input error") {
    auto s = make_series(ramp(-0.3, 0.05), ramp(0.0, 0.0), 0.5);
    // 2013 window: f is defined but f_c only starts in 2017
    CHECK_THROWS_AS(quadrant_label(s, 2013), InputError);
    // window entirely before the series
    CHECK_THROWS_AS(quadrant_label(s, 2005), InputError);
    // window ending at the very first f_c year sees only one f_c value
    CHECK_THROWS_AS(quadrant_label(s, 2017), InputError);
    CHECK_NOTHROW(quadrant_label(s, 2018));
    CHECK_THROWS_AS(quadrant_label(s, 2024, 1), InputError);
}

TEST_CASE("quadrant strings") {
    CHECK(std::string(to_string(Quadrant::Commoditization)) == "commoditization");
    CHECK(std::string(to_string(Quadrant::RisingStaple)) == "rising_staple");
    CHECK(std::string(to_string(Quadrant::ImplicitExpectation)) == "implicit_expectation");
    CHECK(std::string(to_string(Quadrant::Decline)) == "decline");
    CHECK(std::string(to_string(Quadrant::Indeterminate)) == "indeterminate");
}
