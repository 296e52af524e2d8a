#include "tagtrends/synth.hpp"

#include "tagtrends/common.hpp"
#include "tagtrends/rng.hpp"

#include <nlohmann/json.hpp>

#include <climits>
#include <cmath>
#include <fstream>
#include <set>

namespace tagtrends {

namespace {

int peak_year_of(const PlantedTrendSpec& spec) {
    return spec.rise_years > 0 ? spec.rise_start + spec.rise_years - 1 : INT_MIN;
}

const char* decay_name(DecaySpec::Kind k) {
    switch (k) {
    case DecaySpec::Kind::None: return "none";
    case DecaySpec::Kind::Vanish: return "vanish";
    case DecaySpec::Kind::Exponential: return "exponential";
    case DecaySpec::Kind::Polynomial: return "polynomial";
    case DecaySpec::Kind::Dip: return "dip";
    }
    return "?";
}

long default_games(int year, int year_min) {
    return std::lround(800.0 * std::pow(1.122, year - year_min));
}

} // namespace

double planted_rate(const PlantedTrendSpec& spec, int year) {
    const int peak_year = peak_year_of(spec);
    double rate;
    if (spec.rise_years <= 0 || year < spec.rise_start) {
        rate = spec.base_rate;
    } else if (year <= peak_year) {
        const int j = year - spec.rise_start + 1;
        rate = spec.base_rate + (spec.peak_rate - spec.base_rate) * j / spec.rise_years;
    } else {
        const int dt = year - peak_year;
        switch (spec.decay.kind) {
        case DecaySpec::Kind::None:
            rate = spec.peak_rate;
            break;
        case DecaySpec::Kind::Vanish:
            rate = spec.decay.vanish_years > 0
                       ? std::max(0.0, spec.peak_rate * (1.0 - dt / spec.decay.vanish_years))
                       : 0.0;
            break;
        case DecaySpec::Kind::Exponential:
            rate = spec.peak_rate * std::exp(-spec.decay.rate * dt);
            break;
        case DecaySpec::Kind::Polynomial:
            rate = spec.peak_rate * std::pow(dt + 1.0, -spec.decay.rate);
            break;
        case DecaySpec::Kind::Dip:
            rate = dt <= spec.decay.dip_years ? spec.decay.dip_rate
                                              : spec.decay.rebound_rate;
            break;
        default:
            rate = spec.peak_rate;
        }
    }
    if (rate < 0.0 || rate > 1.0)
        throw InputError("planted rate for tag '" + spec.tag + "' in year " +
                         std::to_string(year) + " is outside [0,1]");
    return rate;
}

SynthCorpus generate_corpus(const SynthConfig& config,
                            const std::vector<PlantedTrendSpec>& specs) {
    std::set<std::string> names;
    for (const auto& s : specs)
        if (!names.insert(s.tag).second)
            throw InputError("duplicate planted tag '" + s.tag + "'");

    SynthCorpus out;
    out.ground_truth = specs;
    Rng rng(config.seed);
    long next_id = 1;

    for (int year = config.year_min; year <= config.year_max; ++year) {
        auto it = config.games_per_year.find(year);
        const long n_games = it != config.games_per_year.end()
                                 ? it->second
                                 : default_games(year, config.year_min);
        if (n_games < 1)
            throw InputError("games_per_year must be >= 1");
        for (long g = 0; g < n_games; ++g) {
            GameRecord game;
            game.app_id = next_id++;
            game.release_year = year;

            std::vector<std::size_t> want_hp, want_lp;
            for (std::size_t si = 0; si < specs.size(); ++si) {
                if (rng.real() >= planted_rate(specs[si], year))
                    continue;
                (rng.real() < specs[si].hp_fraction ? want_hp : want_lp).push_back(si);
            }
            if (want_hp.empty() && want_lp.empty()) {
                game.tags.push_back({"untagged", 1, 10, 0.0});
            } else {
                // hp-flagged tags fill the high-priority rank band first; the
                // band holds only the top ~40% of the list, so large
                // hp_fraction values saturate at that capacity
                rng.shuffle(want_hp);
                rng.shuffle(want_lp);
                std::vector<std::size_t> ordered = want_hp;
                ordered.insert(ordered.end(), want_lp.begin(), want_lp.end());
                const int m = static_cast<int>(ordered.size());
                for (int r = 1; r <= m; ++r)
                    game.tags.push_back(
                        {specs[ordered[r - 1]].tag, r, 10L * (m - r + 1), 0.0});
            }
            for (auto& t : game.tags)
                t.priority = compute_priority(t.rank, static_cast<int>(game.tags.size()));
            out.games.push_back(std::move(game));
        }
    }
    return out;
}

void write_corpus_jsonl(const SynthCorpus& corpus, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write corpus file: " + path);
    for (const auto& g : corpus.games) {
        nlohmann::ordered_json j;
        j["app_id"] = g.app_id;
        j["release_year"] = g.release_year;
        auto& tags = j["tags"] = nlohmann::ordered_json::array();
        for (const auto& t : g.tags)
            tags.push_back({{"name", t.name}, {"votes", t.votes}});
        f << j.dump() << "\n";
    }
}

void write_ground_truth(const SynthCorpus& corpus, const SynthConfig& config,
                        const std::string& path) {
    nlohmann::ordered_json j;
    j["year_min"] = config.year_min;
    j["year_max"] = config.year_max;
    j["seed"] = config.seed;
    auto& specs = j["planted"] = nlohmann::ordered_json::array();
    for (const auto& s : corpus.ground_truth) {
        nlohmann::ordered_json js;
        js["tag"] = s.tag;
        js["base_rate"] = round6(s.base_rate);
        js["rise_start"] = s.rise_start;
        js["rise_years"] = s.rise_years;
        js["peak_rate"] = round6(s.peak_rate);
        js["decay"] = decay_name(s.decay.kind);
        switch (s.decay.kind) {
        case DecaySpec::Kind::Vanish:
            js["vanish_years"] = s.decay.vanish_years;
            break;
        case DecaySpec::Kind::Exponential:
            js["lambda"] = round6(s.decay.rate);
            break;
        case DecaySpec::Kind::Polynomial:
            js["alpha"] = round6(s.decay.rate);
            break;
        case DecaySpec::Kind::Dip:
            js["dip_rate"] = round6(s.decay.dip_rate);
            js["dip_years"] = s.decay.dip_years;
            js["rebound_rate"] = round6(s.decay.rebound_rate);
            break;
        default:
            break;
        }
        js["hp_fraction"] = round6(s.hp_fraction);
        specs.push_back(std::move(js));
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot write ground truth file: " + path);
    f << j.dump(2) << "\n";
}

namespace {

std::string numbered(const char* stem, int i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%03d", stem, i);
    return buf;
}

SynthProfile planted_4yr(std::uint64_t seed) {
    SynthProfile p;
    p.config.seed = seed;
    std::vector<PlantedTrendSpec>& specs = p.specs;
    // 150 tags with a 4-year rise 2017-2020, a two-year dip and a rebound;
    // with window 5 the combined recent score is positive 2017-2020 and
    // again 2023-2024
    for (int i = 0; i < 150; ++i) {
        PlantedTrendSpec s;
        s.tag = numbered("trend_", i);
        s.base_rate = 0.06;
        s.rise_start = 2017;
        s.rise_years = 4;
        s.peak_rate = 0.18;
        s.decay.kind = DecaySpec::Kind::Dip;
        s.decay.dip_rate = 0.08;
        s.decay.dip_years = 2;
        s.decay.rebound_rate = 0.165;
        specs.push_back(std::move(s));
    }
    // 350 constant-rate tags; their combined recent score is pure sampling
    // noise, which the permutation null reproduces
    for (int i = 0; i < 350; ++i) {
        PlantedTrendSpec s;
        s.tag = numbered("noise_", i);
        s.base_rate = 0.06 + 0.00015 * i;
        s.peak_rate = s.base_rate;
        specs.push_back(std::move(s));
    }
    return p;
}

SynthProfile classify_mix(std::uint64_t seed) {
    SynthProfile p;
    p.config.seed = seed;
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto add = [&](const char* stem, int i, DecaySpec decay) {
        PlantedTrendSpec s;
        s.tag = numbered(stem, i);
        s.base_rate = 0.04;
        s.rise_start = 2017;
        s.rise_years = 4; // rise spans the first four defined window years,
                          // peak 2020, four post-peak years to fit on
        s.peak_rate = 0.2;
        s.decay = decay;
        p.specs.push_back(std::move(s));
    };
    for (int i = 0; i < 30; ++i) {
        DecaySpec d;
        d.kind = DecaySpec::Kind::Vanish;
        d.vanish_years = 2.0 + rng.below(3); // gone within 2-4 years
        add("fad_", i, d);
    }
    for (int i = 0; i < 30; ++i) {
        DecaySpec d;
        d.kind = DecaySpec::Kind::Exponential;
        d.rate = 0.3 + 0.3 * rng.real();
        add("fashion_", i, d);
    }
    for (int i = 0; i < 30; ++i) {
        DecaySpec d;
        d.kind = DecaySpec::Kind::Polynomial;
        d.rate = 0.9 + 0.4 * rng.real();
        add("classic_", i, d);
    }
    return p;
}

SynthProfile small(std::uint64_t seed) {
    SynthProfile p;
    p.config.seed = seed;
    for (int y = 2012; y <= 2024; ++y)
        p.config.games_per_year[y] = 400;
    PlantedTrendSpec rising;
    rising.tag = "rising";
    rising.base_rate = 0.05;
    rising.rise_start = 2018;
    rising.rise_years = 5;
    rising.peak_rate = 0.3;
    rising.decay.kind = DecaySpec::Kind::None;
    p.specs.push_back(rising);

    PlantedTrendSpec steady;
    steady.tag = "steady";
    steady.base_rate = 0.2;
    steady.peak_rate = 0.2;
    p.specs.push_back(steady);

    PlantedTrendSpec burst;
    burst.tag = "burst";
    burst.base_rate = 0.03;
    burst.rise_start = 2017;
    burst.rise_years = 4;
    burst.peak_rate = 0.25;
    burst.decay.kind = DecaySpec::Kind::Vanish;
    burst.decay.vanish_years = 3;
    p.specs.push_back(burst);

    PlantedTrendSpec fading;
    fading.tag = "fading";
    fading.base_rate = 0.05;
    fading.rise_start = 2017;
    fading.rise_years = 4;
    fading.peak_rate = 0.22;
    fading.decay.kind = DecaySpec::Kind::Exponential;
    fading.decay.rate = 0.3;
    p.specs.push_back(fading);

    PlantedTrendSpec lasting;
    lasting.tag = "lasting";
    lasting.base_rate = 0.05;
    lasting.rise_start = 2017;
    lasting.rise_years = 4;
    lasting.peak_rate = 0.22;
    lasting.decay.kind = DecaySpec::Kind::Polynomial;
    lasting.decay.rate = 1.0;
    p.specs.push_back(lasting);
    return p;
}

} // namespace

SynthProfile make_profile(const std::string& name, std::uint64_t seed) {
    if (name == "planted-4yr")
        return planted_4yr(seed);
    if (name == "classify-mix")
        return classify_mix(seed);
    if (name == "small")
        return small(seed);
    throw InputError("unknown synth profile '" + name +
                     "' (known: planted-4yr, classify-mix, small)");
}

} // namespace tagtrends
