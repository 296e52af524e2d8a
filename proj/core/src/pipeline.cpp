#include "tagtrends/pipeline.hpp"

#include "tagtrends/common.hpp"
#include "tagtrends/interpret.hpp"
#include "tagtrends/report.hpp"
#include "tagtrends/sha256.hpp"
#include "tagtrends/spca.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace tagtrends {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw PipelineError("cannot write " + path.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string csv_cell(double v) { return fmt6(v); }

std::vector<DurationStats> all_duration_stats(const std::vector<TrendSeries>& series) {
    std::vector<DurationStats> stats;
    stats.reserve(series.size());
    for (const auto& s : series)
        stats.push_back(compute_duration_stats(s));
    return stats;
}

const TrendSeries* find_series(const std::vector<TrendSeries>& series,
                               const std::string& tag) {
    for (const auto& s : series)
        if (s.tag == tag)
            return &s;
    return nullptr;
}

std::string scores_csv(const std::vector<TrendSeries>& series) {
    std::string out = "tag,year,p,p_hp,f,f_hp,f_r,f_hp_r,f_c\n";
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.years.size(); ++i) {
            out += s.tag + "," + std::to_string(s.years[i]) + "," + csv_cell(s.p[i]) +
                   "," + csv_cell(s.p_hp[i]) + "," + csv_cell(s.f[i]) + "," +
                   csv_cell(s.f_hp[i]);
            const int ri = static_cast<int>(i) - s.recent_offset;
            if (ri >= 0 && ri < static_cast<int>(s.f_r.size()))
                out += "," + csv_cell(s.f_r[ri]) + "," + csv_cell(s.f_hp_r[ri]) + "," +
                       csv_cell(s.f_c[ri]);
            else
                out += ",,,";
            out += "\n";
        }
    }
    return out;
}

std::string histogram_csv(const DurationHistogram& h) {
    std::string out = "run_length,count\n";
    const int top = h.bins.empty() ? 0 : h.bins.rbegin()->first;
    for (int bin = 0; bin <= top; ++bin) {
        auto it = h.bins.find(bin);
        out += std::to_string(bin) + "," + fmt6(it == h.bins.end() ? 0.0 : it->second) +
               "\n";
    }
    return out;
}

std::string duration_stats_csv(const std::vector<DurationStats>& stats,
                               const std::vector<TrendSeries>& series) {
    std::string out =
        "tag,max_run,onset,peak,offset,total,increase,decrease,interpeak_intervals\n";
    for (std::size_t i = 0; i < stats.size(); ++i) {
        const auto& d = stats[i];
        out += d.tag + "," + std::to_string(d.max_run) + ",";
        out += d.onset ? std::to_string(*d.onset) : "";
        out += "," + std::to_string(d.peak_year) + ",";
        out += d.offset ? std::to_string(*d.offset) : "";
        if (auto ext = duration_stats_extended(series[i])) {
            out += "," + std::to_string(ext->total) + "," + std::to_string(ext->increase) +
                   "," + std::to_string(ext->decrease) + ",";
            for (std::size_t k = 0; k < ext->interpeak_intervals.size(); ++k) {
                if (k)
                    out += "|";
                out += std::to_string(ext->interpeak_intervals[k]);
            }
        } else {
            out += ",,,,";
        }
        out += "\n";
    }
    return out;
}

struct ClassifyOutput {
    nlohmann::ordered_json json = nlohmann::ordered_json::array();
    std::string csv = "tag,class,peak_year,lambda_or_alpha,rmse_exp,rmse_poly\n";
};

ClassifyOutput classify_corpus(const std::vector<TrendSeries>& series,
                               const PipelineOptions& opt) {
    auto stats = all_duration_stats(series);
    auto eligible = eligible_tags(stats, opt.filter);
    ClassifyOutput out;
    for (const auto& tag : eligible) {
        const TrendSeries* s = find_series(series, tag);
        const DurationStats* d = nullptr;
        for (const auto& st : stats)
            if (st.tag == tag)
                d = &st;
        const int peak_idx = d->peak_year - s->years.front();
        std::vector<double> post_peak(s->p.begin() + peak_idx, s->p.end());
        if (post_peak.size() < 4 || post_peak[0] <= 0.0)
            continue; // too close to the corpus edge to fit a decay
        TrendClassification c = fit_decay(post_peak, opt.vanish_epsilon);
        c.tag = tag;
        c.peak_year = d->peak_year;

        nlohmann::ordered_json j;
        j["tag"] = c.tag;
        j["class"] = to_string(c.cls);
        j["peak_year"] = c.peak_year;
        if (c.vanish_offset)
            j["vanish_year"] = c.peak_year + *c.vanish_offset;
        if (c.lambda)
            j["lambda"] = round6(*c.lambda);
        if (c.alpha)
            j["alpha"] = round6(*c.alpha);
        j["rmse_exp"] = round6(c.rmse_exp);
        j["rmse_poly"] = round6(c.rmse_poly);
        if (c.clamped)
            j["clamped"] = true;
        if (c.rmse_tie)
            j["rmse_tie"] = true;
        out.json.push_back(std::move(j));

        double param = c.lambda ? *c.lambda : (c.alpha ? *c.alpha : 0.0);
        out.csv += c.tag + std::string(",") + to_string(c.cls) + "," +
                   std::to_string(c.peak_year) + "," + fmt6(param) + "," +
                   fmt6(c.rmse_exp) + "," + fmt6(c.rmse_poly) + "\n";
    }
    return out;
}

std::string interpret_csv(const std::vector<TrendSeries>& series,
                          const PipelineOptions& opt) {
    std::string out = "tag,year,label,slope_gap,mean_f_c\n";
    for (const auto& s : series) {
        for (int year : s.years) {
            InterpretationLabel label;
            try {
                label = quadrant_label(s, year, opt.interpret_window);
            } catch (const InputError&) {
                continue; // window not fully defined at this year
            }
            out += s.tag + "," + std::to_string(year) + "," + to_string(label.label) +
                   "," + fmt6(label.slope_gap) + "," + fmt6(label.mean_f_c) + "\n";
        }
    }
    return out;
}

std::vector<std::string> chart_tag_selection(const std::vector<TrendSeries>& series,
                                             const PipelineOptions& opt) {
    if (!opt.chart_tags.empty())
        return opt.chart_tags;
    // top tags by peak |combined recent score|, name as tiebreak
    std::vector<std::pair<double, std::string>> ranked;
    for (const auto& s : series) {
        double best = 0.0;
        for (double v : s.f_c)
            best = std::max(best, std::abs(v));
        ranked.emplace_back(best, s.tag);
    }
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < ranked.size() && i < std::size_t(opt.max_charts); ++i)
        tags.push_back(ranked[i].second);
    return tags;
}

nlohmann::json options_json(const PipelineOptions& opt) {
    nlohmann::json j; // alphabetical keys, stable bytes
    j["format"] = opt.format == CorpusFormat::JsonLines ? "json-lines" : "csv";
    j["profile"] = opt.profile;
    j["year_min"] = opt.year_min;
    j["year_max"] = opt.year_max;
    j["hp_threshold"] = round6(opt.hp_threshold);
    j["window"] = opt.score.window;
    j["window_inclusive"] = opt.score.window_inclusive;
    j["coeff_a"] = round6(opt.score.coeff_a);
    j["coeff_b"] = round6(opt.score.coeff_b);
    j["resamples"] = opt.resamples;
    j["null_with_replacement"] = opt.null_with_replacement;
    j["min_increase_years"] = opt.filter.min_increase_years;
    j["peak_year_max"] = opt.filter.peak_year_max;
    j["vanish_epsilon"] = round6(opt.vanish_epsilon);
    j["interpret_window"] = opt.interpret_window;
    j["seed"] = opt.seed;
    j["max_charts"] = opt.max_charts;
    j["chart_tags"] = opt.chart_tags;
    return j;
}

} // namespace

Corpus resolve_corpus(const PipelineOptions& opt) {
    if (!opt.profile.empty()) {
        SynthProfile profile = make_profile(opt.profile, opt.seed);
        SynthCorpus synth = generate_corpus(profile.config, profile.specs);
        fs::create_directories(opt.out_dir);
        const fs::path corpus_path = fs::path(opt.out_dir) / "corpus.jsonl";
        write_corpus_jsonl(synth, corpus_path.string());
        write_ground_truth(synth, profile.config,
                           (fs::path(opt.out_dir) / "ground_truth.json").string());
        return load_corpus(corpus_path.string(), CorpusFormat::JsonLines,
                           profile.config.year_min, profile.config.year_max,
                           opt.hp_threshold);
    }
    if (opt.input.empty())
        throw InputError("either --input or --profile is required");
    return load_corpus(opt.input, opt.format, opt.year_min, opt.year_max,
                       opt.hp_threshold);
}

std::vector<TrendSeries> compute_all_series(const Corpus& corpus,
                                            const ScoreConfig& config) {
    std::vector<TrendSeries> out;
    for (const auto& tag : corpus.tag_names())
        out.push_back(compute_trend_series(corpus, tag, config));
    return out;
}

std::vector<std::string> run_scores(const Corpus& corpus, const PipelineOptions& opt) {
    auto series = compute_all_series(corpus, opt.score);
    write_file(fs::path(opt.out_dir) / "scores.csv", scores_csv(series));
    return {"scores.csv"};
}

std::vector<std::string> run_spca(const Corpus& corpus, const PipelineOptions& opt) {
    auto series = compute_all_series(corpus, opt.score);
    auto matrix = build_score_matrix(series);
    nlohmann::ordered_json j;
    auto corr = correlation_matrix(matrix);
    auto& jc = j["correlations"] = nlohmann::ordered_json::array();
    for (const auto& row : corr) {
        nlohmann::ordered_json jr = nlohmann::ordered_json::array();
        for (double v : row)
            jr.push_back(round6(v));
        jc.push_back(std::move(jr));
    }
    try {
        SparseLoadings loadings = sparse_pca_ladder(matrix);
        auto& jl = j["components"] = nlohmann::ordered_json::array();
        for (const auto& comp : loadings.components) {
            nlohmann::ordered_json jr = nlohmann::ordered_json::array();
            for (double v : comp)
                jr.push_back(round6(v));
            jl.push_back(std::move(jr));
        }
        j["penalty"] = round6(loadings.penalty);
        try {
            auto [a, b] = derive_combined_coefficients(loadings);
            j["combined_coefficients"] = {round6(a), round6(b)};
        } catch (const PipelineError& e) {
            j["combined_coefficients"] = nullptr;
            j["error"] = e.what();
        }
    } catch (const PipelineError& e) {
        j["components"] = nullptr;
        j["combined_coefficients"] = nullptr;
        j["error"] = e.what();
    }
    write_file(fs::path(opt.out_dir) / "spca.json", j.dump(2) + "\n");
    return {"spca.json"};
}

std::vector<std::string> run_durations(const Corpus& corpus, const PipelineOptions& opt) {
    auto series = compute_all_series(corpus, opt.score);
    auto stats = all_duration_stats(series);
    auto observed = duration_histogram(stats);
    auto null_model = null_model_histogram(series, opt.resamples, opt.seed,
                                           opt.null_with_replacement);
    write_file(fs::path(opt.out_dir) / "durations.csv", histogram_csv(observed));
    write_file(fs::path(opt.out_dir) / "durations_null.csv", histogram_csv(null_model));
    write_file(fs::path(opt.out_dir) / "duration_stats.csv",
               duration_stats_csv(stats, series));
    write_file(fs::path(opt.out_dir) / "observed_vs_null.svg",
               render_histogram_chart(observed, null_model));
    return {"durations.csv", "durations_null.csv", "duration_stats.csv",
            "observed_vs_null.svg"};
}

std::vector<std::string> run_classify(const Corpus& corpus, const PipelineOptions& opt) {
    auto series = compute_all_series(corpus, opt.score);
    auto out = classify_corpus(series, opt);
    write_file(fs::path(opt.out_dir) / "classification.json", out.json.dump(2) + "\n");
    write_file(fs::path(opt.out_dir) / "classification.csv", out.csv);
    return {"classification.json", "classification.csv"};
}

std::vector<std::string> run_interpret(const Corpus& corpus, const PipelineOptions& opt) {
    auto series = compute_all_series(corpus, opt.score);
    write_file(fs::path(opt.out_dir) / "interpret.csv", interpret_csv(series, opt));
    return {"interpret.csv"};
}

std::vector<std::string> run_report(const Corpus& corpus, const PipelineOptions& opt) {
    auto series = compute_all_series(corpus, opt.score);
    std::vector<std::string> written;
    for (const auto& tag : chart_tag_selection(series, opt)) {
        const TrendSeries* s = find_series(series, tag);
        if (!s)
            throw InputError("chart requested for unknown tag '" + tag + "'");
        const std::string rel = "charts/" + tag + ".svg";
        write_file(fs::path(opt.out_dir) / rel, render_trend_chart(*s));
        written.push_back(rel);
    }
    return written;
}

std::string run_all(const PipelineOptions& opt) {
    fs::create_directories(opt.out_dir);
    Corpus corpus = resolve_corpus(opt);

    std::vector<std::string> outputs;
    if (!opt.profile.empty()) {
        outputs.push_back("corpus.jsonl");
        outputs.push_back("ground_truth.json");
    }
    for (auto& f : run_scores(corpus, opt))
        outputs.push_back(f);
    for (auto& f : run_spca(corpus, opt))
        outputs.push_back(f);
    for (auto& f : run_durations(corpus, opt))
        outputs.push_back(f);
    for (auto& f : run_classify(corpus, opt))
        outputs.push_back(f);
    for (auto& f : run_interpret(corpus, opt))
        outputs.push_back(f);
    for (auto& f : run_report(corpus, opt))
        outputs.push_back(f);

    nlohmann::json manifest;
    manifest["tool_version"] = kToolVersion;
    manifest["config"] = options_json(opt);
    const std::string input_file =
        opt.profile.empty() ? opt.input
                            : (fs::path(opt.out_dir) / "corpus.jsonl").string();
    manifest["input"] = opt.profile.empty() ? opt.input : "corpus.jsonl";
    manifest["input_sha256"] = sha256_file_hex(input_file);
    nlohmann::json file_hashes;
    std::sort(outputs.begin(), outputs.end());
    for (const auto& rel : outputs)
        file_hashes[rel] = sha256_file_hex((fs::path(opt.out_dir) / rel).string());
    manifest["outputs"] = file_hashes;

    const std::string bytes = manifest.dump(2) + "\n";
    write_file(fs::path(opt.out_dir) / "manifest.json", bytes);
    return sha256_hex(bytes);
}

std::string manifest_hash(const std::string& out_dir) {
    std::ifstream f(fs::path(out_dir) / "manifest.json", std::ios::binary);
    if (!f)
        throw InputError("no manifest.json in " + out_dir);
    std::string bytes((std::istreambuf_iterator<char>(f)),
                      std::istreambuf_iterator<char>());
    return sha256_hex(bytes);
}

} // namespace tagtrends
