#include "tagtrends/common.hpp"
#include "tagtrends/fetch.hpp"
#include "tagtrends/pipeline.hpp"
#include "tagtrends/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string_view>

namespace fs = std::filesystem;
using namespace tagtrends;

namespace {

// Registered once on the top app: config-file processing only happens there,
// and fallthrough lets the flags appear after the subcommand name.
void add_common_options(CLI::App* cmd, PipelineOptions& opt, std::string& format) {
    cmd->add_option("--input", opt.input, "Corpus file (JSON-lines or CSV)");
    cmd->add_option("--format", format, "Input format: json-lines or csv")
        ->check(CLI::IsMember({"json-lines", "csv"}))
        ->capture_default_str();
    cmd->add_option("--profile", opt.profile,
                    "Synthetic profile instead of an input file "
                    "(planted-4yr, classify-mix, small)");
    cmd->add_option("--year-min", opt.year_min)->capture_default_str();
    cmd->add_option("--year-max", opt.year_max)->capture_default_str();
    cmd->add_option("--hp-threshold", opt.hp_threshold)->capture_default_str();
    cmd->add_option("--window", opt.score.window)->capture_default_str();
    cmd->add_flag("--window-inclusive", opt.score.window_inclusive,
                  "Include the year itself in its recent benchmark window");
    cmd->add_option("--coeff-a", opt.score.coeff_a)->capture_default_str();
    cmd->add_option("--coeff-b", opt.score.coeff_b)->capture_default_str();
    cmd->add_option("--resamples", opt.resamples)->capture_default_str();
    cmd->add_flag("--null-with-replacement", opt.null_with_replacement,
                  "Null model draws with replacement instead of permuting");
    cmd->add_option("--min-increase", opt.filter.min_increase_years)
        ->capture_default_str();
    cmd->add_option("--peak-year-max", opt.filter.peak_year_max)->capture_default_str();
    cmd->add_option("--epsilon", opt.vanish_epsilon, "Relative vanish floor")
        ->capture_default_str();
    cmd->add_option("--interpret-window", opt.interpret_window)->capture_default_str();
    cmd->add_option("--seed", opt.seed)->capture_default_str();
    cmd->add_option("--out-dir", opt.out_dir)->capture_default_str();
    cmd->add_option("--chart-tag", opt.chart_tags, "Tags to chart (repeatable)");
    cmd->add_option("--max-charts", opt.max_charts)->capture_default_str();
    cmd->set_config("--config")->configurable(false);
}

int fail(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tag trend mining over yearly game releases"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    PipelineOptions opt;
    std::string format = "json-lines";
    std::string scores_tag;
    bool scores_chart = false;
    std::string fetch_url, fetch_cache = "cache";

    auto* validate = app.add_subcommand("validate", "Load and validate a corpus");
    auto* scores = app.add_subcommand("scores", "Trend score curves (scores.csv)");
    scores->add_option("--tag", scores_tag, "Restrict output to one tag");
    scores->add_flag("--chart", scores_chart, "Also render the tag's curve chart");
    auto* spca = app.add_subcommand("spca", "Correlations and sparse PCA (spca.json)");
    auto* durations =
        app.add_subcommand("durations", "Run-length histograms and the null model");
    auto* classify = app.add_subcommand("classify", "Fad/fashion/classic classification");
    auto* interpret = app.add_subcommand("interpret", "Quadrant labels (interpret.csv)");
    auto* report = app.add_subcommand("report", "Trend charts (charts/)");
    auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
    auto* all = app.add_subcommand("all", "Full pipeline in dependency order");
    auto* fetch = app.add_subcommand("fetch", "Download a dump into the cache");
    fetch->add_option("--url", fetch_url)->required();
    fetch->add_option("--cache-dir", fetch_cache)->capture_default_str();

    add_common_options(&app, opt, format);
    for (auto* cmd : {validate, scores, spca, durations, classify, interpret, report,
                      synth, all, fetch})
        cmd->fallthrough();

    // precedence: --seed flag, then TREND_SEED, then the config file
    bool seed_flag = false;
    for (int i = 1; i < argc; ++i) {
        const std::string_view a = argv[i];
        if (a == "--seed" || a.rfind("--seed=", 0) == 0)
            seed_flag = true;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }
    opt.format = format == "csv" ? CorpusFormat::Csv : CorpusFormat::JsonLines;
    if (!seed_flag) {
        if (const char* env = std::getenv("TREND_SEED")) {
            try {
                opt.seed = std::stoull(env);
            } catch (const std::exception&) {
                return fail("TREND_SEED is not an unsigned integer");
            }
        }
    }

    try {
        if (fetch->parsed()) {
            std::cout << fetch_remote(fetch_url, fetch_cache) << "\n";
            return 0;
        }
        if (synth->parsed()) {
            if (opt.profile.empty())
                return fail("synth: --profile is required");
            SynthProfile profile = make_profile(opt.profile, opt.seed);
            SynthCorpus corpus = generate_corpus(profile.config, profile.specs);
            fs::create_directories(opt.out_dir);
            const auto corpus_path = fs::path(opt.out_dir) / "corpus.jsonl";
            write_corpus_jsonl(corpus, corpus_path.string());
            write_ground_truth(corpus, profile.config,
                               (fs::path(opt.out_dir) / "ground_truth.json").string());
            std::cout << corpus_path.string() << "\n";
            return 0;
        }

        Corpus corpus = resolve_corpus(opt);
        if (validate->parsed()) {
            std::cout << "games: " << corpus.n_games() << "\ntags: " << corpus.n_tags()
                      << "\nyears: " << corpus.year_min() << "-" << corpus.year_max()
                      << "\n";
            for (int y : corpus.years())
                std::cout << "  " << y << ": " << corpus.games_in_year(y) << "\n";
            return 0;
        }
        if (scores->parsed()) {
            if (!scores_tag.empty()) {
                TrendSeries s = compute_trend_series(corpus, scores_tag, opt.score);
                fs::create_directories(opt.out_dir);
                std::ofstream csv(fs::path(opt.out_dir) / (scores_tag + "_scores.csv"));
                csv << "year,p,p_hp,f,f_hp,f_r,f_hp_r,f_c\n";
                for (std::size_t i = 0; i < s.years.size(); ++i) {
                    csv << s.years[i] << "," << fmt6(s.p[i]) << "," << fmt6(s.p_hp[i])
                        << "," << fmt6(s.f[i]) << "," << fmt6(s.f_hp[i]);
                    const int ri = static_cast<int>(i) - s.recent_offset;
                    if (ri >= 0 && ri < static_cast<int>(s.f_r.size()))
                        csv << "," << fmt6(s.f_r[ri]) << "," << fmt6(s.f_hp_r[ri]) << ","
                            << fmt6(s.f_c[ri]);
                    else
                        csv << ",,,";
                    csv << "\n";
                }
                if (scores_chart) {
                    std::ofstream svg(fs::path(opt.out_dir) / (scores_tag + ".svg"));
                    svg << render_trend_chart(s);
                }
            } else {
                run_scores(corpus, opt);
            }
            return 0;
        }
        if (spca->parsed()) {
            run_spca(corpus, opt);
            return 0;
        }
        if (durations->parsed()) {
            run_durations(corpus, opt);
            return 0;
        }
        if (classify->parsed()) {
            run_classify(corpus, opt);
            return 0;
        }
        if (interpret->parsed()) {
            run_interpret(corpus, opt);
            return 0;
        }
        if (report->parsed()) {
            run_report(corpus, opt);
            return 0;
        }
        if (all->parsed()) {
            std::cout << "manifest " << run_all(opt) << "\n";
            return 0;
        }
    } catch (const ValidationError& e) {
        return fail(std::string("validation: ") + e.what());
    } catch (const InputError& e) {
        return fail(std::string("input: ") + e.what());
    } catch (const FetchFatalError& e) {
        return fail(std::string("fetch: ") + e.what());
    } catch (const FetchRetryableError& e) {
        return fail(std::string("fetch (retryable): ") + e.what());
    } catch (const PipelineError& e) {
        return fail(std::string("pipeline: ") + e.what());
    }
    return 0;
}
