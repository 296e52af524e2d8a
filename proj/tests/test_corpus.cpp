#include "tagtrends/common.hpp"
#include "tagtrends/corpus.hpp"
#include "tagtrends/rng.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace tagtrends;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name, const std::string& content) {
        path = std::filesystem::temp_directory_path() / name;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("compute_priority basics") {
    CHECK(compute_priority(1, 10) == doctest::Approx(1.0));
    CHECK(compute_priority(10, 10) == doctest::Approx(0.1));
    CHECK(compute_priority(5, 20) == doctest::Approx(0.8));
    CHECK(compute_priority(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("priority threshold crossing at rank 9 of 20") {
    // top ranks are high-priority at the 0.6 threshold; the crossing sits
    // between rank 9 (0.6) and rank 10 (0.55)
    for (int r = 1; r <= 20; ++r) {
        const double p = compute_priority(r, 20);
        CHECK((p >= 0.6) == (r <= 9));
    }
}

TEST_CASE("compute_priority rejects out-of-range ranks") {
    CHECK_THROWS_AS(compute_priority(0, 10), InputError);
    CHECK_THROWS_AS(compute_priority(11, 10), InputError);
    CHECK_THROWS_AS(compute_priority(1, 0), InputError);
}

TEST_CASE("compute_priority strictly decreasing in rank") {
    for (int n : {1, 2, 5, 17, 450}) {
        double prev = 2.0;
        for (int r = 1; r <= n; ++r) {
            const double p = compute_priority(r, n);
            CHECK(p > 0.0);
            CHECK(p <= 1.0);
            CHECK(p < prev);
            prev = p;
        }
    }
}

TEST_CASE("load_corpus counts tags per year") {
    TempFile f("corpus_basic.jsonl", R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "PvE", "votes": 5}]}
{"app_id": 2, "release_year": 2020, "tags": [{"name": "Indie", "votes": 3}]}
{"app_id": 3, "release_year": 2020, "tags": [{"name": "Indie", "votes": 9}]}
)");
    Corpus c = load_corpus(f.path.string(), CorpusFormat::JsonLines, 2020, 2020, 0.6);
    CHECK(c.games_in_year(2020) == 3);
    CHECK(c.tag_count("PvE", 2020) == 1);
    CHECK(c.tag_count("Indie", 2020) == 2);
    CHECK(c.tag_count("absent", 2020) == 0);
}

TEST_CASE("vote ties broken by ascending tag name") {
    TempFile f("corpus_tie.jsonl", R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "B", "votes": 30}, {"name": "A", "votes": 30}, {"name": "C", "votes": 10}]}
)");
    auto games = parse_jsonl(f.path.string());
    REQUIRE(games.size() == 1);
    REQUIRE(games[0].tags.size() == 3);
    CHECK(games[0].tags[0].name == "A");
    CHECK(games[0].tags[0].rank == 1);
    CHECK(games[0].tags[1].name == "B");
    CHECK(games[0].tags[1].rank == 2);
    CHECK(games[0].tags[2].name == "C");
    CHECK(games[0].tags[2].rank == 3);
}

TEST_CASE("default year range yields 13 buckets") {
    std::string lines;
    for (int y = 2010; y <= 2026; ++y)
        lines += R"({"app_id": )" + std::to_string(y) +
                 R"(, "release_year": )" + std::to_string(y) +
                 R"(, "tags": [{"name": "T", "votes": 1}]})" + "\n";
    TempFile f("corpus_years.jsonl", lines);
    Corpus c = load_corpus(f.path.string(), CorpusFormat::JsonLines, 2012, 2024, 0.6);
    CHECK(c.years().size() == 13);
    CHECK(c.year_min() == 2012);
    CHECK(c.year_max() == 2024);
    CHECK(c.n_games() == 13); // out-of-range games dropped
}

TEST_CASE("duplicate app_id rejected") {
    TempFile f("corpus_dup.jsonl", R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "A", "votes": 1}]}
{"app_id": 1, "release_year": 2020, "tags": [{"name": "B", "votes": 1}]}
)");
    CHECK_THROWS_AS(load_corpus(f.path.string(), CorpusFormat::JsonLines, 2020, 2020, 0.6),
                    ValidationError);
}

TEST_CASE("malformed record reports the line number") {
    TempFile f("corpus_bad.jsonl", R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "A", "votes": 1}]}
{"app_id": 2, "release_year": "twenty-twenty", "tags": []}
)");
    try {
        parse_jsonl(f.path.string());
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("empty corpus after filtering is fatal") {
    TempFile f("corpus_empty.jsonl", R"({"app_id": 1, "release_year": 1999, "tags": [{"name": "A", "votes": 1}]}
)");
    CHECK_THROWS_AS(load_corpus(f.path.string(), CorpusFormat::JsonLines, 2012, 2024, 0.6),
                    PipelineError);
}

TEST_CASE("zero-release year inside the range is fatal") {
    TempFile f("corpus_gap.jsonl", R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "A", "votes": 1}]}
{"app_id": 2, "release_year": 2022, "tags": [{"name": "A", "votes": 1}]}
)");
    CHECK_THROWS_AS(load_corpus(f.path.string(), CorpusFormat::JsonLines, 2020, 2022, 0.6),
                    PipelineError);
}

TEST_CASE("csv rows group by app_id in any order") {
    TempFile f("corpus.csv",
               "app_id,release_year,tag,votes\n"
               "1,2020,Action,50\n"
               "2,2020,Indie,10\n"
               "1,2020,Indie,30\n");
    Corpus c = load_corpus(f.path.string(), CorpusFormat::Csv, 2020, 2020, 0.6);
    CHECK(c.games_in_year(2020) == 2);
    CHECK(c.tag_count("Indie", 2020) == 2);
    CHECK(c.tag_count("Action", 2020) == 1);
    // Action outranks Indie in game 1
    auto games = parse_csv(f.path.string());
    CHECK(games[0].tags[0].name == "Action");
    CHECK(games[0].tags[0].rank == 1);
}

TEST_CASE("yearly proportions") {
    std::string lines;
    for (int i = 1; i <= 50; ++i) {
        std::string tags = R"([{"name": "filler", "votes": 1}])";
        if (i <= 5)
            tags = R"([{"name": "Roguelike", "votes": 9}, {"name": "filler", "votes": 1}])";
        if (i > 2 && i <= 5) // ranks 2 of 2 -> priority 0.5, below threshold
            tags = R"([{"name": "filler", "votes": 9}, {"name": "Roguelike", "votes": 1}])";
        lines += R"({"app_id": )" + std::to_string(i) +
                 R"(, "release_year": 2020, "tags": )" + tags + "}\n";
    }
    TempFile f("corpus_prop.jsonl", lines);
    Corpus c = load_corpus(f.path.string(), CorpusFormat::JsonLines, 2020, 2020, 0.6);
    auto [p, p_hp] = c.yearly_proportions("Roguelike");
    CHECK(p[0] == doctest::Approx(0.1));    // 5 of 50
    CHECK(p_hp[0] == doctest::Approx(0.04)); // 2 of 50 carry it at rank 1
    auto [pa, pa_hp] = c.yearly_proportions("never-used");
    CHECK(pa[0] == 0.0);
    CHECK(pa_hp[0] == 0.0);
}

TEST_CASE("p_hp <= p <= 1 for random corpora") {
    Rng rng(99);
    std::vector<GameRecord> games;
    for (int i = 1; i <= 300; ++i) {
        GameRecord g;
        g.app_id = i;
        g.release_year = 2015 + static_cast<int>(rng.below(5));
        const int n = 1 + static_cast<int>(rng.below(8));
        for (int t = 0; t < n; ++t)
            g.tags.push_back({"tag" + std::to_string(rng.below(12)), t + 1, 0, 0.0});
        // dedupe names, reassign contiguous ranks
        std::vector<TagAssignment> unique;
        for (auto& t : g.tags) {
            bool seen = false;
            for (auto& u : unique)
                seen = seen || u.name == t.name;
            if (!seen)
                unique.push_back(t);
        }
        for (std::size_t k = 0; k < unique.size(); ++k) {
            unique[k].rank = static_cast<int>(k) + 1;
            unique[k].priority =
                compute_priority(unique[k].rank, static_cast<int>(unique.size()));
        }
        g.tags = unique;
        games.push_back(std::move(g));
    }
    Corpus c = Corpus::build(games, 2015, 2019, 0.6);
    for (const auto& tag : c.tag_names()) {
        auto [p, p_hp] = c.yearly_proportions(tag);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(p_hp[i] >= 0.0);
            CHECK(p_hp[i] <= p[i]);
            CHECK(p[i] <= 1.0);
        }
    }
    // every game has >= 1 tag, so summed tag counts bound the release count
    for (int y : c.years()) {
        long total = 0;
        for (const auto& tag : c.tag_names())
            total += c.tag_count(tag, y);
        CHECK(total >= c.games_in_year(y));
    }
}

TEST_CASE("load is independent of record order") {
    const char* fwd = R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "A", "votes": 5}]}
{"app_id": 2, "release_year": 2021, "tags": [{"name": "B", "votes": 5}, {"name": "A", "votes": 2}]}
)";
    const char* rev = R"({"app_id": 2, "release_year": 2021, "tags": [{"name": "B", "votes": 5}, {"name": "A", "votes": 2}]}
{"app_id": 1, "release_year": 2020, "tags": [{"name": "A", "votes": 5}]}
)";
    TempFile f1("corpus_fwd.jsonl", fwd), f2("corpus_rev.jsonl", rev);
    Corpus a = load_corpus(f1.path.string(), CorpusFormat::JsonLines, 2020, 2021, 0.6);
    Corpus b = load_corpus(f2.path.string(), CorpusFormat::JsonLines, 2020, 2021, 0.6);
    CHECK(a.tag_names() == b.tag_names());
    for (const auto& tag : a.tag_names())
        for (int y : a.years()) {
            CHECK(a.tag_count(tag, y) == b.tag_count(tag, y));
            CHECK(a.tag_count_hp(tag, y) == b.tag_count_hp(tag, y));
        }
}

TEST_CASE("explicit ranks accepted in place of votes") {
    TempFile f("corpus_rank.jsonl", R"({"app_id": 1, "release_year": 2020, "tags": [{"name": "A", "rank": 2}, {"name": "B", "rank": 1}]}
)");
    auto games = parse_jsonl(f.path.string());
    CHECK(games[0].tags[0].name == "A");
    CHECK(games[0].tags[0].rank == 2);
    CHECK(games[0].tags[0].priority == doctest::Approx(0.5));
    CHECK(games[0].tags[1].priority == doctest::Approx(1.0));
}
