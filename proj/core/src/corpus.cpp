#include "tagtrends/corpus.hpp"

#include "tagtrends/common.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace tagtrends {

double compute_priority(int rank, int n_tags) {
    if (n_tags < 1 || rank < 1 || rank > n_tags)
        throw InputError("compute_priority: rank " + std::to_string(rank) +
                         " out of range 1.." + std::to_string(n_tags));
    return 1.0 - static_cast<double>(rank - 1) / n_tags;
}

namespace {

// Ranks from votes: descending votes, ties broken by ascending tag name.
// Input carrying explicit ranks is kept as-is (after validation).
void finalize_tags(GameRecord& game, long line_no) {
    auto fail = [&](const std::string& reason) {
        throw ValidationError("line " + std::to_string(line_no) + ": " + reason);
    };
    if (game.tags.empty())
        fail("game " + std::to_string(game.app_id) + " has no tags");

    std::set<std::string> names;
    for (const auto& t : game.tags)
        if (!names.insert(t.name).second)
            fail("duplicate tag '" + t.name + "' in game " + std::to_string(game.app_id));

    const int n = static_cast<int>(game.tags.size());
    const bool has_ranks = std::all_of(game.tags.begin(), game.tags.end(),
                                       [](const TagAssignment& t) { return t.rank > 0; });
    if (has_ranks) {
        std::set<int> ranks;
        for (const auto& t : game.tags) {
            if (t.rank > n)
                fail("rank " + std::to_string(t.rank) + " exceeds tag count in game " +
                     std::to_string(game.app_id));
            if (!ranks.insert(t.rank).second)
                fail("duplicate rank in game " + std::to_string(game.app_id));
        }
    } else {
        for (const auto& t : game.tags)
            if (t.votes < 0)
                fail("tag '" + t.name + "' in game " + std::to_string(game.app_id) +
                     " has neither votes nor rank");
        std::sort(game.tags.begin(), game.tags.end(),
                  [](const TagAssignment& a, const TagAssignment& b) {
                      if (a.votes != b.votes) return a.votes > b.votes;
                      return a.name < b.name;
                  });
        for (int i = 0; i < n; ++i)
            game.tags[i].rank = i + 1;
    }
    for (auto& t : game.tags)
        t.priority = compute_priority(t.rank, n);
}

} // namespace

std::vector<GameRecord> parse_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file: " + path);
    std::vector<GameRecord> games;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": invalid JSON: " + e.what());
        }
        GameRecord g;
        try {
            g.app_id = j.at("app_id").get<long>();
            g.release_year = j.at("release_year").get<int>();
            for (const auto& jt : j.at("tags")) {
                TagAssignment t;
                t.name = jt.at("name").get<std::string>();
                if (jt.contains("votes"))
                    t.votes = jt.at("votes").get<long>();
                if (jt.contains("rank"))
                    t.rank = jt.at("rank").get<int>();
                if (t.votes < 0 && t.rank <= 0)
                    throw ValidationError("line " + std::to_string(line_no) +
                                          ": tag '" + t.name + "' lacks votes and rank");
                g.tags.push_back(std::move(t));
            }
        } catch (const nlohmann::json::exception& e) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": missing or mistyped field: " + e.what());
        }
        if (g.app_id <= 0)
            throw ValidationError("line " + std::to_string(line_no) + ": app_id must be positive");
        finalize_tags(g, line_no);
        games.push_back(std::move(g));
    }
    return games;
}

std::vector<GameRecord> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file: " + path);
    std::string line;
    long line_no = 0;
    if (!std::getline(in, line))
        throw ValidationError("line 1: empty CSV file");
    ++line_no;
    if (line != "app_id,release_year,tag,votes")
        throw ValidationError("line 1: expected header app_id,release_year,tag,votes");

    struct Partial {
        GameRecord game;
        long first_line = 0;
    };
    std::unordered_map<long, Partial> by_id;
    std::vector<long> order;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string app_s, year_s, tag, votes_s;
        if (!std::getline(ss, app_s, ',') || !std::getline(ss, year_s, ',') ||
            !std::getline(ss, tag, ',') || !std::getline(ss, votes_s))
            throw ValidationError("line " + std::to_string(line_no) + ": expected 4 fields");
        long app_id, votes;
        int year;
        try {
            app_id = std::stol(app_s);
            year = std::stoi(year_s);
            votes = std::stol(votes_s);
        } catch (const std::exception&) {
            throw ValidationError("line " + std::to_string(line_no) + ": non-numeric field");
        }
        if (votes < 0)
            throw ValidationError("line " + std::to_string(line_no) + ": negative votes");
        auto it = by_id.find(app_id);
        if (it == by_id.end()) {
            Partial p;
            p.game.app_id = app_id;
            p.game.release_year = year;
            p.first_line = line_no;
            it = by_id.emplace(app_id, std::move(p)).first;
            order.push_back(app_id);
        } else if (it->second.game.release_year != year) {
            throw ValidationError("line " + std::to_string(line_no) + ": game " +
                                  std::to_string(app_id) + " has conflicting release years");
        }
        it->second.game.tags.push_back({tag, 0, votes, 0.0});
    }
    std::vector<GameRecord> games;
    games.reserve(order.size());
    for (long id : order) {
        auto& p = by_id.at(id);
        finalize_tags(p.game, p.first_line);
        games.push_back(std::move(p.game));
    }
    return games;
}

Corpus Corpus::build(std::vector<GameRecord> games, int year_min, int year_max,
                     double hp_threshold) {
    if (year_min > year_max)
        throw InputError("year_min > year_max");
    const int n_years = year_max - year_min + 1;

    Corpus c;
    c.hp_threshold_ = hp_threshold;
    for (int y = year_min; y <= year_max; ++y)
        c.years_.push_back(y);
    c.games_per_year_.assign(n_years, 0);

    std::unordered_set<long> seen;
    for (const auto& g : games) {
        if (g.release_year < year_min || g.release_year > year_max)
            continue;
        if (!seen.insert(g.app_id).second)
            throw ValidationError("duplicate app_id " + std::to_string(g.app_id));
        const int yi = g.release_year - year_min;
        ++c.games_per_year_[yi];
        ++c.n_games_;
        for (const auto& t : g.tags) {
            auto& counts = c.tag_count_[t.name];
            if (counts.empty())
                counts.assign(n_years, 0);
            ++counts[yi];
            auto& hp = c.tag_count_hp_[t.name];
            if (hp.empty())
                hp.assign(n_years, 0);
            if (t.priority >= hp_threshold)
                ++hp[yi];
        }
    }
    if (c.n_games_ == 0)
        throw PipelineError("empty corpus after year filtering");
    for (int i = 0; i < n_years; ++i)
        if (c.games_per_year_[i] == 0)
            throw PipelineError("year " + std::to_string(year_min + i) +
                                " has zero releases; proportions undefined");
    return c;
}

int Corpus::index_of(int year) const {
    if (year < years_.front() || year > years_.back())
        throw InputError("year " + std::to_string(year) + " outside corpus range");
    return year - years_.front();
}

long Corpus::games_in_year(int year) const {
    return games_per_year_[index_of(year)];
}

long Corpus::tag_count(const std::string& tag, int year) const {
    auto it = tag_count_.find(tag);
    return it == tag_count_.end() ? 0 : it->second[index_of(year)];
}

long Corpus::tag_count_hp(const std::string& tag, int year) const {
    auto it = tag_count_hp_.find(tag);
    return it == tag_count_hp_.end() ? 0 : it->second[index_of(year)];
}

std::vector<std::string> Corpus::tag_names() const {
    std::vector<std::string> names;
    names.reserve(tag_count_.size());
    for (const auto& [name, _] : tag_count_)
        names.push_back(name);
    return names;
}

std::pair<std::vector<double>, std::vector<double>>
Corpus::yearly_proportions(const std::string& tag) const {
    const std::size_t n = years_.size();
    std::vector<double> p(n, 0.0), p_hp(n, 0.0);
    auto it = tag_count_.find(tag);
    if (it == tag_count_.end())
        return {p, p_hp};
    const auto& hp = tag_count_hp_.at(tag);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = static_cast<double>(it->second[i]) / games_per_year_[i];
        p_hp[i] = static_cast<double>(hp[i]) / games_per_year_[i];
    }
    return {p, p_hp};
}

Corpus load_corpus(const std::string& path, CorpusFormat format, int year_min,
                   int year_max, double hp_threshold) {
    auto games = format == CorpusFormat::JsonLines ? parse_jsonl(path) : parse_csv(path);
    return Corpus::build(std::move(games), year_min, year_max, hp_threshold);
}

} // namespace tagtrends
