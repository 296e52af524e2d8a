#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tagtrends {

struct TagAssignment {
    std::string name;
    int rank = 0;      // 1-based, rank 1 = most voted
    long votes = -1;   // -1 when the input only carried ranks
    double priority = 0.0;
};

struct GameRecord {
    long app_id = 0;
    int release_year = 0;
    std::vector<TagAssignment> tags;
};

// priority(r, n) = 1 - (r-1)/n. Strictly decreasing in rank, 1 at rank 1.
double compute_priority(int rank, int n_tags);

enum class CorpusFormat { JsonLines, Csv };

// Immutable once built; safe to share across parallel readers.
class Corpus {
public:
    static Corpus build(std::vector<GameRecord> games, int year_min, int year_max,
                        double hp_threshold);

    const std::vector<int>& years() const { return years_; }
    int year_min() const { return years_.front(); }
    int year_max() const { return years_.back(); }
    double hp_threshold() const { return hp_threshold_; }

    long games_in_year(int year) const;
    long tag_count(const std::string& tag, int year) const;
    long tag_count_hp(const std::string& tag, int year) const;

    std::vector<std::string> tag_names() const;
    std::size_t n_tags() const { return tag_count_.size(); }
    long n_games() const { return n_games_; }

    // (p_i, p^h_i) per year; all-zero series for an absent tag.
    std::pair<std::vector<double>, std::vector<double>>
    yearly_proportions(const std::string& tag) const;

private:
    Corpus() = default;
    int index_of(int year) const;

    std::vector<int> years_;
    std::vector<long> games_per_year_;
    std::map<std::string, std::vector<long>> tag_count_;
    std::map<std::string, std::vector<long>> tag_count_hp_;
    double hp_threshold_ = 0.6;
    long n_games_ = 0;
};

// Parse without filtering; used by load_corpus and by tests.
std::vector<GameRecord> parse_jsonl(const std::string& path);
std::vector<GameRecord> parse_csv(const std::string& path);

Corpus load_corpus(const std::string& path, CorpusFormat format, int year_min,
                   int year_max, double hp_threshold);

} // namespace tagtrends
