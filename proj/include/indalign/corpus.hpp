#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "indalign/matrix.hpp"

namespace indalign {

// One student text. Text is stored verbatim apart from outer whitespace.
struct Submission {
    std::string id;
    std::string text;
    std::string task_id;
    std::string language_code;
};

// One row of the feedback grid. `ordinal` is the 1-based grid position.
struct CriterionId {
    std::string id;
    std::string display_name;
    int ordinal = 0;
};

struct RatingScale {
    double min = 0.0;
    double max = 4.0;
};

// Per-criterion scores one rater gave to one submission.
struct RubricRating {
    std::string submission_id;
    std::string rater_id;
    std::map<std::string, double> scores;  // criterion id -> score
    double scale_min = 0.0;
    double scale_max = 4.0;
};

struct Corpus {
    std::vector<Submission> submissions;
    std::vector<RubricRating> ratings;
    std::vector<CriterionId> criteria;

    const Submission* find_submission(const std::string& id) const;
    const CriterionId* find_criterion(const std::string& id) const;
};

enum class SubmissionFormat { JsonLines, Csv };

// The ten-row grid the extraction pipeline targets by default.
std::vector<CriterionId> default_criteria();

struct CorpusPaths {
    std::filesystem::path submissions;
    std::filesystem::path ratings;   // empty -> corpus without ratings
    std::filesystem::path criteria;  // empty -> default_criteria()
};

// Loads and validates a corpus. Throws ParseError on malformed records
// (line numbers reported) and IntegrityError on duplicate ids, dangling
// rating references or out-of-scale scores.
Corpus load_corpus(const CorpusPaths& paths, SubmissionFormat format, RatingScale scale = {});

// Directory convention: submissions.jsonl|submissions.csv, ratings.csv, criteria.json.
Corpus load_corpus(const std::filesystem::path& dir, SubmissionFormat format, RatingScale scale = {});
void save_corpus(const Corpus& corpus, const std::filesystem::path& dir, SubmissionFormat format);

void validate(const Corpus& corpus);

std::vector<Submission> load_submissions_jsonl(const std::filesystem::path& path);
std::vector<Submission> load_submissions_csv(const std::filesystem::path& path);
std::vector<CriterionId> load_criteria(const std::filesystem::path& path);
std::vector<RubricRating> load_ratings_csv(const std::filesystem::path& path,
                                           const std::vector<CriterionId>& criteria,
                                           RatingScale scale = {});

// Teacher-rating matrix: rows = submissions in corpus order, columns = criteria.
// Multiple raters for one submission aggregate by arithmetic mean; unrated
// cells stay missing. Throws UnknownCriterion for criteria outside the corpus.
ValueMatrix rating_matrix(const Corpus& corpus);
ValueMatrix rating_matrix(const Corpus& corpus, const std::vector<CriterionId>& criteria);

}  // namespace indalign
