#include "indalign/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "csv.hpp"
#include "indalign/errors.hpp"
#include "indalign/hash.hpp"

namespace indalign {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

Submission submission_from_json(const json& j, long line) {
    if (!j.is_object()) throw ParseError("submission record is not an object", line);
    for (const char* key : {"id", "text", "task_id", "language_code"}) {
        if (!j.contains(key) || !j.at(key).is_string()) {
            throw ParseError(std::string("submission record missing string key '") + key + "'",
                             line);
        }
    }
    Submission s;
    s.id = j.at("id").get<std::string>();
    s.text = trim(j.at("text").get<std::string>());
    s.task_id = j.at("task_id").get<std::string>();
    s.language_code = j.at("language_code").get<std::string>();
    return s;
}

double parse_score(const std::string& cell, long line) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ParseError("bad score cell '" + cell + "'", line);
    }
    return v;
}

}  // namespace

const Submission* Corpus::find_submission(const std::string& id) const {
    for (const auto& s : submissions) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

const CriterionId* Corpus::find_criterion(const std::string& id) const {
    for (const auto& c : criteria) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::vector<CriterionId> default_criteria() {
    static const std::pair<const char*, const char*> grid[] = {
        {"consideration_of_task", "Consideration of the task"},
        {"sociolinguistic_appropriateness", "Sociolinguistic appropriateness"},
        {"information_and_description_skills", "Information and description skills"},
        {"general_mediation_skills", "General mediation skills"},
        {"coherence_and_cohesion", "Coherence and cohesion"},
        {"range_of_vocabulary", "Range of vocabulary"},
        {"mastery_of_vocabulary", "Mastery of vocabulary"},
        {"mastery_of_spelling", "Mastery of spelling"},
        {"grammatical_correctness", "Grammatical correctness"},
        {"morphosyntax", "Morphosyntax"},
    };
    std::vector<CriterionId> out;
    out.reserve(std::size(grid));
    int ordinal = 1;
    for (const auto& [id, name] : grid) out.push_back({id, name, ordinal++});
    return out;
}

std::vector<Submission> load_submissions_jsonl(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open submissions file: " + path.string());
    std::vector<Submission> out;
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON record", line_no);
        out.push_back(submission_from_json(j, line_no));
    }
    return out;
}

std::vector<Submission> load_submissions_csv(const std::filesystem::path& path) {
    auto records = csv::read_records(path);
    std::vector<Submission> out;
    if (records.empty()) return out;
    const std::vector<std::string> expected = {"id", "text", "task_id", "language_code"};
    if (records.front().fields != expected) {
        throw ParseError("submissions csv header must be id,text,task_id,language_code",
                         records.front().line);
    }
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != expected.size()) {
            throw ParseError("submission row has " + std::to_string(rec.fields.size()) +
                                 " fields, expected 4",
                             rec.line);
        }
        out.push_back({rec.fields[0], trim(rec.fields[1]), rec.fields[2], rec.fields[3]});
    }
    return out;
}

std::vector<CriterionId> load_criteria(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open criteria file: " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw ParseError("criteria file must be a JSON array: " + path.string());
    }
    std::vector<CriterionId> out;
    int ordinal = 1;
    for (const auto& entry : j) {
        if (!entry.is_object() || !entry.contains("id")) {
            throw ParseError("criteria entries need an 'id' key: " + path.string());
        }
        CriterionId c;
        c.id = entry.at("id").get<std::string>();
        c.display_name = entry.value("display_name", c.id);
        c.ordinal = ordinal++;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<RubricRating> load_ratings_csv(const std::filesystem::path& path,
                                           const std::vector<CriterionId>& criteria,
                                           RatingScale scale) {
    auto records = csv::read_records(path);
    std::vector<RubricRating> out;
    if (records.empty()) return out;  // header-less empty file: trivially no ratings

    const auto& header = records.front().fields;
    if (header.size() < 2 || header[0] != "submission_id" || header[1] != "rater_id") {
        throw ParseError("ratings csv header must start with submission_id,rater_id",
                         records.front().line);
    }
    for (std::size_t j = 2; j < header.size(); ++j) {
        bool known = std::any_of(criteria.begin(), criteria.end(),
                                 [&](const CriterionId& c) { return c.id == header[j]; });
        if (!known) {
            throw UnknownCriterion("ratings csv names unknown criterion '" + header[j] + "'");
        }
    }
    for (std::size_t r = 1; r < records.size(); ++r) {
        const auto& rec = records[r];
        if (rec.fields.size() != header.size()) {
            throw ParseError("rating row has " + std::to_string(rec.fields.size()) +
                                 " fields, expected " + std::to_string(header.size()),
                             rec.line);
        }
        RubricRating rating;
        rating.submission_id = rec.fields[0];
        rating.rater_id = rec.fields[1];
        rating.scale_min = scale.min;
        rating.scale_max = scale.max;
        for (std::size_t j = 2; j < header.size(); ++j) {
            if (rec.fields[j].empty()) continue;  // missing, never imputed
            rating.scores[header[j]] = parse_score(rec.fields[j], rec.line);
        }
        out.push_back(std::move(rating));
    }
    return out;
}

void validate(const Corpus& corpus) {
    std::unordered_set<std::string> submission_ids;
    for (const auto& s : corpus.submissions) {
        if (!submission_ids.insert(s.id).second) {
            throw IntegrityError("duplicate submission id '" + s.id + "'");
        }
        if (s.text.empty()) {
            throw IntegrityError("submission '" + s.id + "' has empty text");
        }
    }
    std::unordered_set<std::string> criterion_ids;
    for (const auto& c : corpus.criteria) {
        if (!criterion_ids.insert(c.id).second) {
            throw IntegrityError("duplicate criterion id '" + c.id + "'");
        }
    }
    std::set<std::pair<std::string, std::string>> rating_keys;
    for (const auto& r : corpus.ratings) {
        if (!submission_ids.count(r.submission_id)) {
            throw IntegrityError("rating references unknown submission '" + r.submission_id + "'");
        }
        if (!rating_keys.insert({r.submission_id, r.rater_id}).second) {
            throw IntegrityError("duplicate rating for submission '" + r.submission_id +
                                 "' by rater '" + r.rater_id + "'");
        }
        for (const auto& [criterion, score] : r.scores) {
            if (!criterion_ids.count(criterion)) {
                throw IntegrityError("rating scores unknown criterion '" + criterion + "'");
            }
            if (score < r.scale_min || score > r.scale_max) {
                throw IntegrityError("score " + format_double(score) + " for submission '" +
                                     r.submission_id + "' outside scale [" +
                                     format_double(r.scale_min) + ", " +
                                     format_double(r.scale_max) + "]");
            }
        }
    }
}

Corpus load_corpus(const CorpusPaths& paths, SubmissionFormat format, RatingScale scale) {
    Corpus corpus;
    corpus.submissions = format == SubmissionFormat::JsonLines
                             ? load_submissions_jsonl(paths.submissions)
                             : load_submissions_csv(paths.submissions);
    corpus.criteria = paths.criteria.empty() ? default_criteria() : load_criteria(paths.criteria);
    if (!paths.ratings.empty()) {
        corpus.ratings = load_ratings_csv(paths.ratings, corpus.criteria, scale);
    }
    validate(corpus);
    return corpus;
}

Corpus load_corpus(const std::filesystem::path& dir, SubmissionFormat format, RatingScale scale) {
    CorpusPaths paths;
    paths.submissions =
        dir / (format == SubmissionFormat::JsonLines ? "submissions.jsonl" : "submissions.csv");
    if (std::filesystem::exists(dir / "ratings.csv")) paths.ratings = dir / "ratings.csv";
    if (std::filesystem::exists(dir / "criteria.json")) paths.criteria = dir / "criteria.json";
    return load_corpus(paths, format, scale);
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& dir, SubmissionFormat format) {
    std::filesystem::create_directories(dir);

    if (format == SubmissionFormat::JsonLines) {
        std::ofstream out(dir / "submissions.jsonl", std::ios::binary);
        for (const auto& s : corpus.submissions) {
            json j = {{"id", s.id},
                      {"text", s.text},
                      {"task_id", s.task_id},
                      {"language_code", s.language_code}};
            out << j.dump() << '\n';
        }
    } else {
        std::ofstream out(dir / "submissions.csv", std::ios::binary);
        csv::write_row(out, {"id", "text", "task_id", "language_code"});
        for (const auto& s : corpus.submissions) {
            csv::write_row(out, {s.id, s.text, s.task_id, s.language_code});
        }
    }

    {
        std::ofstream out(dir / "ratings.csv", std::ios::binary);
        std::vector<std::string> header = {"submission_id", "rater_id"};
        for (const auto& c : corpus.criteria) header.push_back(c.id);
        csv::write_row(out, header);
        for (const auto& r : corpus.ratings) {
            std::vector<std::string> row = {r.submission_id, r.rater_id};
            for (const auto& c : corpus.criteria) {
                auto it = r.scores.find(c.id);
                row.push_back(it == r.scores.end() ? std::string() : format_double(it->second));
            }
            csv::write_row(out, row);
        }
    }

    {
        json arr = json::array();
        for (const auto& c : corpus.criteria) {
            arr.push_back({{"id", c.id}, {"display_name", c.display_name}});
        }
        std::ofstream out(dir / "criteria.json", std::ios::binary);
        out << arr.dump(2) << '\n';
    }
}

ValueMatrix rating_matrix(const Corpus& corpus) { return rating_matrix(corpus, corpus.criteria); }

ValueMatrix rating_matrix(const Corpus& corpus, const std::vector<CriterionId>& criteria) {
    for (const auto& c : criteria) {
        if (!corpus.find_criterion(c.id)) {
            throw UnknownCriterion("criterion '" + c.id + "' not in corpus");
        }
    }

    ValueMatrix m;
    m.row_ids.reserve(corpus.submissions.size());
    for (const auto& s : corpus.submissions) m.row_ids.push_back(s.id);
    m.column_ids.reserve(criteria.size());
    for (const auto& c : criteria) m.column_ids.push_back(c.id);
    m.values = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(m.row_ids.size()),
                                         static_cast<Eigen::Index>(m.column_ids.size()), kMissing);

    std::unordered_map<std::string, Eigen::Index> row_of;
    for (std::size_t i = 0; i < m.row_ids.size(); ++i) {
        row_of[m.row_ids[i]] = static_cast<Eigen::Index>(i);
    }

    // Mean over raters, computed per cell so partially-missing raters only
    // dilute the cells they actually scored.
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(m.values.rows(), m.values.cols());
    Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(m.values.rows(), m.values.cols());
    for (const auto& r : corpus.ratings) {
        auto it = row_of.find(r.submission_id);
        if (it == row_of.end()) continue;
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            auto score = r.scores.find(criteria[j].id);
            if (score == r.scores.end()) continue;
            sums(it->second, static_cast<Eigen::Index>(j)) += score->second;
            counts(it->second, static_cast<Eigen::Index>(j)) += 1.0;
        }
    }
    for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.values.cols(); ++j) {
            if (counts(i, j) > 0) m.values(i, j) = sums(i, j) / counts(i, j);
        }
    }
    return m;
}

}  // namespace indalign
