#include "indalign/catalog.hpp"

#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "indalign/errors.hpp"

namespace indalign {

namespace {

using nlohmann::json;

std::size_t count_placeholder(const std::string& tmpl) {
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = tmpl.find(kTextPlaceholder, pos)) != std::string::npos) {
        ++count;
        pos += kTextPlaceholder.size();
    }
    return count;
}

IndicatorSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("catalog entry is not an object");
    for (const char* key : {"id", "name", "kind", "prompt_template"}) {
        if (!j.contains(key)) {
            throw ParseError(std::string("catalog entry missing key '") + key + "'");
        }
    }
    IndicatorSpec spec;
    spec.id = j.at("id").get<std::string>();
    spec.name = j.at("name").get<std::string>();
    spec.kind = kind_from_name(j.at("kind").get<std::string>());
    spec.prompt_template = j.at("prompt_template").get<std::string>();
    if (j.contains("intended_criterion") && !j.at("intended_criterion").is_null()) {
        spec.intended_criterion = j.at("intended_criterion").get<std::string>();
    }
    spec.description = j.value("description", "");
    return spec;
}

json spec_to_json(const IndicatorSpec& spec) {
    json j = {{"id", spec.id},
              {"name", spec.name},
              {"kind", std::string(kind_name(spec.kind))},
              {"prompt_template", spec.prompt_template}};
    if (spec.intended_criterion) j["intended_criterion"] = *spec.intended_criterion;
    if (!spec.description.empty()) j["description"] = spec.description;
    return j;
}

}  // namespace

std::string_view kind_name(IndicatorKind kind) {
    return kind == IndicatorKind::Binary ? "binary" : "list";
}

IndicatorKind kind_from_name(std::string_view name) {
    if (name == "binary") return IndicatorKind::Binary;
    if (name == "list") return IndicatorKind::List;
    throw ParseError("unknown indicator kind '" + std::string(name) + "'");
}

int Catalog::count(IndicatorKind kind) const {
    int n = 0;
    for (const auto& spec : indicators) {
        if (spec.kind == kind) ++n;
    }
    return n;
}

const IndicatorSpec* Catalog::find(const std::string& id) const {
    for (const auto& spec : indicators) {
        if (spec.id == id) return &spec;
    }
    return nullptr;
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    out.reserve(indicators.size());
    for (const auto& spec : indicators) out.push_back(spec.id);
    return out;
}

void validate(const Catalog& catalog) {
    std::unordered_set<std::string> seen;
    for (const auto& spec : catalog.indicators) {
        if (!seen.insert(spec.id).second) {
            throw DuplicateIndicatorId("duplicate indicator id '" + spec.id + "'");
        }
        std::size_t n = count_placeholder(spec.prompt_template);
        if (n != 1) {
            throw MissingPlaceholder("indicator '" + spec.id + "' template must contain " +
                                     std::string(kTextPlaceholder) + " exactly once (found " +
                                     std::to_string(n) + ")");
        }
    }
}

Catalog load_catalog(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open catalog file: " + path.string());
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_array()) {
        throw ParseError("catalog file must be a JSON array: " + path.string());
    }
    Catalog catalog;
    catalog.indicators.reserve(j.size());
    for (const auto& entry : j) catalog.indicators.push_back(spec_from_json(entry));
    validate(catalog);
    return catalog;
}

void save_catalog(const Catalog& catalog, const std::filesystem::path& path) {
    json arr = json::array();
    for (const auto& spec : catalog.indicators) arr.push_back(spec_to_json(spec));
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << arr.dump(2) << '\n';
}

std::string render_prompt(const IndicatorSpec& spec, const Submission& submission) {
    std::size_t pos = spec.prompt_template.find(kTextPlaceholder);
    if (pos == std::string::npos) {
        throw MissingPlaceholder("indicator '" + spec.id + "' template lacks " +
                                 std::string(kTextPlaceholder));
    }
    std::string prompt = spec.prompt_template;
    prompt.replace(pos, kTextPlaceholder.size(), submission.text);
    prompt += "\n\n";
    prompt += spec.kind == IndicatorKind::Binary ? kBinarySuffix : kListSuffix;
    return prompt;
}

Catalog default_catalog() {
    // Starter set reconstructed from the sociolinguistic-appropriateness
    // criterion description; users extend it via catalog files.
    auto binary = [](std::string id, std::string name, std::string question,
                     std::string criterion, std::string description) {
        IndicatorSpec s;
        s.id = std::move(id);
        s.name = std::move(name);
        s.kind = IndicatorKind::Binary;
        s.prompt_template = question + " Text: {{text}}";
        s.intended_criterion = std::move(criterion);
        s.description = std::move(description);
        return s;
    };
    auto list = [](std::string id, std::string name, std::string request, std::string criterion,
                   std::string description) {
        IndicatorSpec s;
        s.id = std::move(id);
        s.name = std::move(name);
        s.kind = IndicatorKind::List;
        s.prompt_template = request + " Text: {{text}}";
        s.intended_criterion = std::move(criterion);
        s.description = std::move(description);
        return s;
    };

    Catalog catalog;
    catalog.indicators = {
        binary("form_of_address", "Form of address", "Does this text use a form of address?",
               "sociolinguistic_appropriateness",
               "Whether the writer addresses the reader (tu/vous, salutation)."),
        binary("formality", "Formality", "Is this text written in a formal register?",
               "sociolinguistic_appropriateness",
               "Whether the overall register is formal rather than colloquial."),
        binary("neutral_register", "Neutral register",
               "Is the register of this text neutral, avoiding slang and overly casual phrasing?",
               "sociolinguistic_appropriateness", "Neutral-register check."),
        list("polite_expressions", "Polite expressions",
             "List all polite expressions used in this text.", "sociolinguistic_appropriateness",
             "Politeness conventions; the count of listed expressions is the value."),
        list("common_means_of_expression", "Common means of expression",
             "List the common, everyday means of expression used in this text.",
             "sociolinguistic_appropriateness",
             "Most common means of expression named in the criterion description."),
        list("values_and_beliefs", "Values and beliefs",
             "List the expressions in this text reflecting customs, attitudes, values or beliefs.",
             "sociolinguistic_appropriateness", "Values-and-beliefs signals."),
        list("connectors", "Connectors",
             "List all connector words and linking phrases used in this text.",
             "coherence_and_cohesion", "Cohesion devices; counts linking words."),
        list("descriptive_adjectives", "Descriptive adjectives",
             "List all descriptive adjectives used in this text.",
             "information_and_description_skills", "Density of description vocabulary."),
        list("distinct_nouns", "Distinct nouns", "List the distinct nouns used in this text.",
             "range_of_vocabulary", "Lexical range proxy."),
    };
    validate(catalog);
    return catalog;
}

}  // namespace indalign
