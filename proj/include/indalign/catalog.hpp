#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indalign/corpus.hpp"

namespace indalign {

// Binary prompts yield YES/NO, list prompts yield a JSON container whose
// element count becomes the indicator value.
enum class IndicatorKind { Binary, List };

std::string_view kind_name(IndicatorKind kind);
IndicatorKind kind_from_name(std::string_view name);  // "binary" | "list"

inline constexpr std::string_view kTextPlaceholder = "{{text}}";

// Output-format suffixes appended to every rendered prompt, byte-identical
// across calls. Do not edit: downstream response parsing assumes them.
inline constexpr std::string_view kBinarySuffix =
    "Respond exclusively with YES for yes and NO for no.";
inline constexpr std::string_view kListSuffix =
    "Do not list any errors. Return the list in JSON format {key:data}";

struct IndicatorSpec {
    std::string id;
    std::string name;
    IndicatorKind kind = IndicatorKind::Binary;
    std::string prompt_template;  // contains {{text}} exactly once
    std::optional<std::string> intended_criterion;
    std::string description;
};

struct Catalog {
    std::vector<IndicatorSpec> indicators;

    int count(IndicatorKind kind) const;
    const IndicatorSpec* find(const std::string& id) const;
    std::vector<std::string> ids() const;
};

// Throws ParseError, DuplicateIndicatorId or MissingPlaceholder.
Catalog load_catalog(const std::filesystem::path& path);
void save_catalog(const Catalog& catalog, const std::filesystem::path& path);
void validate(const Catalog& catalog);

// Substitutes the submission text for {{text}} and appends the kind's suffix
// after exactly one blank line. The result is byte-deterministic.
std::string render_prompt(const IndicatorSpec& spec, const Submission& submission);

// Starter catalog reconstructed from the grid's criterion descriptions
// (sociolinguistic appropriateness indicators and a few companions).
// Extend or replace it via a catalog file.
Catalog default_catalog();

}  // namespace indalign
