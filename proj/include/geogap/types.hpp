#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "geogap/continent.hpp"
#include "geogap/jcr_area.hpp"
#include "geogap/rational.hpp"

namespace geogap {

// One (paper, author, affiliation) tuple; the atomic unit of the dataset.
struct AuthorshipRecord {
    std::string paper_id;
    std::string author_name_raw;
    int author_position = 1;       // 1-based
    std::string affiliation_raw;   // may be empty
    int year = 0;
    std::string journal_id;

    bool operator==(const AuthorshipRecord&) const = default;
};

struct JournalRecord {
    std::string journal_id;
    std::string name;
    AreaSet areas;
    double impact_factor = 0.0;
    std::int64_t total_cites = 0;
    double eigenfactor = 0.0;
    int jcr_year = 0;
};

struct PaperInfo {
    std::string journal_id;
    int year = 0;
};

struct DropCounters {
    std::int64_t not_in_jcr = 0;
    std::int64_t duplicate_position = 0;
    std::int64_t paper_conflict = 0;

    std::int64_t total() const { return not_in_jcr + duplicate_position + paper_conflict; }
};

struct Corpus {
    std::vector<AuthorshipRecord> authorships;
    std::map<std::string, JournalRecord> journals;  // journal_id -> record
    std::map<std::string, PaperInfo> papers;        // paper_id -> (journal, year)
    DropCounters drops;
};

struct CountryTag {
    std::optional<std::string> country;  // ISO alpha-2
    Continent continent = Continent::Unknown;
    double confidence = 0.0;
};

enum class Gender : std::uint8_t { Female, Male, Unknown };

constexpr std::string_view gender_name(Gender g) {
    switch (g) {
        case Gender::Female: return "female";
        case Gender::Male: return "male";
        case Gender::Unknown: return "unknown";
    }
    return "?";
}

constexpr std::optional<Gender> parse_gender(std::string_view s) {
    if (s == "female") return Gender::Female;
    if (s == "male") return Gender::Male;
    if (s == "unknown") return Gender::Unknown;
    return std::nullopt;
}

enum class TagMethod : std::uint8_t {
    NameAndCountry,
    NameOnly,
    InitialsExcluded,
    BelowThreshold,
    ProviderUnavailable,
};

constexpr std::string_view tag_method_name(TagMethod m) {
    switch (m) {
        case TagMethod::NameAndCountry: return "name_and_country";
        case TagMethod::NameOnly: return "name_only";
        case TagMethod::InitialsExcluded: return "initials_excluded";
        case TagMethod::BelowThreshold: return "below_threshold";
        case TagMethod::ProviderUnavailable: return "provider_unavailable";
    }
    return "?";
}

constexpr std::optional<TagMethod> parse_tag_method(std::string_view s) {
    if (s == "name_and_country") return TagMethod::NameAndCountry;
    if (s == "name_only") return TagMethod::NameOnly;
    if (s == "initials_excluded") return TagMethod::InitialsExcluded;
    if (s == "below_threshold") return TagMethod::BelowThreshold;
    if (s == "provider_unavailable") return TagMethod::ProviderUnavailable;
    return std::nullopt;
}

struct GenderTag {
    Gender gender = Gender::Unknown;
    double probability = 0.0;
    TagMethod method = TagMethod::BelowThreshold;
};

// Per-paper gender composition classes.
enum class Bucket : std::uint8_t {
    AllFemale,
    MajorityFemale,
    Balanced,
    MajorityMale,
    AllMale,
    UnknownDominant,
};

inline constexpr std::array<Bucket, 6> kAllBuckets = {
    Bucket::AllFemale, Bucket::MajorityFemale, Bucket::Balanced,
    Bucket::MajorityMale, Bucket::AllMale, Bucket::UnknownDominant,
};

constexpr std::string_view bucket_name(Bucket b) {
    switch (b) {
        case Bucket::AllFemale: return "ALL_FEMALE";
        case Bucket::MajorityFemale: return "MAJORITY_FEMALE";
        case Bucket::Balanced: return "BALANCED";
        case Bucket::MajorityMale: return "MAJORITY_MALE";
        case Bucket::AllMale: return "ALL_MALE";
        case Bucket::UnknownDominant: return "UNKNOWN_DOMINANT";
    }
    return "?";
}

constexpr std::optional<Bucket> parse_bucket(std::string_view s) {
    for (Bucket b : kAllBuckets) {
        if (bucket_name(b) == s) return b;
    }
    return std::nullopt;
}

struct PaperGenderProfile {
    std::string paper_id;
    std::int64_t f = 0;
    std::int64_t m = 0;
    std::int64_t u = 0;
    Rational gap_index;
    Bucket bucket = Bucket::Balanced;

    std::int64_t total() const { return f + m + u; }
};

// One row of a grouped report. `key` holds one or more key parts
// (e.g. {"EU"} or {"ES","1999"}); metrics keep exact values until emission.
using MetricValue = std::variant<std::int64_t, Rational>;

struct AggregateRow {
    std::string dimension;
    std::vector<std::string> key;
    std::vector<std::pair<std::string, MetricValue>> metrics;
};

}  // namespace geogap
