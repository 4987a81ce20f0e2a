#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "geogap/types.hpp"

namespace geogap {

// Normalized author name with the gender-inference key.
struct CleanName {
    std::string raw;
    std::string first_token;  // given-name key, diacritics preserved; empty when initials_only
    bool initials_only = false;
    std::string normalized;   // lowercase, diacritics stripped; the provider cache key
};

struct CleanInstitution {
    std::string raw;
    std::string normalized;  // trimmed, whitespace-collapsed, case preserved
};

// Token order of the raw name field. MAG-style exports carry "given family".
enum class NameOrder { GivenFamily, FamilyGiven };

// Extracts the given-name key. Throws EmptyNameError on empty/whitespace input.
CleanName normalize_name(std::string_view raw, NameOrder order = NameOrder::GivenFamily);
std::optional<CleanName> try_normalize_name(std::string_view raw,
                                            NameOrder order = NameOrder::GivenFamily);

// Throws EmptyInstitutionError when nothing remains (no letters).
CleanInstitution clean_institution(std::string_view raw);
std::optional<CleanInstitution> try_clean_institution(std::string_view raw);

struct NameKeySets {
    std::set<std::string> names;
    std::set<std::pair<std::string, std::string>> name_country_pairs;
};

// Deduplicated normalized first names; initials-only names excluded from both
// sets. `country_of` may be null (no pairs) or return nullopt per record.
NameKeySets distinct_name_keys(
    std::span<const AuthorshipRecord> authorships, NameOrder order,
    const std::function<std::optional<std::string>(const AuthorshipRecord&)>& country_of);

namespace utf8 {

bool is_valid(std::string_view s);

// Decodes the codepoint at byte offset i, advancing i. Returns nullopt on
// malformed input (i is advanced by one byte).
std::optional<char32_t> decode_next(std::string_view s, std::size_t& i);

void append(std::string& out, char32_t cp);

// Canonical composition for the Latin range (base + combining mark ->
// precomposed). Non-Latin text passes through unchanged.
std::string compose_nfc_latin(std::string_view s);

// Lowercases and maps Latin letters to their ASCII base; drops combining
// marks. Other scripts pass through unchanged.
std::string fold_to_key(std::string_view s);

}  // namespace utf8

}  // namespace geogap
