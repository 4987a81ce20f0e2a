#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace geogap {

// Six continents used for grouping, plus Unknown for unresolved institutions.
enum class Continent : std::uint8_t { AF, AS, EU, NA, OC, SA, Unknown };

inline constexpr std::array<Continent, 6> kContinents = {
    Continent::AF, Continent::AS, Continent::EU,
    Continent::NA, Continent::OC, Continent::SA,
};

constexpr std::string_view continent_code(Continent c) {
    switch (c) {
        case Continent::AF: return "AF";
        case Continent::AS: return "AS";
        case Continent::EU: return "EU";
        case Continent::NA: return "NA";
        case Continent::OC: return "OC";
        case Continent::SA: return "SA";
        case Continent::Unknown: return "UNKNOWN";
    }
    return "?";
}

constexpr std::optional<Continent> parse_continent(std::string_view s) {
    if (s == "AF") return Continent::AF;
    if (s == "AS") return Continent::AS;
    if (s == "EU") return Continent::EU;
    if (s == "NA") return Continent::NA;
    if (s == "OC") return Continent::OC;
    if (s == "SA") return Continent::SA;
    if (s == "UNKNOWN") return Continent::Unknown;
    return std::nullopt;
}

struct CountryContinent {
    std::string_view code;  // ISO 3166-1 alpha-2
    Continent continent;
};

// Frozen designation table, sorted by code. Transcontinental countries carry
// a single designated continent (see data/iso_continent.csv for the notes).
std::span<const CountryContinent> iso_continent_table();

// Total over the embedded table; throws UnknownCountryCodeError otherwise.
Continent continent_of(std::string_view alpha2);

std::optional<Continent> try_continent_of(std::string_view alpha2);

bool is_known_country(std::string_view alpha2);

}  // namespace geogap
