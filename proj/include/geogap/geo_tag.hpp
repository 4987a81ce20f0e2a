#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geogap/name_clean.hpp"
#include "geogap/providers.hpp"
#include "geogap/types.hpp"

namespace geogap {

// Offline institution -> country table, consulted before any remote provider.
class Gazetteer {
public:
    static Gazetteer load(const std::filesystem::path& path);

    std::optional<std::string> find(const std::string& normalized_institution) const;
    void add(std::string normalized_institution, std::string country);
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, std::string> entries_;
};

struct GeoTagOptions {
    double min_confidence = 0.5;
};

// Resolution order: gazetteer, cache, provider. Every failure mode degrades
// to an UNKNOWN tag; provider outages additionally count as deferred so a
// re-run can retry them.
class GeoResolver {
public:
    GeoResolver(const Gazetteer* gazetteer, CachedGeoClient* client, GeoTagOptions options)
        : gazetteer_(gazetteer), client_(client), options_(options) {}

    CountryTag resolve(const CleanInstitution& institution);

    // Handles empty / letterless affiliations: (absent, UNKNOWN, 0).
    CountryTag resolve_raw(std::string_view affiliation_raw);

    std::int64_t deferred() const { return deferred_.load(); }

private:
    const Gazetteer* gazetteer_;
    CachedGeoClient* client_;
    GeoTagOptions options_;
    std::atomic<std::int64_t> deferred_{0};
};

// Percentage of authorships per continent, UNKNOWN row included; shares are
// exact rationals and sum to exactly 100 for a non-empty corpus.
std::vector<AggregateRow> continent_distribution(std::span<const CountryTag> tags);

}  // namespace geogap
