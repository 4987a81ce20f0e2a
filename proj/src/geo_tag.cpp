#include "geogap/geo_tag.hpp"

#include <fstream>

#include "geogap/errors.hpp"

namespace geogap {

Gazetteer Gazetteer::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open gazetteer " + path.string());
    Gazetteer g;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw MalformedRowError(line_no, "gazetteer needs 2 columns");
        }
        g.add(line.substr(0, tab), line.substr(tab + 1));
    }
    return g;
}

std::optional<std::string> Gazetteer::find(const std::string& normalized_institution) const {
    auto it = entries_.find(normalized_institution);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void Gazetteer::add(std::string normalized_institution, std::string country) {
    entries_[std::move(normalized_institution)] = std::move(country);
}

namespace {

CountryTag unknown_tag() {
    return CountryTag{std::nullopt, Continent::Unknown, 0.0};
}

CountryTag tag_for(const std::string& country, double confidence) {
    auto continent = try_continent_of(country);
    if (!continent) return unknown_tag();
    return CountryTag{country, *continent, confidence};
}

}  // namespace

CountryTag GeoResolver::resolve(const CleanInstitution& institution) {
    if (gazetteer_) {
        if (auto country = gazetteer_->find(institution.normalized)) {
            return tag_for(*country, 1.0);
        }
    }
    if (!client_) return unknown_tag();

    auto res = client_->lookup(institution.normalized);
    if (!res.ok()) {
        deferred_.fetch_add(1);
        return unknown_tag();
    }
    if (!res.value.country || res.value.confidence < options_.min_confidence) {
        return unknown_tag();
    }
    return tag_for(*res.value.country, res.value.confidence);
}

CountryTag GeoResolver::resolve_raw(std::string_view affiliation_raw) {
    auto cleaned = try_clean_institution(affiliation_raw);
    if (!cleaned) return unknown_tag();
    return resolve(*cleaned);
}

std::vector<AggregateRow> continent_distribution(std::span<const CountryTag> tags) {
    std::map<Continent, std::int64_t> counts;
    for (Continent c : kContinents) counts[c] = 0;
    counts[Continent::Unknown] = 0;
    for (const auto& tag : tags) ++counts[tag.continent];

    const auto total = static_cast<std::int64_t>(tags.size());
    std::vector<AggregateRow> rows;
    for (const auto& [continent, count] : counts) {
        AggregateRow row;
        row.dimension = "continent";
        row.key = {std::string(continent_code(continent))};
        row.metrics.emplace_back("authorships", count);
        row.metrics.emplace_back(
            "share_pct", total > 0 ? Rational(count * 100, total) : Rational(0, 1));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace geogap
