#include "geogap/gender_tag.hpp"

#include <map>

namespace geogap {

GenderTag GenderCascade::infer(const CleanName& name, const CountryTag& country) {
    if (name.initials_only) {
        return GenderTag{Gender::Unknown, 0.0, TagMethod::InitialsExcluded};
    }

    bool any_failure = false;

    // Iteration 1: name and country, skipped when the country is unresolved.
    if (country.country) {
        auto res = client_.lookup(GenderQuery{name.normalized, country.country});
        if (res.ok()) {
            if (res.value.gender != Gender::Unknown &&
                res.value.probability >= options_.threshold) {
                return GenderTag{res.value.gender, res.value.probability,
                                 TagMethod::NameAndCountry};
            }
        } else {
            any_failure = true;
        }
    }

    // Iteration 2: name only.
    auto res = client_.lookup(GenderQuery{name.normalized, std::nullopt});
    if (res.ok()) {
        if (res.value.gender != Gender::Unknown && res.value.probability >= options_.threshold) {
            return GenderTag{res.value.gender, res.value.probability, TagMethod::NameOnly};
        }
    } else {
        any_failure = true;
    }

    // An incomplete cascade is flagged for re-run rather than scored as a
    // definitive below-threshold result.
    if (any_failure) {
        return GenderTag{Gender::Unknown, 0.0, TagMethod::ProviderUnavailable};
    }
    return GenderTag{Gender::Unknown, 0.0, TagMethod::BelowThreshold};
}

std::vector<AggregateRow> gender_distribution(std::span<const AuthorshipTags> tags,
                                              GenderGroupBy group_by) {
    std::vector<AggregateRow> rows;
    if (group_by == GenderGroupBy::None) {
        std::map<Gender, std::int64_t> counts = {
            {Gender::Female, 0}, {Gender::Male, 0}, {Gender::Unknown, 0}};
        for (const auto& t : tags) ++counts[t.gender];
        const auto total = static_cast<std::int64_t>(tags.size());
        for (const auto& [gender, count] : counts) {
            AggregateRow row;
            row.dimension = "gender";
            row.key = {std::string(gender_name(gender))};
            row.metrics.emplace_back("authorships", count);
            row.metrics.emplace_back(
                "share_pct", total > 0 ? Rational(count * 100, total) : Rational(0, 1));
            rows.push_back(std::move(row));
        }
        return rows;
    }

    struct GroupCounts {
        std::int64_t f = 0;
        std::int64_t m = 0;
        std::int64_t u = 0;
        std::int64_t total() const { return f + m + u; }
    };
    std::map<Continent, GroupCounts> groups;
    for (const auto& t : tags) {
        auto& g = groups[t.country.continent];
        switch (t.gender) {
            case Gender::Female: ++g.f; break;
            case Gender::Male: ++g.m; break;
            case Gender::Unknown: ++g.u; break;
        }
    }
    for (const auto& [continent, g] : groups) {
        AggregateRow row;
        row.dimension = "continent_gender";
        row.key = {std::string(continent_code(continent))};
        row.metrics.emplace_back("authorships", g.total());
        row.metrics.emplace_back("female_pct", Rational(g.f * 100, g.total()));
        row.metrics.emplace_back("male_pct", Rational(g.m * 100, g.total()));
        row.metrics.emplace_back("unknown_pct", Rational(g.u * 100, g.total()));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace geogap
