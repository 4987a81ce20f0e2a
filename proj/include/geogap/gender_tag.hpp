#pragma once

#include <span>
#include <vector>

#include "geogap/name_clean.hpp"
#include "geogap/providers.hpp"
#include "geogap/types.hpp"

namespace geogap {

struct CascadeOptions {
    double threshold = 0.95;  // inclusive acceptance bound
};

// Two-iteration inference: (name, country) first, name-only fallback.
// Initials-only names are excluded up front and never reach a provider.
class GenderCascade {
public:
    GenderCascade(CachedGenderClient& client, CascadeOptions options)
        : client_(client), options_(options) {}

    GenderTag infer(const CleanName& name, const CountryTag& country);

private:
    CachedGenderClient& client_;
    CascadeOptions options_;
};

enum class GenderGroupBy { None, Continent };

// Paired per-authorship tags, same index order as the corpus authorships.
struct AuthorshipTags {
    CountryTag country;
    GenderTag gender;
};

// Fig-7-style shares (group_by none) or Fig-8-style per-continent rows; all
// share columns are exact rationals summing to 100 per group.
std::vector<AggregateRow> gender_distribution(std::span<const AuthorshipTags> tags,
                                              GenderGroupBy group_by);

}  // namespace geogap
