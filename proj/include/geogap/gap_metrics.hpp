#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "geogap/gender_tag.hpp"
#include "geogap/rational.hpp"
#include "geogap/types.hpp"

namespace geogap {

// (f - m + u) / total, exact. Throws EmptyPaperError when total is 0.
Rational gap_index(std::int64_t f, std::int64_t m, std::int64_t u);

// Companion metric over known genders only: (f - m) / (f + m).
// Throws NoKnownGenderError when f + m is 0.
Rational known_gap(std::int64_t f, std::int64_t m);

// Bucket precedence: unknown-dominant gate first, then the extremes,
// then majorities, then balanced.
Bucket classify_counts(std::int64_t f, std::int64_t m, std::int64_t u);
Bucket classify(const PaperGenderProfile& profile);

// 100 * f / (f + m). Throws NoKnownGenderError when f + m is 0.
Rational female_pct(std::int64_t f, std::int64_t m);

// Per-paper profiles from the tagged corpus, keyed and sorted by paper_id.
std::vector<PaperGenderProfile> build_profiles(const Corpus& corpus,
                                               std::span<const AuthorshipTags> tags);

// Count per bucket plus mean gap metrics; all six buckets always present.
std::vector<AggregateRow> bucket_distribution(std::span<const PaperGenderProfile> profiles);

// Per (area, bucket) paper counts; a paper in k areas contributes to k rows.
// Only areas with at least one classified paper appear.
std::vector<AggregateRow> area_gap_distribution(std::span<const PaperGenderProfile> profiles,
                                                const Corpus& corpus);

struct TimelineOptions {
    std::vector<std::string> countries;  // ISO alpha-2
    int year_from = 0;
    int year_to = 0;  // inclusive
};

inline std::vector<std::string> default_timeline_countries() {
    return {"GB", "DE", "FR", "IT", "ES"};
}

// Per (country, year) share of female authorships over the known-gender ones;
// cells with no known-gender authorship are omitted.
std::vector<AggregateRow> country_timeline(const Corpus& corpus,
                                           std::span<const AuthorshipTags> tags,
                                           const TimelineOptions& options);

}  // namespace geogap
