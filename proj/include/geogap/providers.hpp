#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "geogap/cache.hpp"
#include "geogap/types.hpp"

namespace geogap {

struct GenderQuery {
    std::string name;                    // normalized first name (cache key format)
    std::optional<std::string> country;  // ISO alpha-2

    std::string cache_key() const { return "gender:" + name + "@" + country.value_or("*"); }
};

// Gender::Unknown stands for the provider's "none" result here.
struct GenderResponse {
    Gender gender = Gender::Unknown;
    double probability = 0.0;
    std::int64_t sample_count = 0;

    std::string to_json() const;
    static std::optional<GenderResponse> from_json(std::string_view s);
};

struct GeoResponse {
    std::optional<std::string> country;  // ISO alpha-2
    double confidence = 0.0;

    std::string to_json() const;
    static std::optional<GeoResponse> from_json(std::string_view s);
};

enum class ProviderStatus { Ok, Unavailable, QuotaExceeded };

template <typename T>
struct ProviderResult {
    ProviderStatus status = ProviderStatus::Ok;
    T value{};
    std::optional<int> retry_after_s;  // set for QuotaExceeded when known

    bool ok() const { return status == ProviderStatus::Ok; }

    static ProviderResult success(T v) { return {ProviderStatus::Ok, std::move(v), std::nullopt}; }
    static ProviderResult failure(ProviderStatus s, std::optional<int> retry_after = std::nullopt) {
        return {s, T{}, retry_after};
    }
};

class GenderProvider {
public:
    virtual ~GenderProvider() = default;
    virtual ProviderResult<GenderResponse> lookup(const GenderQuery& query) = 0;
};

class GeoProvider {
public:
    virtual ~GeoProvider() = default;
    virtual ProviderResult<GeoResponse> lookup(const std::string& normalized_institution) = 0;
};

// Time seam so rate limiting and backoff are testable with a fake clock.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::milliseconds now() = 0;
    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::milliseconds now() override;
    void sleep_for(std::chrono::milliseconds d) override;
    static SystemClock& instance();
};

class FakeClock final : public Clock {
public:
    std::chrono::milliseconds now() override {
        std::lock_guard lk(mu_);
        return now_;
    }
    void sleep_for(std::chrono::milliseconds d) override { advance(d); }
    void advance(std::chrono::milliseconds d) {
        std::lock_guard lk(mu_);
        now_ += d;
    }

private:
    std::mutex mu_;
    std::chrono::milliseconds now_{0};
};

// Sliding-window limiter: at most `per_second` acquisitions in any one-second
// window. acquire() sleeps on the provided clock until a slot frees up.
class RateLimiter {
public:
    RateLimiter(Clock& clock, int per_second);
    void acquire();

private:
    Clock& clock_;
    int per_second_;
    std::mutex mu_;
    std::deque<std::chrono::milliseconds> recent_;
};

// Offline providers backed by the fixture files; they never fail and count
// their lookups so tests can assert call traces.

// TSV: name<TAB>country_or_*<TAB>gender<TAB>probability<TAB>count
class FixtureGenderProvider final : public GenderProvider {
public:
    static FixtureGenderProvider load(const std::filesystem::path& path);

    ProviderResult<GenderResponse> lookup(const GenderQuery& query) override;
    std::int64_t calls() const { return calls_.load(); }

    void add(const std::string& name, const std::string& country_or_star, GenderResponse response);

private:
    std::map<std::pair<std::string, std::string>, GenderResponse> entries_;
    std::atomic<std::int64_t> calls_{0};
};

// TSV: normalized_institution<TAB>country
class FixtureGeoProvider final : public GeoProvider {
public:
    static FixtureGeoProvider load(const std::filesystem::path& path);

    ProviderResult<GeoResponse> lookup(const std::string& normalized_institution) override;
    std::int64_t calls() const { return calls_.load(); }

    void add(const std::string& normalized_institution, const std::string& country);

private:
    std::map<std::string, std::string> entries_;
    std::atomic<std::int64_t> calls_{0};
};

struct HttpProviderOptions {
    std::string base_url;  // e.g. "http://127.0.0.1:8080/gender"
    int requests_per_second = 10;
    int max_attempts = 3;
    std::chrono::milliseconds initial_backoff{1000};
    std::string api_key;  // appended as apikey=<key> when non-empty
};

// genderize-compatible wire protocol:
//   GET <base>?name=<urlencoded>[&country_id=<CC>] ->
//   {"name":..., "gender":"male"|"female"|null, "probability":p, "count":n}
class HttpGenderProvider final : public GenderProvider {
public:
    HttpGenderProvider(HttpProviderOptions options, Clock& clock);
    ~HttpGenderProvider() override;
    ProviderResult<GenderResponse> lookup(const GenderQuery& query) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

//   GET <base>?q=<urlencoded institution> ->
//   {"candidates":[{"country":"CC","confidence":c},...]} (descending)
class HttpGeoProvider final : public GeoProvider {
public:
    HttpGeoProvider(HttpProviderOptions options, Clock& clock);
    ~HttpGeoProvider() override;
    ProviderResult<GeoResponse> lookup(const std::string& normalized_institution) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Cache-first lookups with the single-flight contract; counts the lookups
// that actually reached the provider.
class CachedGenderClient {
public:
    CachedGenderClient(GenderProvider& provider, ResponseCache& cache)
        : provider_(provider), cache_(cache) {}

    ProviderResult<GenderResponse> lookup(const GenderQuery& query);
    std::int64_t provider_calls() const { return provider_calls_.load(); }

private:
    GenderProvider& provider_;
    ResponseCache& cache_;
    SingleFlight flights_;
    std::atomic<std::int64_t> provider_calls_{0};
};

class CachedGeoClient {
public:
    CachedGeoClient(GeoProvider& provider, ResponseCache& cache)
        : provider_(provider), cache_(cache) {}

    ProviderResult<GeoResponse> lookup(const std::string& normalized_institution);
    std::int64_t provider_calls() const { return provider_calls_.load(); }

private:
    GeoProvider& provider_;
    ResponseCache& cache_;
    SingleFlight flights_;
    std::atomic<std::int64_t> provider_calls_{0};
};

}  // namespace geogap
