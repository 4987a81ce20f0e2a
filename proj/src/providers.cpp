#include "geogap/providers.hpp"

#include <fstream>
#include <sstream>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "geogap/errors.hpp"

namespace geogap {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    return out;
}

}  // namespace

std::string GenderResponse::to_json() const {
    nlohmann::ordered_json j;
    if (gender == Gender::Unknown) {
        j["gender"] = nullptr;
    } else {
        j["gender"] = std::string(gender_name(gender));
    }
    j["probability"] = probability;
    j["count"] = sample_count;
    return j.dump();
}

std::optional<GenderResponse> GenderResponse::from_json(std::string_view s) {
    nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("gender") || !j.contains("probability")) return std::nullopt;
    GenderResponse r;
    if (j["gender"].is_null()) {
        r.gender = Gender::Unknown;
    } else if (j["gender"].is_string()) {
        auto g = parse_gender(j["gender"].get<std::string>());
        if (!g || *g == Gender::Unknown) return std::nullopt;
        r.gender = *g;
    } else {
        return std::nullopt;
    }
    if (!j["probability"].is_number()) return std::nullopt;
    r.probability = j["probability"].get<double>();
    r.sample_count = j.value("count", std::int64_t{0});
    if (r.gender == Gender::Unknown) r.probability = 0.0;
    return r;
}

std::string GeoResponse::to_json() const {
    nlohmann::ordered_json j;
    if (country) {
        j["country"] = *country;
    } else {
        j["country"] = nullptr;
    }
    j["confidence"] = confidence;
    return j.dump();
}

std::optional<GeoResponse> GeoResponse::from_json(std::string_view s) {
    nlohmann::json j = nlohmann::json::parse(s, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (!j.contains("country") || !j.contains("confidence")) return std::nullopt;
    GeoResponse r;
    if (j["country"].is_string()) {
        r.country = j["country"].get<std::string>();
    } else if (!j["country"].is_null()) {
        return std::nullopt;
    }
    if (!j["confidence"].is_number()) return std::nullopt;
    r.confidence = j["confidence"].get<double>();
    if (!r.country) r.confidence = 0.0;
    return r;
}

std::chrono::milliseconds SystemClock::now() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now().time_since_epoch());
}

void SystemClock::sleep_for(std::chrono::milliseconds d) {
    std::this_thread::sleep_for(d);
}

SystemClock& SystemClock::instance() {
    static SystemClock clock;
    return clock;
}

RateLimiter::RateLimiter(Clock& clock, int per_second)
    : clock_(clock), per_second_(per_second > 0 ? per_second : 1) {}

void RateLimiter::acquire() {
    using std::chrono::milliseconds;
    for (;;) {
        milliseconds wait{0};
        {
            std::lock_guard lk(mu_);
            auto now = clock_.now();
            while (!recent_.empty() && recent_.front() <= now - milliseconds(1000)) {
                recent_.pop_front();
            }
            if (recent_.size() < static_cast<std::size_t>(per_second_)) {
                recent_.push_back(now);
                return;
            }
            wait = recent_.front() + milliseconds(1000) - now;
            if (wait < milliseconds(1)) wait = milliseconds(1);
        }
        clock_.sleep_for(wait);
    }
}

FixtureGenderProvider FixtureGenderProvider::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open gender fixture " + path.string());
    FixtureGenderProvider provider;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto cols = split_tabs(line);
        if (cols.size() != 5) {
            throw MalformedRowError(line_no, "gender fixture needs 5 columns");
        }
        auto g = parse_gender(cols[2]);
        if (!g) throw MalformedRowError(line_no, "bad gender: " + cols[2]);
        GenderResponse r;
        r.gender = *g;
        r.probability = std::stod(cols[3]);
        r.sample_count = std::stoll(cols[4]);
        provider.add(cols[0], cols[1], r);
    }
    return provider;
}

void FixtureGenderProvider::add(const std::string& name, const std::string& country_or_star,
                                GenderResponse response) {
    entries_[{name, country_or_star}] = response;
}

ProviderResult<GenderResponse> FixtureGenderProvider::lookup(const GenderQuery& query) {
    calls_.fetch_add(1);
    auto it = entries_.find({query.name, query.country.value_or("*")});
    if (it == entries_.end()) return ProviderResult<GenderResponse>::success(GenderResponse{});
    return ProviderResult<GenderResponse>::success(it->second);
}

FixtureGeoProvider FixtureGeoProvider::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open gazetteer fixture " + path.string());
    FixtureGeoProvider provider;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto cols = split_tabs(line);
        if (cols.size() != 2) throw MalformedRowError(line_no, "gazetteer needs 2 columns");
        provider.add(cols[0], cols[1]);
    }
    return provider;
}

void FixtureGeoProvider::add(const std::string& normalized_institution,
                             const std::string& country) {
    entries_[normalized_institution] = country;
}

ProviderResult<GeoResponse> FixtureGeoProvider::lookup(const std::string& normalized_institution) {
    calls_.fetch_add(1);
    GeoResponse r;
    auto it = entries_.find(normalized_institution);
    if (it != entries_.end()) {
        r.country = it->second;
        r.confidence = 1.0;
    }
    return ProviderResult<GeoResponse>::success(r);
}

namespace {

struct ParsedUrl {
    std::string origin;  // scheme://host[:port]
    std::string path;
};

ParsedUrl parse_base_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ConfigError("bad provider url: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

struct HttpCore {
    HttpProviderOptions options;
    Clock& clock;
    ParsedUrl url;
    httplib::Client client;
    RateLimiter limiter;

    HttpCore(HttpProviderOptions opts, Clock& clk)
        : options(std::move(opts)),
          clock(clk),
          url(parse_base_url(options.base_url)),
          client(url.origin),
          limiter(clk, options.requests_per_second) {
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(30, 0);
    }

    // Retries transport errors and 5xx with exponential backoff; 429 fails
    // fast surfacing Retry-After. Returns the body on success.
    ProviderResult<std::string> get(httplib::Params params) {
        if (!options.api_key.empty()) params.emplace("apikey", options.api_key);
        auto backoff = options.initial_backoff;
        for (int attempt = 1;; ++attempt) {
            limiter.acquire();
            auto res = client.Get(url.path, params, httplib::Headers{});
            if (res) {
                if (res->status == 200) {
                    return ProviderResult<std::string>::success(res->body);
                }
                if (res->status == 429) {
                    std::optional<int> retry_after;
                    auto header = res->get_header_value("Retry-After");
                    if (!header.empty()) retry_after = std::atoi(header.c_str());
                    return ProviderResult<std::string>::failure(ProviderStatus::QuotaExceeded,
                                                                retry_after);
                }
                if (res->status < 500) {
                    return ProviderResult<std::string>::failure(ProviderStatus::Unavailable);
                }
            }
            if (attempt >= options.max_attempts) {
                return ProviderResult<std::string>::failure(ProviderStatus::Unavailable);
            }
            clock.sleep_for(backoff);
            backoff *= 2;
        }
    }
};

}  // namespace

struct HttpGenderProvider::Impl {
    HttpCore core;
    Impl(HttpProviderOptions opts, Clock& clk) : core(std::move(opts), clk) {}
};

HttpGenderProvider::HttpGenderProvider(HttpProviderOptions options, Clock& clock)
    : impl_(std::make_unique<Impl>(std::move(options), clock)) {}

HttpGenderProvider::~HttpGenderProvider() = default;

ProviderResult<GenderResponse> HttpGenderProvider::lookup(const GenderQuery& query) {
    httplib::Params params;
    params.emplace("name", query.name);
    if (query.country) params.emplace("country_id", *query.country);
    auto res = impl_->core.get(std::move(params));
    if (!res.ok()) {
        return ProviderResult<GenderResponse>::failure(res.status, res.retry_after_s);
    }
    nlohmann::json j = nlohmann::json::parse(res.value, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("gender")) {
        return ProviderResult<GenderResponse>::failure(ProviderStatus::Unavailable);
    }
    GenderResponse r;
    if (j["gender"].is_string()) {
        auto g = parse_gender(j["gender"].get<std::string>());
        if (g && *g != Gender::Unknown) r.gender = *g;
    }
    if (r.gender != Gender::Unknown && j.contains("probability") && j["probability"].is_number()) {
        r.probability = j["probability"].get<double>();
    }
    if (j.contains("count") && j["count"].is_number_integer()) {
        r.sample_count = j["count"].get<std::int64_t>();
    }
    return ProviderResult<GenderResponse>::success(r);
}

struct HttpGeoProvider::Impl {
    HttpCore core;
    Impl(HttpProviderOptions opts, Clock& clk) : core(std::move(opts), clk) {}
};

HttpGeoProvider::HttpGeoProvider(HttpProviderOptions options, Clock& clock)
    : impl_(std::make_unique<Impl>(std::move(options), clock)) {}

HttpGeoProvider::~HttpGeoProvider() = default;

ProviderResult<GeoResponse> HttpGeoProvider::lookup(const std::string& normalized_institution) {
    httplib::Params params;
    params.emplace("q", normalized_institution);
    auto res = impl_->core.get(std::move(params));
    if (!res.ok()) return ProviderResult<GeoResponse>::failure(res.status, res.retry_after_s);

    nlohmann::json j = nlohmann::json::parse(res.value, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("candidates") ||
        !j["candidates"].is_array()) {
        return ProviderResult<GeoResponse>::failure(ProviderStatus::Unavailable);
    }
    GeoResponse r;
    const auto& candidates = j["candidates"];
    if (!candidates.empty()) {
        const auto& top = candidates.front();
        if (top.is_object() && top.contains("country") && top["country"].is_string()) {
            r.country = top["country"].get<std::string>();
            if (top.contains("confidence") && top["confidence"].is_number()) {
                r.confidence = top["confidence"].get<double>();
            }
        }
    }
    return ProviderResult<GeoResponse>::success(r);
}

ProviderResult<GenderResponse> CachedGenderClient::lookup(const GenderQuery& query) {
    ProviderStatus fail_status = ProviderStatus::Unavailable;
    std::optional<int> retry_after;
    auto cached = flights_.run(cache_, query.cache_key(), [&]() -> std::optional<std::string> {
        provider_calls_.fetch_add(1);
        auto res = provider_.lookup(query);
        if (!res.ok()) {
            fail_status = res.status;
            retry_after = res.retry_after_s;
            return std::nullopt;
        }
        return res.value.to_json();
    });
    if (!cached) return ProviderResult<GenderResponse>::failure(fail_status, retry_after);
    auto parsed = GenderResponse::from_json(*cached);
    if (!parsed) throw IoError("corrupt cache entry for " + query.cache_key());
    return ProviderResult<GenderResponse>::success(*parsed);
}

ProviderResult<GeoResponse> CachedGeoClient::lookup(const std::string& normalized_institution) {
    ProviderStatus fail_status = ProviderStatus::Unavailable;
    std::optional<int> retry_after;
    const std::string key = "geo:" + normalized_institution;
    auto cached = flights_.run(cache_, key, [&]() -> std::optional<std::string> {
        provider_calls_.fetch_add(1);
        auto res = provider_.lookup(normalized_institution);
        if (!res.ok()) {
            fail_status = res.status;
            retry_after = res.retry_after_s;
            return std::nullopt;
        }
        return res.value.to_json();
    });
    if (!cached) return ProviderResult<GeoResponse>::failure(fail_status, retry_after);
    auto parsed = GeoResponse::from_json(*cached);
    if (!parsed) throw IoError("corrupt cache entry for " + key);
    return ProviderResult<GeoResponse>::success(*parsed);
}

}  // namespace geogap
