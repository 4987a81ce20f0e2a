#include "geogap/cache.hpp"

#include <chrono>
#include <fstream>

#include <nlohmann/json.hpp>

#include "geogap/errors.hpp"

namespace geogap {

ResponseCache::ResponseCache(std::filesystem::path file) : file_(std::move(file)) {
    std::ifstream in(file_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("key") || !j.contains("value")) {
            throw IoError("corrupt cache line in " + file_.string());
        }
        CacheEntry e;
        e.key = j["key"].get<std::string>();
        e.value = j["value"].get<std::string>();
        e.fetched_at = j.value("fetched_at", std::int64_t{0});
        entries_[e.key] = std::move(e);
    }
    if (in.bad()) throw IoError("cannot read cache file " + file_.string());
}

std::optional<std::string> ResponseCache::get(const std::string& key) const {
    std::lock_guard lk(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second.value;
}

void ResponseCache::put(const std::string& key, std::string value) {
    std::lock_guard lk(mu_);
    CacheEntry e;
    e.key = key;
    e.value = std::move(value);
    e.fetched_at = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::system_clock::now().time_since_epoch())
                       .count();
    entries_[key] = std::move(e);
    dirty_ = true;
}

std::size_t ResponseCache::flush() {
    return flush_with_hook(nullptr);
}

std::size_t ResponseCache::flush_with_hook(
    const std::function<void(const std::filesystem::path&)>& between) {
    std::lock_guard lk(mu_);
    if (!dirty_) return entries_.size();

    std::filesystem::path temp = file_;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + temp.string());
        for (const auto& [_, e] : entries_) {
            nlohmann::ordered_json j;
            j["key"] = e.key;
            j["value"] = e.value;
            j["fetched_at"] = e.fetched_at;
            out << j.dump() << '\n';
        }
        out.flush();
        if (!out) throw IoError("write failure on " + temp.string());
    }
    if (between) between(temp);
    std::error_code ec;
    std::filesystem::rename(temp, file_, ec);
    if (ec) throw IoError("rename failed: " + ec.message());
    dirty_ = false;
    return entries_.size();
}

std::size_t ResponseCache::size() const {
    std::lock_guard lk(mu_);
    return entries_.size();
}

std::optional<std::string> SingleFlight::run(
    ResponseCache& cache, const std::string& key,
    const std::function<std::optional<std::string>()>& fetch) {
    std::unique_lock lk(mu_);
    for (;;) {
        if (auto v = cache.get(key)) return v;
        if (!inflight_.count(key)) {
            inflight_.insert(key);
            break;
        }
        cv_.wait(lk);
    }
    lk.unlock();

    std::optional<std::string> result;
    try {
        result = fetch();
    } catch (...) {
        lk.lock();
        inflight_.erase(key);
        cv_.notify_all();
        throw;
    }

    lk.lock();
    if (result) cache.put(key, *result);
    inflight_.erase(key);
    cv_.notify_all();
    return result;
}

}  // namespace geogap
