#pragma once

#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>

namespace geogap {

struct CacheEntry {
    std::string key;
    std::string value;          // serialized response
    std::int64_t fetched_at = 0;  // unix seconds
};

// Persistent response cache: JSONL on disk, one entry per line, sorted by key
// on flush. Flush writes a temp file and renames, so a crash mid-flush leaves
// the previous file intact. Thread-safe.
class ResponseCache {
public:
    // Loads the file when it exists; missing file starts empty.
    explicit ResponseCache(std::filesystem::path file);

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, std::string value);

    // Returns the number of entries persisted. No-op (no write) when clean.
    std::size_t flush();

    // Test seam: runs `between` after the temp file is written and before the
    // rename. An exception from the hook aborts the flush.
    std::size_t flush_with_hook(const std::function<void(const std::filesystem::path&)>& between);

    std::size_t size() const;
    const std::filesystem::path& file() const { return file_; }

private:
    std::filesystem::path file_;
    std::map<std::string, CacheEntry> entries_;
    mutable std::mutex mu_;
    bool dirty_ = false;
};

// Collapses concurrent fetches of one key into a single provider call.
// `fetch` returns the serialized value or nullopt on failure; failures are
// not cached and wake any waiters to retry or fail on their own.
class SingleFlight {
public:
    std::optional<std::string> run(ResponseCache& cache, const std::string& key,
                                   const std::function<std::optional<std::string>()>& fetch);

private:
    std::mutex mu_;
    std::condition_variable cv_;
    std::set<std::string> inflight_;
};

}  // namespace geogap
