#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "geogap/types.hpp"

namespace geogap {

// JCR CSV: journal_id,name,area,impact_factor,total_cites,eigenfactor,jcr_year
// One row per (journal, area); rows of one journal merge into one record.
// Throws MalformedRowError / UnknownAreaError / DuplicateConflictError.
std::vector<JournalRecord> parse_journals(std::istream& in);

void write_journals_csv(std::ostream& out, std::span<const JournalRecord> journals);

enum class AuthorshipFormat { Tsv, Jsonl };

std::optional<AuthorshipFormat> parse_authorship_format(std::string_view s);

struct RecordError {
    std::size_t line_no = 0;
    std::string reason;
};

using ParsedRecord = std::variant<AuthorshipRecord, RecordError>;

// Pull-based line reader; holds one line at a time, never the whole input.
// Malformed lines surface as RecordError and do not stop iteration; a stream
// in a failed (non-eof) state throws IoError.
class AuthorshipReader {
public:
    AuthorshipReader(std::istream& in, AuthorshipFormat format)
        : in_(in), format_(format) {}

    std::optional<ParsedRecord> next();

    std::size_t line_no() const { return line_no_; }

private:
    std::istream& in_;
    AuthorshipFormat format_;
    std::size_t line_no_ = 0;
    std::string line_;
};

// Canonical serializations (no trailing newline).
std::string to_tsv_line(const AuthorshipRecord& r);
std::string to_jsonl_line(const AuthorshipRecord& r);

struct IngestCounters {
    std::int64_t lines = 0;
    std::int64_t parse_errors = 0;
    std::int64_t records = 0;
};

// Keeps only authorships published in a JCR journal. Drops are counted, never
// fatal: kept + drops == records in.
Corpus join_jcr(AuthorshipReader& reader, const std::vector<JournalRecord>& journals,
                IngestCounters* counters = nullptr);
Corpus join_jcr(std::span<const AuthorshipRecord> records,
                const std::vector<JournalRecord>& journals);

// Three per-area tables: dimension is one of "journals_per_area",
// "papers_per_area", "authorships_per_area"; all 7 areas always present.
std::vector<AggregateRow> corpus_stats(const Corpus& corpus);

}  // namespace geogap
