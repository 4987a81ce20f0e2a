#include "geogap/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "geogap/errors.hpp"
#include "geogap/name_clean.hpp"

namespace geogap {

namespace {

constexpr int kMinYear = 1900;
constexpr int kMaxYear = 2100;

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    fields.push_back(std::move(current));
    return fields;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<double> parse_nonneg_decimal(std::string_view s) {
    if (s.empty()) return std::nullopt;
    double v = 0.0;
    auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) return std::nullopt;
    if (!(v >= 0.0) || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::string render_double(double v) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, p);
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

// Canonical TSV fields cannot carry tabs or newlines.
bool has_forbidden_chars(std::string_view field) {
    return field.find_first_of("\t\n\r") != std::string_view::npos;
}

std::optional<RecordError> validate_record(const AuthorshipRecord& r, std::size_t line_no) {
    if (r.paper_id.empty()) return RecordError{line_no, "empty paper_id"};
    if (r.author_name_raw.empty()) return RecordError{line_no, "empty author_name"};
    if (r.author_position < 1) return RecordError{line_no, "position must be >= 1"};
    if (r.year < kMinYear || r.year > kMaxYear) return RecordError{line_no, "year out of range"};
    if (r.journal_id.empty()) return RecordError{line_no, "empty journal_id"};
    for (const std::string* f : {&r.paper_id, &r.author_name_raw, &r.affiliation_raw, &r.journal_id}) {
        if (has_forbidden_chars(*f)) return RecordError{line_no, "field contains tab or newline"};
    }
    return std::nullopt;
}

ParsedRecord parse_tsv_record(const std::string& line, std::size_t line_no) {
    std::vector<std::string_view> cols;
    std::size_t start = 0;
    while (true) {
        auto tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cols.emplace_back(line.data() + start, line.size() - start);
            break;
        }
        cols.emplace_back(line.data() + start, tab - start);
        start = tab + 1;
    }
    if (cols.size() != 6) return RecordError{line_no, "column count"};
    if (!utf8::is_valid(line)) return RecordError{line_no, "invalid UTF-8"};

    auto position = parse_int(cols[2]);
    if (!position) return RecordError{line_no, "bad position"};
    auto year = parse_int(cols[4]);
    if (!year) return RecordError{line_no, "bad year"};

    AuthorshipRecord r;
    r.paper_id.assign(cols[0]);
    r.author_name_raw.assign(cols[1]);
    r.author_position = static_cast<int>(*position);
    r.affiliation_raw.assign(cols[3]);
    r.year = static_cast<int>(*year);
    r.journal_id.assign(cols[5]);
    if (auto err = validate_record(r, line_no)) return *err;
    return r;
}

ParsedRecord parse_jsonl_record(const std::string& line, std::size_t line_no) {
    if (!utf8::is_valid(line)) return RecordError{line_no, "invalid UTF-8"};
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return RecordError{line_no, "bad json"};

    static const std::set<std::string> kKeys = {"paper_id",    "author_name", "position",
                                                "affiliation", "year",        "journal_id"};
    for (const auto& key : kKeys) {
        if (!j.contains(key)) return RecordError{line_no, "missing key: " + key};
    }
    for (const auto& [key, _] : j.items()) {
        if (!kKeys.count(key)) return RecordError{line_no, "unexpected key: " + key};
    }
    if (!j["paper_id"].is_string() || !j["author_name"].is_string() ||
        !j["affiliation"].is_string() || !j["journal_id"].is_string()) {
        return RecordError{line_no, "string field has wrong type"};
    }
    if (!j["position"].is_number_integer() || !j["year"].is_number_integer()) {
        return RecordError{line_no, "integer field has wrong type"};
    }

    AuthorshipRecord r;
    r.paper_id = j["paper_id"].get<std::string>();
    r.author_name_raw = j["author_name"].get<std::string>();
    r.author_position = j["position"].get<int>();
    r.affiliation_raw = j["affiliation"].get<std::string>();
    r.year = j["year"].get<int>();
    r.journal_id = j["journal_id"].get<std::string>();
    if (auto err = validate_record(r, line_no)) return *err;
    return r;
}

}  // namespace

std::vector<JournalRecord> parse_journals(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        if (in.bad()) throw IoError("journal stream unreadable");
        throw MalformedRowError(0, "missing header");
    }
    strip_cr(line);
    if (line != "journal_id,name,area,impact_factor,total_cites,eigenfactor,jcr_year") {
        throw MalformedRowError(1, "unexpected header");
    }

    std::map<std::string, JournalRecord> by_id;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        strip_cr(line);
        if (line.empty()) continue;
        auto fields = split_csv_row(line);
        if (fields.size() != 7) throw MalformedRowError(line_no, "column count");

        auto area = parse_area(fields[2]);
        if (!area) throw UnknownAreaError(fields[2]);
        auto impact = parse_nonneg_decimal(fields[3]);
        if (!impact) throw MalformedRowError(line_no, "bad impact_factor");
        auto cites = parse_int(fields[4]);
        if (!cites || *cites < 0) throw MalformedRowError(line_no, "bad total_cites");
        auto eigen = parse_nonneg_decimal(fields[5]);
        if (!eigen) throw MalformedRowError(line_no, "bad eigenfactor");
        auto jcr_year = parse_int(fields[6]);
        if (!jcr_year) throw MalformedRowError(line_no, "bad jcr_year");
        if (fields[0].empty()) throw MalformedRowError(line_no, "empty journal_id");

        auto [it, inserted] = by_id.try_emplace(fields[0]);
        JournalRecord& rec = it->second;
        if (inserted) {
            rec.journal_id = fields[0];
            rec.name = fields[1];
            rec.impact_factor = *impact;
            rec.total_cites = *cites;
            rec.eigenfactor = *eigen;
            rec.jcr_year = static_cast<int>(*jcr_year);
        } else if (rec.impact_factor != *impact) {
            throw DuplicateConflictError(fields[0]);
        }
        rec.areas.insert(*area);
    }
    if (in.bad()) throw IoError("journal stream unreadable");

    std::vector<JournalRecord> out;
    out.reserve(by_id.size());
    for (auto& [_, rec] : by_id) out.push_back(std::move(rec));
    return out;
}

void write_journals_csv(std::ostream& out, std::span<const JournalRecord> journals) {
    out << "journal_id,name,area,impact_factor,total_cites,eigenfactor,jcr_year\n";
    for (const auto& j : journals) {
        for (JcrArea area : j.areas.values()) {
            out << csv_escape(j.journal_id) << ',' << csv_escape(j.name) << ',' << area_name(area)
                << ',' << render_double(j.impact_factor) << ',' << j.total_cites << ','
                << render_double(j.eigenfactor) << ',' << j.jcr_year << '\n';
        }
    }
}

std::optional<AuthorshipFormat> parse_authorship_format(std::string_view s) {
    if (s == "tsv") return AuthorshipFormat::Tsv;
    if (s == "jsonl") return AuthorshipFormat::Jsonl;
    return std::nullopt;
}

std::optional<ParsedRecord> AuthorshipReader::next() {
    if (!std::getline(in_, line_)) {
        if (in_.bad()) throw IoError("authorship stream unreadable");
        return std::nullopt;
    }
    ++line_no_;
    strip_cr(line_);
    return format_ == AuthorshipFormat::Tsv ? parse_tsv_record(line_, line_no_)
                                            : parse_jsonl_record(line_, line_no_);
}

std::string to_tsv_line(const AuthorshipRecord& r) {
    std::string out;
    out.reserve(r.paper_id.size() + r.author_name_raw.size() + r.affiliation_raw.size() +
                r.journal_id.size() + 24);
    out += r.paper_id;
    out += '\t';
    out += r.author_name_raw;
    out += '\t';
    out += std::to_string(r.author_position);
    out += '\t';
    out += r.affiliation_raw;
    out += '\t';
    out += std::to_string(r.year);
    out += '\t';
    out += r.journal_id;
    return out;
}

std::string to_jsonl_line(const AuthorshipRecord& r) {
    nlohmann::ordered_json j;
    j["paper_id"] = r.paper_id;
    j["author_name"] = r.author_name_raw;
    j["position"] = r.author_position;
    j["affiliation"] = r.affiliation_raw;
    j["year"] = r.year;
    j["journal_id"] = r.journal_id;
    return j.dump();
}

namespace {

struct JoinState {
    Corpus corpus;
    std::unordered_set<std::string> seen_positions;  // paper_id '\x1f' position

    explicit JoinState(const std::vector<JournalRecord>& journals) {
        for (const auto& j : journals) corpus.journals.emplace(j.journal_id, j);
    }

    void add(AuthorshipRecord&& rec) {
        if (!corpus.journals.count(rec.journal_id)) {
            ++corpus.drops.not_in_jcr;
            return;
        }
        auto paper_it = corpus.papers.find(rec.paper_id);
        if (paper_it == corpus.papers.end()) {
            corpus.papers.emplace(rec.paper_id, PaperInfo{rec.journal_id, rec.year});
        } else if (paper_it->second.journal_id != rec.journal_id ||
                   paper_it->second.year != rec.year) {
            ++corpus.drops.paper_conflict;
            return;
        }
        std::string pos_key = rec.paper_id + '\x1f' + std::to_string(rec.author_position);
        if (!seen_positions.insert(std::move(pos_key)).second) {
            ++corpus.drops.duplicate_position;
            return;
        }
        corpus.authorships.push_back(std::move(rec));
    }
};

}  // namespace

Corpus join_jcr(AuthorshipReader& reader, const std::vector<JournalRecord>& journals,
                IngestCounters* counters) {
    JoinState state(journals);
    IngestCounters local;
    while (auto parsed = reader.next()) {
        ++local.lines;
        if (std::holds_alternative<RecordError>(*parsed)) {
            ++local.parse_errors;
            continue;
        }
        ++local.records;
        state.add(std::move(std::get<AuthorshipRecord>(*parsed)));
    }
    if (counters) *counters = local;
    return std::move(state.corpus);
}

Corpus join_jcr(std::span<const AuthorshipRecord> records,
                const std::vector<JournalRecord>& journals) {
    JoinState state(journals);
    for (const auto& rec : records) state.add(AuthorshipRecord(rec));
    return std::move(state.corpus);
}

std::vector<AggregateRow> corpus_stats(const Corpus& corpus) {
    std::map<JcrArea, std::int64_t> journals_per_area;
    std::map<JcrArea, std::int64_t> papers_per_area;
    std::map<JcrArea, std::int64_t> authorships_per_area;
    for (JcrArea a : kAllAreas) {
        journals_per_area[a] = 0;
        papers_per_area[a] = 0;
        authorships_per_area[a] = 0;
    }

    for (const auto& [_, journal] : corpus.journals) {
        for (JcrArea a : journal.areas.values()) ++journals_per_area[a];
    }
    for (const auto& [_, paper] : corpus.papers) {
        const auto& journal = corpus.journals.at(paper.journal_id);
        for (JcrArea a : journal.areas.values()) ++papers_per_area[a];
    }
    for (const auto& rec : corpus.authorships) {
        const auto& journal = corpus.journals.at(rec.journal_id);
        for (JcrArea a : journal.areas.values()) ++authorships_per_area[a];
    }

    std::vector<AggregateRow> rows;
    auto emit = [&rows](const char* table, const std::map<JcrArea, std::int64_t>& counts) {
        for (const auto& [area, count] : counts) {
            AggregateRow row;
            row.dimension = table;
            row.key = {std::string(area_name(area))};
            row.metrics.emplace_back("count", count);
            rows.push_back(std::move(row));
        }
    };
    emit("journals_per_area", journals_per_area);
    emit("papers_per_area", papers_per_area);
    emit("authorships_per_area", authorships_per_area);
    return rows;
}

}  // namespace geogap
