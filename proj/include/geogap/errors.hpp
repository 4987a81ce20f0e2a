#pragma once

#include <stdexcept>
#include <string>

namespace geogap {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class MalformedRowError : public Error {
public:
    MalformedRowError(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line_no_(line_no) {}
    std::size_t line_no() const { return line_no_; }

private:
    std::size_t line_no_;
};

class UnknownAreaError : public Error {
public:
    explicit UnknownAreaError(const std::string& value)
        : Error("unknown JCR area: " + value), value_(value) {}
    const std::string& value() const { return value_; }

private:
    std::string value_;
};

class DuplicateConflictError : public Error {
public:
    explicit DuplicateConflictError(const std::string& journal_id)
        : Error("conflicting duplicate rows for journal " + journal_id), journal_id_(journal_id) {}
    const std::string& journal_id() const { return journal_id_; }

private:
    std::string journal_id_;
};

class UnknownCountryCodeError : public Error {
public:
    explicit UnknownCountryCodeError(const std::string& code)
        : Error("country code not in continent table: " + code), code_(code) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class EmptyNameError : public Error {
public:
    EmptyNameError() : Error("empty author name") {}
};

class EmptyInstitutionError : public Error {
public:
    EmptyInstitutionError() : Error("institution string has no letters") {}
};

class EmptyPaperError : public Error {
public:
    EmptyPaperError() : Error("paper has no authors") {}
};

class NoKnownGenderError : public Error {
public:
    NoKnownGenderError() : Error("no authorships with known gender") {}
};

class UnsupportedShapeError : public Error {
public:
    using Error::Error;
};

class InvalidManifestError : public Error {
public:
    using Error::Error;
};

class MissingCheckpointError : public Error {
public:
    explicit MissingCheckpointError(const std::string& stage)
        : Error("missing checkpoint for stage: " + stage), stage_(stage) {}
    const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

}  // namespace geogap
