#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kansei {

enum class ErrorCode {
    // lexicon
    EmptyWord,
    UnknownWord,
    RepresentativeNotInGroup,
    DuplicateAssignment,
    // survey
    BadHeader,
    OutOfRangeRating,
    MissingCell,
    DuplicateRespondent,
    EmptyMatrix,
    NoSuchGender,
    IncompleteMatrix,
    // pca
    TooFewRows,
    NotSymmetric,
    NoConvergence,
    BadComponentIndex,
    // interpret
    EmptyName,
    UnknownSample,
    // catalog
    UnknownFeature,
    UnknownCanonicalValue,
    // colorvote
    DuplicateColorName,
    EmptyBallots,
    // cli
    BadPlotKind,
    // plumbing
    IoFailure,
    InvalidValue,
    InvalidSetting,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// One schema violation found while reading an input file. line is 1-based
// for CSV inputs and 0 when no line applies (JSON schema checks).
struct Diagnostic {
    std::string file;
    int line = 0;
    ErrorCode code = ErrorCode::InvalidValue;
    std::string message;
};

// Collects diagnostics during validation. Parsers throw on the first
// problem unless a collector is attached, in which case they record the
// issue and keep scanning so a validate run reports everything at once.
class Diagnostics {
public:
    void add(std::string file, int line, ErrorCode code, std::string message) {
        items_.push_back({std::move(file), line, code, std::move(message)});
    }

    const std::vector<Diagnostic>& items() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

private:
    std::vector<Diagnostic> items_;
};

namespace detail {

// Either throws immediately (strict parse) or appends to a collector
// (validation scan). Returns only in the collecting case.
inline void report(Diagnostics* diag, const std::string& file, int line, ErrorCode code,
                   const std::string& message) {
    if (diag == nullptr) {
        throw Error(code, file.empty() ? message : file + ": " + message);
    }
    diag->add(file, line, code, message);
}

} // namespace detail
} // namespace kansei
