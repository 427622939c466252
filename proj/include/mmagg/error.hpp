#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmagg {

enum class ErrorCode {
    DuplicateRank,
    RankOutOfRange,
    ElementOutOfRange,
    InvalidRanking,
    SizeMismatch,
    KindMismatch,
    InvalidInstance,
    Infeasible,
    Unbounded,
    IterationLimit,
    SingleClass,
    TooLarge,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the file readers; `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& message)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace mmagg
