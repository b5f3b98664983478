#pragma once

#include <exception>
#include <string>
#include <utility>

namespace rkts {

struct SourceLocation {
    int line = 0;
    int column = 0;

    std::string to_string() const {
        return std::to_string(line) + ":" + std::to_string(column);
    }
    friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

// Lexing or reading failed; the source text is not a well-formed program.
class ParseError : public std::exception {
public:
    ParseError(std::string message, SourceLocation location)
        : message_(std::move(message)), location_(location) {}

    const std::string& message() const { return message_; }
    SourceLocation location() const { return location_; }
    const char* what() const noexcept override { return message_.c_str(); }

private:
    std::string message_;
    SourceLocation location_;
};

// Raised by evaluation. The message is stored verbatim: `error` produces a
// RuntimeError whose message is exactly the string it was given.
class RuntimeError : public std::exception {
public:
    RuntimeError(std::string message, SourceLocation location)
        : message_(std::move(message)), location_(location) {}

    const std::string& message() const { return message_; }
    SourceLocation location() const { return location_; }
    const char* what() const noexcept override { return message_.c_str(); }

private:
    std::string message_;
    SourceLocation location_;
};

}  // namespace rkts
