#pragma once

#include "rkts/error.hpp"
#include "rkts/numeric.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rkts {

enum class TokenKind {
    OpenParen,
    CloseParen,
    QuoteMark,
    NumberLiteral,
    StringLiteral,
    BooleanLiteral,
    Identifier,
};

struct Token {
    TokenKind kind;
    std::string text;  // raw lexeme, including quotes for string literals
    int line;
    int column;
    std::size_t offset;  // byte offset into the source text
};

// A number literal is an exact integer, an exact ratio p/q (q != 0), or an
// inexact decimal (optionally with an exponent).
using NumberValue = std::variant<BigRational, double>;

// Returns the parsed number when `text` lexes as a number literal. Any
// non-delimiter run that does not is an identifier.
std::optional<NumberValue> classify_number(std::string_view text);

// Splits source text into tokens. Line comments (`;` to end of line) and
// whitespace are skipped. Throws ParseError for unterminated strings and
// illegal (control) characters.
std::vector<Token> tokenize(std::string_view text);

}  // namespace rkts
