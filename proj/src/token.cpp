#include "rkts/token.hpp"

#include <cctype>
#include <charconv>

namespace rkts {

namespace {

bool is_delimiter(char c) {
    switch (c) {
        case ' ':
        case '\t':
        case '\n':
        case '\r':
        case '(':
        case ')':
        case '[':
        case ']':
        case '"':
        case ';':
        case '\'':
            return true;
        default:
            return false;
    }
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

std::optional<double> parse_double(std::string_view body, bool negative) {
    std::string t;
    if (negative) t += '-';
    if (!body.empty() && body.front() == '.') t += '0';
    t += body;
    if (!t.empty() && t.back() == '.') t += '0';
    double out = 0.0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
    if (ec != std::errc() || p != t.data() + t.size()) return std::nullopt;
    return out;
}

}  // namespace

std::optional<NumberValue> classify_number(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    if (i >= text.size()) return std::nullopt;  // bare sign

    std::size_t int_start = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    std::size_t int_digits = i - int_start;

    if (i == text.size()) {
        if (int_digits == 0) return std::nullopt;
        BigInt n(std::string(text.substr(int_start)));
        if (negative) n = -n;
        return NumberValue(BigRational(n));
    }

    if (text[i] == '/') {
        // ratio p/q, q != 0
        if (int_digits == 0) return std::nullopt;
        std::size_t den_start = i + 1;
        std::size_t j = den_start;
        while (j < text.size() && is_digit(text[j])) ++j;
        if (j != text.size() || j == den_start) return std::nullopt;
        BigInt den(std::string(text.substr(den_start)));
        if (den == 0) return std::nullopt;
        BigInt num(std::string(text.substr(int_start, int_digits)));
        if (negative) num = -num;
        return NumberValue(BigRational(num, den));
    }

    // decimal, optionally with exponent
    std::size_t frac_digits = 0;
    if (text[i] == '.') {
        ++i;
        std::size_t frac_start = i;
        while (i < text.size() && is_digit(text[i])) ++i;
        frac_digits = i - frac_start;
    }
    if (int_digits == 0 && frac_digits == 0) return std::nullopt;
    bool has_marker = i > int_start + int_digits;  // saw a '.'
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        std::size_t exp_start = j;
        while (j < text.size() && is_digit(text[j])) ++j;
        if (j == exp_start) return std::nullopt;
        i = j;
        has_marker = true;
    }
    if (i != text.size() || !has_marker) return std::nullopt;
    auto d = parse_double(text.substr(int_start), negative);
    if (!d) return std::nullopt;
    return NumberValue(*d);
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    int line = 1;
    int column = 1;

    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++i;
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(c);
            continue;
        }
        if (c == ';') {
            while (i < text.size() && text[i] != '\n') advance(text[i]);
            continue;
        }

        SourceLocation loc{line, column};
        std::size_t start = i;

        if (c == '(' || c == '[') {
            advance(c);
            tokens.push_back({TokenKind::OpenParen, std::string(1, c), loc.line, loc.column, start});
            continue;
        }
        if (c == ')' || c == ']') {
            advance(c);
            tokens.push_back({TokenKind::CloseParen, std::string(1, c), loc.line, loc.column, start});
            continue;
        }
        if (c == '\'') {
            advance(c);
            tokens.push_back({TokenKind::QuoteMark, "'", loc.line, loc.column, start});
            continue;
        }
        if (c == '"') {
            advance(c);
            bool closed = false;
            while (i < text.size()) {
                char s = text[i];
                if (s == '\\') {
                    advance(s);
                    if (i < text.size()) advance(text[i]);
                    continue;
                }
                advance(s);
                if (s == '"') {
                    closed = true;
                    break;
                }
            }
            if (!closed) throw ParseError("unterminated string literal", loc);
            tokens.push_back({TokenKind::StringLiteral, std::string(text.substr(start, i - start)),
                              loc.line, loc.column, start});
            continue;
        }
        if (static_cast<unsigned char>(c) < 0x20) {
            throw ParseError("illegal character", loc);
        }

        // maximal non-delimiter run
        while (i < text.size() && !is_delimiter(text[i])) advance(text[i]);
        std::string_view run = text.substr(start, i - start);
        TokenKind kind;
        if (classify_number(run)) {
            kind = TokenKind::NumberLiteral;
        } else if (run == "#true" || run == "#false" || run == "#t" || run == "#f") {
            kind = TokenKind::BooleanLiteral;
        } else {
            kind = TokenKind::Identifier;
        }
        tokens.push_back({kind, std::string(run), loc.line, loc.column, start});
    }
    return tokens;
}

}  // namespace rkts
