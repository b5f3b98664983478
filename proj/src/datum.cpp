#include "rkts/datum.hpp"

#include <sstream>

namespace rkts {

DatumPtr make_datum(Datum::Content content, SourceLocation location) {
    return std::make_shared<const Datum>(std::move(content), location);
}

namespace {

std::string decode_string_literal(const Token& tok) {
    const std::string& raw = tok.text;  // includes the surrounding quotes
    std::string out;
    for (std::size_t i = 1; i + 1 < raw.size(); ++i) {
        char c = raw[i];
        if (c != '\\') {
            out += c;
            continue;
        }
        ++i;
        switch (raw[i]) {
            case '\\': out += '\\'; break;
            case '"': out += '"'; break;
            case 'n': out += '\n'; break;
            case 't': out += '\t'; break;
            default:
                throw ParseError(std::string("unknown escape sequence \\") + raw[i],
                                 {tok.line, tok.column});
        }
    }
    return out;
}

DatumPtr read_one(std::span<const Token> tokens, std::size_t& pos) {
    if (pos >= tokens.size()) {
        throw ParseError("unexpected end of input", {0, 0});
    }
    const Token& tok = tokens[pos];
    SourceLocation loc{tok.line, tok.column};
    switch (tok.kind) {
        case TokenKind::NumberLiteral: {
            ++pos;
            NumberValue n = *classify_number(tok.text);
            if (std::holds_alternative<BigRational>(n)) {
                return make_datum(std::get<BigRational>(n), loc);
            }
            return make_datum(std::get<double>(n), loc);
        }
        case TokenKind::StringLiteral:
            ++pos;
            return make_datum(StringLit{decode_string_literal(tok)}, loc);
        case TokenKind::BooleanLiteral:
            ++pos;
            return make_datum(tok.text == "#true" || tok.text == "#t", loc);
        case TokenKind::Identifier: {
            ++pos;
            // λ and lambda parse to the identical form.
            std::string name = tok.text == "\xce\xbb" ? "lambda" : tok.text;
            return make_datum(SymbolName{std::move(name)}, loc);
        }
        case TokenKind::QuoteMark: {
            ++pos;
            if (pos >= tokens.size()) {
                throw ParseError("expected a datum after '", loc);
            }
            DatumPtr quoted = read_one(tokens, pos);
            DatumSeq seq;
            seq.push_back(make_datum(SymbolName{"quote"}, loc));
            seq.push_back(std::move(quoted));
            return make_datum(std::move(seq), loc);
        }
        case TokenKind::OpenParen: {
            char open = tok.text[0];
            ++pos;
            DatumSeq seq;
            while (true) {
                if (pos >= tokens.size()) {
                    throw ParseError("unbalanced parentheses: unclosed group", loc);
                }
                if (tokens[pos].kind == TokenKind::CloseParen) {
                    char close = tokens[pos].text[0];
                    bool matched = (open == '(' && close == ')') || (open == '[' && close == ']');
                    if (!matched) {
                        throw ParseError("unbalanced parentheses: mismatched closing bracket",
                                         {tokens[pos].line, tokens[pos].column});
                    }
                    ++pos;
                    return make_datum(std::move(seq), loc);
                }
                seq.push_back(read_one(tokens, pos));
            }
        }
        case TokenKind::CloseParen:
            throw ParseError("unbalanced parentheses: unexpected closing bracket", loc);
    }
    throw ParseError("unrecognized token", loc);
}

}  // namespace

ReadResult read_datum(std::span<const Token> tokens) {
    std::size_t pos = 0;
    DatumPtr d = read_one(tokens, pos);
    return {std::move(d), pos};
}

std::vector<DatumPtr> read_all(std::span<const Token> tokens) {
    std::vector<DatumPtr> data;
    std::size_t pos = 0;
    while (pos < tokens.size()) {
        data.push_back(read_one(tokens, pos));
    }
    return data;
}

std::vector<DatumPtr> read_source(std::string_view text) {
    return read_all(tokenize(text));
}

std::string escape_string(std::string_view raw) {
    std::string out = "\"";
    for (char c : raw) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

namespace {

void print_to(const Datum& d, std::ostringstream& out) {
    std::visit(
        [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, BigRational>) {
                out << rational_to_string(c);
            } else if constexpr (std::is_same_v<T, double>) {
                out << inexact_to_string(c);
            } else if constexpr (std::is_same_v<T, bool>) {
                out << (c ? "#true" : "#false");
            } else if constexpr (std::is_same_v<T, SymbolName>) {
                out << c.name;
            } else if constexpr (std::is_same_v<T, StringLit>) {
                out << escape_string(c.value);
            } else {
                if (d.is_quote_form()) {
                    out << '\'';
                    print_to(*d.sequence()[1], out);
                    return;
                }
                out << '(';
                for (std::size_t i = 0; i < c.size(); ++i) {
                    if (i > 0) out << ' ';
                    print_to(*c[i], out);
                }
                out << ')';
            }
        },
        d.content());
}

}  // namespace

std::string print_datum(const Datum& d) {
    std::ostringstream out;
    print_to(d, out);
    return out.str();
}

std::string print_datum(const DatumPtr& d) {
    return print_datum(*d);
}

bool datum_equal(const Datum& a, const Datum& b) {
    if (a.content().index() != b.content().index()) return false;
    return std::visit(
        [&](const auto& ca) {
            using T = std::decay_t<decltype(ca)>;
            const auto& cb = std::get<T>(b.content());
            if constexpr (std::is_same_v<T, DatumSeq>) {
                if (ca.size() != cb.size()) return false;
                for (std::size_t i = 0; i < ca.size(); ++i) {
                    if (!datum_equal(*ca[i], *cb[i])) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, double>) {
                return ca == cb || (ca != ca && cb != cb);
            } else {
                return ca == cb;
            }
        },
        a.content());
}

}  // namespace rkts
