#pragma once

#include "rkts/error.hpp"
#include "rkts/numeric.hpp"
#include "rkts/token.hpp"

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rkts {

struct SymbolName {
    std::string name;
    friend bool operator==(const SymbolName&, const SymbolName&) = default;
};

struct StringLit {
    std::string value;
    friend bool operator==(const StringLit&, const StringLit&) = default;
};

class Datum;
using DatumPtr = std::shared_ptr<const Datum>;
using DatumSeq = std::vector<DatumPtr>;

/// A located parenthesized datum: the universal surface syntax. The quote
/// shorthand 'd reads as the two-element sequence (quote d).
class Datum {
public:
    using Content = std::variant<BigRational, double, bool, SymbolName, StringLit, DatumSeq>;

    Datum(Content content, SourceLocation location)
        : content_(std::move(content)), location_(location) {}

    const Content& content() const { return content_; }
    SourceLocation location() const { return location_; }

    bool is_symbol() const { return std::holds_alternative<SymbolName>(content_); }
    bool is_symbol(std::string_view name) const {
        auto* s = std::get_if<SymbolName>(&content_);
        return s != nullptr && s->name == name;
    }
    bool is_sequence() const { return std::holds_alternative<DatumSeq>(content_); }

    const std::string& symbol_name() const { return std::get<SymbolName>(content_).name; }
    const DatumSeq& sequence() const { return std::get<DatumSeq>(content_); }

    // (quote d)
    bool is_quote_form() const {
        return is_sequence() && sequence().size() == 2 && sequence()[0]->is_symbol("quote");
    }

private:
    Content content_;
    SourceLocation location_;
};

DatumPtr make_datum(Datum::Content content, SourceLocation location);

struct ReadResult {
    DatumPtr datum;
    std::size_t consumed;  // tokens consumed from the front
};

// Reads one datum from the front of the token sequence.
ReadResult read_datum(std::span<const Token> tokens);

// Reads every datum until the tokens are exhausted.
std::vector<DatumPtr> read_all(std::span<const Token> tokens);

// tokenize + read_all
std::vector<DatumPtr> read_source(std::string_view text);

// Prints a datum so that reading the output back yields a structurally equal
// datum. Sequences print with single spaces; (quote d) prints as 'd.
std::string print_datum(const Datum& d);
std::string print_datum(const DatumPtr& d);

// Structural equality, ignoring source locations.
bool datum_equal(const Datum& a, const Datum& b);

std::string escape_string(std::string_view raw);

}  // namespace rkts
