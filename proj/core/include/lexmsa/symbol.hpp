#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexmsa/tokens.hpp"

namespace lexmsa {

/// One alignment element: a word token or an argument slot.
class Symbol {
public:
    enum class Kind : std::uint8_t { Word, Slot };

    static Symbol word(Token token) { return Symbol(Kind::Word, std::move(token)); }
    static Symbol slot(std::string role) { return Symbol(Kind::Slot, std::move(role)); }

    Kind kind() const { return kind_; }
    bool is_word() const { return kind_ == Kind::Word; }
    bool is_slot() const { return kind_ == Kind::Slot; }
    /// The token for words, the role for slots.
    const std::string& text() const { return text_; }

    /// "[role]" for slots, the display form of the token for words.
    std::string label() const;

    auto operator<=>(const Symbol&) const = default;
    bool operator==(const Symbol&) const = default;

private:
    Symbol(Kind kind, std::string text) : kind_(kind), text_(std::move(text)) {}

    Kind kind_;
    std::string text_;
};

/// A position in an alignment row; std::nullopt is a gap.
using Cell = std::optional<Symbol>;

std::vector<Symbol> to_symbols(std::span<const Token> tokens);

/// Either a gap or a non-empty set of symbols (one lattice column).
class AlignmentSymbol {
public:
    static AlignmentSymbol gap() { return AlignmentSymbol(); }
    /// Sorted and deduplicated. Throws ContractError when empty.
    static AlignmentSymbol of(std::vector<Symbol> symbols);
    static AlignmentSymbol of(Symbol s) { return of(std::vector<Symbol>{std::move(s)}); }
    static AlignmentSymbol word(Token t) { return of(Symbol::word(std::move(t))); }

    bool is_gap() const { return symbols_.empty(); }
    const std::vector<Symbol>& symbols() const { return symbols_; }

private:
    AlignmentSymbol() = default;
    std::vector<Symbol> symbols_;
};

} // namespace lexmsa
