#include "lexmsa/symbol.hpp"

#include <algorithm>

#include "lexmsa/error.hpp"

namespace lexmsa {

std::string Symbol::label() const
{
    if (is_slot())
        return "[" + text_ + "]";
    return display_token(text_);
}

std::vector<Symbol> to_symbols(std::span<const Token> tokens)
{
    std::vector<Symbol> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens)
        out.push_back(Symbol::word(t));
    return out;
}

AlignmentSymbol AlignmentSymbol::of(std::vector<Symbol> symbols)
{
    if (symbols.empty())
        throw ContractError("a symbol set must be non-empty");
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    AlignmentSymbol s;
    s.symbols_ = std::move(symbols);
    return s;
}

} // namespace lexmsa
