#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexmsa {

/// A word, punctuation mark, math formula, or a fused multi-word phrase.
using Token = std::string;
using TokenSeq = std::vector<Token>;

/// Joins the words of a fused phrase. U+00A0 (no-break space) never appears
/// as a token separator because the tokenizer only splits on ASCII whitespace.
inline constexpr std::string_view kPhraseJoiner = "\xC2\xA0";

Token fuse_phrase(std::span<const Token> words);
TokenSeq unfuse_phrase(const Token& token);
bool is_fused(const Token& token);

/// Human-readable form: joiner replaced by a plain space.
std::string display_token(const Token& token);

/// Sentence punctuation: tokens made only of . , ; : ! ? ' " ( ) and friends.
bool is_punctuation(const Token& token);

/// Splits on ASCII whitespace, peels leading quotes and trailing sentence
/// punctuation into their own tokens, and lowercases purely alphabetic words.
/// Formulas written without internal spaces stay single tokens.
TokenSeq tokenize(std::string_view text);

/// Tokens joined with single spaces; tokenize(join_tokens(tokenize(s))) == tokenize(s).
std::string join_tokens(std::span<const Token> tokens);

/// Display form of a token sequence: no space before punctuation, first
/// letter capitalized, joiners expanded.
std::string detokenize(std::span<const Token> tokens);

/// Atomic symbols of a token, used when matching argument values against
/// words: "a*b=0" -> {a, *, b, =, 0}. Alphanumeric runs (with '_') stay whole.
/// A token without operator characters is its own single symbol.
std::vector<std::string> symbolize(const Token& token);

} // namespace lexmsa
