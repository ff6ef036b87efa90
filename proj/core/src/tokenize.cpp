#include "lexmsa/tokens.hpp"

#include <algorithm>
#include <cctype>

namespace lexmsa {

namespace {

bool is_ascii_space(char c)
{
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_alpha(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_trailing_punct(char c)
{
    switch (c) {
    case '.': case ',': case ';': case ':': case '!': case '?': case '"':
        return true;
    default:
        return false;
    }
}

bool is_atom_char(unsigned char c)
{
    return std::isalnum(c) || c == '_' || c >= 0x80;
}

// letters, optionally joined by '-' or '\''; hyphen-separated parts need two
// or more letters so that formulas like "A-N" are not mistaken for words.
bool is_alphabetic_word(std::string_view s)
{
    if (s.empty() || !is_alpha(s.front()) || !is_alpha(s.back()))
        return false;
    std::size_t part = 0;
    bool hyphen = false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (is_alpha(c)) {
            ++part;
            continue;
        }
        if (c != '-' && c != '\'')
            return false;
        if (!is_alpha(s[i + 1]))
            return false;
        if (c == '-') {
            if (part < 2)
                return false;
            hyphen = true;
            part = 0;
        }
    }
    return !hyphen || part >= 2;
}

void emit_chunk(std::string_view chunk, TokenSeq& out)
{
    std::size_t lead = 0;
    while (lead < chunk.size() && chunk[lead] == '"')
        ++lead;
    for (std::size_t i = 0; i < lead; ++i)
        out.emplace_back("\"");
    chunk.remove_prefix(lead);

    std::size_t end = chunk.size();
    while (end > 0 && is_trailing_punct(chunk[end - 1]))
        --end;
    std::string_view body = chunk.substr(0, end);
    if (!body.empty()) {
        std::string word(body);
        if (is_alphabetic_word(word))
            std::transform(word.begin(), word.end(), word.begin(),
                           [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        out.push_back(std::move(word));
    }
    for (std::size_t i = end; i < chunk.size(); ++i)
        out.emplace_back(1, chunk[i]);
}

} // namespace

Token fuse_phrase(std::span<const Token> words)
{
    Token out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i)
            out += kPhraseJoiner;
        out += words[i];
    }
    return out;
}

TokenSeq unfuse_phrase(const Token& token)
{
    TokenSeq out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t next = token.find(kPhraseJoiner, pos);
        out.push_back(token.substr(pos, next - pos));
        if (next == std::string::npos)
            break;
        pos = next + kPhraseJoiner.size();
    }
    return out;
}

bool is_fused(const Token& token)
{
    return token.find(kPhraseJoiner) != std::string::npos;
}

std::string display_token(const Token& token)
{
    if (!is_fused(token))
        return token;
    std::string out;
    auto words = unfuse_phrase(token);
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i)
            out += ' ';
        out += words[i];
    }
    return out;
}

bool is_punctuation(const Token& token)
{
    static constexpr std::string_view marks = ".,;:!?'\"`()[]{}-";
    return !token.empty() && std::all_of(token.begin(), token.end(), [](char c) {
        return marks.find(c) != std::string_view::npos;
    });
}

TokenSeq tokenize(std::string_view text)
{
    TokenSeq out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_ascii_space(text[i]))
            ++i;
        std::size_t start = i;
        while (i < text.size() && !is_ascii_space(text[i]))
            ++i;
        if (i > start)
            emit_chunk(text.substr(start, i - start), out);
    }
    return out;
}

std::string join_tokens(std::span<const Token> tokens)
{
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i)
            out += ' ';
        out += tokens[i];
    }
    return out;
}

std::string detokenize(std::span<const Token> tokens)
{
    static constexpr std::string_view closers = ".,;:!?)";
    std::string out;
    for (const auto& tok : tokens) {
        bool attach = tok.size() == 1 && closers.find(tok[0]) != std::string_view::npos;
        if (!out.empty() && !attach)
            out += ' ';
        out += display_token(tok);
    }
    if (!out.empty() && out[0] >= 'a' && out[0] <= 'z')
        out[0] = static_cast<char>(out[0] - 'a' + 'A');
    return out;
}

std::vector<std::string> symbolize(const Token& token)
{
    std::vector<std::string> atoms;
    std::size_t i = 0;
    while (i < token.size()) {
        auto c = static_cast<unsigned char>(token[i]);
        if (is_atom_char(c)) {
            std::size_t j = i;
            while (j < token.size() && is_atom_char(static_cast<unsigned char>(token[j])))
                ++j;
            atoms.push_back(token.substr(i, j - i));
            i = j;
        } else {
            atoms.emplace_back(1, token[i]);
            ++i;
        }
    }
    if (atoms.size() <= 1)
        return {token};
    return atoms;
}

} // namespace lexmsa
