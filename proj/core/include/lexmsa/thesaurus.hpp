#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexmsa/tokens.hpp"

namespace lexmsa {

struct ThesaurusEntry {
    Token first;   ///< lexicographically smaller side
    Token second;
    std::size_t witnesses = 0;

    bool operator==(const ThesaurusEntry&) const = default;
};

/// Symmetric, irreflexive paraphrase relation over phrases. Multi-word
/// phrases are stored fused (see fuse_phrase). Paraphrase tests use the
/// equivalence closure of the listed pairs.
class Thesaurus {
public:
    /// Adds an unordered pair. Returns false for (p, p) or a pair already listed.
    bool add(const Token& a, const Token& b, std::size_t witnesses = 0);
    bool add(const TokenSeq& a, const TokenSeq& b, std::size_t witnesses = 0);

    bool contains(const Token& a, const Token& b) const;
    /// True when a != b and both fall in the same closure class.
    bool paraphrases(const Token& a, const Token& b) const;
    /// Closure class id, or -1 for tokens the thesaurus does not mention.
    long class_of(const Token& t) const;

    /// Entries sorted by (first, second).
    std::vector<ThesaurusEntry> entries() const;
    std::size_t size() const { return pairs_.size(); }
    bool empty() const { return pairs_.empty(); }

    /// Rewrites every occurrence of a listed multi-word phrase as its fused
    /// token, preferring the longest phrase at each position.
    TokenSeq fuse(const TokenSeq& tokens) const;

    /// One pair per line, tab separated, phrase words joined by spaces; a
    /// third column carries witness counts when `with_witnesses` is set.
    std::string to_tsv(bool with_witnesses = false) const;
    static Thesaurus from_tsv(std::string_view text);

    bool operator==(const Thesaurus& other) const { return pairs_ == other.pairs_; }

private:
    void merge_classes(const Token& a, const Token& b);

    std::map<std::pair<Token, Token>, std::size_t> pairs_;
    std::unordered_map<Token, long> class_;
    long next_class_ = 0;
    std::vector<TokenSeq> phrases_;  // multi-word phrases, longest first
};

} // namespace lexmsa
