#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmsa/corpus.hpp"

namespace lexmsa {

struct StepSentencePair {
    std::size_t step;
    std::size_t sentence;

    bool operator==(const StepSentencePair&) const = default;
};

/// Multiset intersection between the step's symbols (predicate name, argument
/// and term value tokens) and the sentence tokens.
std::size_t shared_symbol_count(const SemanticExpression& step, std::span<const Token> sentence);

/// Monotone one-to-one partial matching of steps to sentences that maximizes
/// the total shared-symbol count; among optimal matchings the one with more
/// pairs wins, then the one using earlier sentences.
std::vector<StepSentencePair> segment_pairs(std::span<const SemanticExpression> steps,
                                            std::span<const TokenSeq> sentences);

/// Splits on '.', '!' or '?' followed by whitespace or end of text.
std::vector<std::string> split_sentences(std::string_view narrative);

/// A proof as a list of steps plus one or more free-text verbalizations.
struct RawProof {
    std::string id;
    std::vector<SemanticExpression> steps;
    std::vector<std::string> narratives;
};

/// Line-oriented JSON with `steps` (array of expressions), `narrative`
/// (string) or `narratives` (array), and an optional `proof` id.
std::vector<RawProof> parse_raw_proofs(std::string_view document);

struct Segmentation {
    Corpus corpus;
    std::size_t pairs = 0;
};

/// Segments every narrative and gathers, per (proof, step), the sentences
/// matched to it across narratives. Steps without any sentence are dropped.
/// Proofs sharing an id (or identical step lists when no id is given) pool
/// their narratives.
Segmentation corpus_from_raw_proofs(std::span<const RawProof> proofs);

} // namespace lexmsa
