#pragma once

// Brute-force reference implementations. They share nothing with the
// library's dynamic programs beyond the input types.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexmsa/corpus.hpp"
#include "lexmsa/induction.hpp"

namespace lexmsa_test {

/// Elementary scores restated from scratch: identical tokens, listed
/// paraphrase pairs (taken as already closed), anything else, and a gap.
struct PlainScores {
    double match = 1.0;
    double paraphrase = 0.5;
    double gap = -0.01;
    double mismatch = -0.5;
    std::set<std::pair<std::string, std::string>> paraphrases;

    double operator()(const std::string& x, const std::string& y) const;
};

/// Best score over every alignment of a and b, found by enumerating them all.
double exhaustive_alignment_score(const std::vector<std::string>& a, const std::vector<std::string>& b,
                                  const PlainScores& s);
/// Number of alignments the enumeration visits (a Delannoy number).
std::size_t alignment_count(std::size_t n, std::size_t m);

struct BrutePath {
    bool found = false;
    double mean = 0.0;
    std::vector<std::size_t> nodes;  ///< one optimal path's interior
};

/// Enumerates every start-to-end path of the DAG.
BrutePath brute_force_consensus(const lexmsa::WeightedDag& dag, std::size_t min_length);

/// Best total shared-symbol count over every monotone one-to-one matching.
std::size_t exhaustive_segmentation_score(const std::vector<lexmsa::SemanticExpression>& steps,
                                          const std::vector<lexmsa::TokenSeq>& sentences);

/// Multiset intersection size, restated.
std::size_t plain_shared(const lexmsa::SemanticExpression& step, const lexmsa::TokenSeq& sentence);

} // namespace lexmsa_test
