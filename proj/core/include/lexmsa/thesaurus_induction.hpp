#pragma once

#include <cstddef>
#include <vector>

#include "lexmsa/corpus.hpp"
#include "lexmsa/msa.hpp"
#include "lexmsa/similarity.hpp"
#include "lexmsa/thesaurus.hpp"

namespace lexmsa {

/// A region where two aligned rows diverge between two shared columns.
struct Sausage {
    std::size_t entry_col = 0;  ///< match column before the interior
    std::size_t exit_col = 0;   ///< match column after the interior
    TokenSeq first;             ///< row 0 interior, gaps removed
    TokenSeq second;            ///< row 1 interior, gaps removed

    bool operator==(const Sausage&) const = default;
};

/// Match columns are those where both rows are non-gap and sim >= paraphrase.
/// Returns one sausage per pair of consecutive match columns whose interior
/// is non-empty on both rows. Throws ContractError unless m has 2 rows.
std::vector<Sausage> extract_sausages(const Msa& m, const Similarity& sim);

struct ThesaurusConfig {
    SimConstants sim;
    double score_cutoff = 4.0;      ///< minimum sop_score of a retained alignment
    std::size_t witness_k = 2;      ///< distinct alignments needed for promotion
    std::size_t interior_cap = 4;   ///< max tokens per sausage side
    std::size_t max_iterations = 100;
    unsigned threads = 1;
};

/// One pairwise alignment of two verbalizations of the same record.
struct AlignmentRef {
    std::size_t record = 0;
    std::size_t first = 0;
    std::size_t second = 0;

    auto operator<=>(const AlignmentRef&) const = default;
};

struct PromotedPair {
    Token first;
    Token second;
    std::size_t iteration = 0;  ///< 1-based pass that promoted the pair
    std::vector<AlignmentRef> witnesses;
};

struct ThesaurusInduction {
    Thesaurus thesaurus;
    std::vector<PromotedPair> promoted;  ///< in promotion order
    std::size_t iterations = 0;          ///< passes run, including the final quiet one
    std::size_t alignments = 0;          ///< pairwise alignments per pass
    std::size_t retained = 0;            ///< alignments above the cutoff in the last pass
};

/// Verbalizations rewritten with the thesaurus's multi-word phrases fused.
Corpus fuse_corpus(const Corpus& c, const Thesaurus& t);

/// Fixpoint paraphrase induction over within-record verbalization pairs.
/// `seed` pairs are treated as already known. Output does not depend on
/// `threads`.
ThesaurusInduction induce_thesaurus(const Corpus& c, const ThesaurusConfig& config = {}, const Thesaurus& seed = {});

} // namespace lexmsa
