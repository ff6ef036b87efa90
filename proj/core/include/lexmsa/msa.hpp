#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lexmsa/similarity.hpp"
#include "lexmsa/symbol.hpp"

namespace lexmsa {

/// n-row correspondence table over symbols and gaps.
///
/// Invariants checked on construction: at least one row, rectangular, and
/// no column made only of gaps. A 1-row Msa is how a plain sequence enters
/// alignment.
class Msa {
public:
    static Msa from_sequence(std::vector<Symbol> sequence, std::size_t origin = 0);
    static Msa from_tokens(std::span<const Token> tokens, std::size_t origin = 0);

    /// Throws InvariantError if the table violates the invariants above.
    Msa(std::vector<std::vector<Cell>> rows, std::vector<std::size_t> origins);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Cell& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
    const std::vector<Cell>& row(std::size_t r) const { return rows_[r]; }
    /// Index of the source sequence that row r came from.
    std::size_t origin(std::size_t r) const { return origins_[r]; }
    const std::vector<std::size_t>& origins() const { return origins_; }

    /// Row r with gaps removed.
    std::vector<Symbol> row_symbols(std::size_t r) const;
    std::size_t non_gaps_in_column(std::size_t c) const;

    /// Same table with rows reordered by ascending origin.
    Msa sorted_by_origin() const;

    bool operator==(const Msa&) const = default;

private:
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::size_t> origins_;
    std::size_t cols_ = 0;
};

/// Sum over columns of sim over unordered row pairs; gap/gap pairs add 0.
double sop_score(const Msa& m, const Similarity& sim);

/// Optimal merge of two alignments by dynamic programming over column
/// prefixes. Existing columns are kept intact; each step aligns a column of
/// `a` with one of `b`, or pairs one of them with an all-gap column. The
/// objective is the sum-of-pairs score of the merged table. Ties prefer
/// aligning columns, then a gap in `a`, then a gap in `b`.
/// Rows of `a` come first in the result.
Msa align_pair(const Msa& a, const Msa& b, const Similarity& sim);

/// Optimal sum-of-pairs score of aligning two plain sequences (no traceback).
double pair_score(std::span<const Symbol> a, std::span<const Symbol> b, const Similarity& sim);

/// Progressive alignment. Repeatedly merges the two current alignments with
/// the highest average pairwise score between their source sequences; the
/// pairwise scores are computed once up front. Ties go to the pair whose
/// contents sort first, so the result does not depend on input order.
///
/// Output rows are ordered by origin, where origin indexes the
/// concatenation of the items' rows.
Msa iterative_msa(std::span<const Msa> items, const Similarity& sim);

/// Fixed-width text table with "_" for gaps, one row per line.
std::string format_msa(const Msa& m);

} // namespace lexmsa
