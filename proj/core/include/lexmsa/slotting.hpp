#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexmsa/corpus.hpp"
#include "lexmsa/lattice.hpp"
#include "lexmsa/thesaurus.hpp"

namespace lexmsa {

/// A path of consecutive lattice nodes whose words match an argument value.
struct NodeRun {
    std::vector<NodeId> nodes;
    std::size_t coverage = 0;       ///< distinct value symbols matched
    std::size_t paths_through = 0;  ///< summed over the run's nodes

    bool operator==(const NodeRun&) const = default;
};

/// Candidate runs for `value`, best first: larger coverage, then more
/// paths through, then earlier nodes. A node qualifies when one of its words
/// equals or paraphrases a value token (covering all its symbols) or one of
/// the value's atomic symbols (covering that symbol). Runs are maximal paths
/// in the subgraph of qualifying nodes. A word equal to (or a paraphrase of)
/// a token of one of `other_values` and of no token of `value` does not
/// qualify, so sibling arguments sharing symbols like "=" keep their own words.
std::vector<NodeRun> candidate_runs(const Lattice& l, const TokenSeq& value, const Thesaurus& t,
                                    const std::vector<TokenSeq>& other_values = {});

/// Best candidate, or nullopt if no node qualifies. Throws ContractError on an empty value.
std::optional<NodeRun> match_argument(const Lattice& l, const TokenSeq& value, const Thesaurus& t,
                                      const std::vector<TokenSeq>& other_values = {});

struct SlotMatch {
    std::string role;
    NodeRun run;                 ///< in the lattice as it was when the role was processed
    std::size_t rows_touched = 0;
    std::size_t rows_moved = 0;
    std::size_t rows_absorbed = 0;
};

/// A lattice in which matched argument values have become slot nodes.
struct SlottedLattice {
    std::string predicate;
    Lattice lattice;
    std::vector<SlotMatch> slots;  ///< in role declaration order

    bool zero_slots() const { return slots.empty(); }
    std::vector<std::string> roles() const;
};

/// Replaces argument-value matches by slots, one role at a time in
/// declaration order.
///
/// The replacement works on the rows of the lattice's source alignment. Each
/// row whose cells match the chosen run loses the span those cells cover,
/// and the slot takes its place in a new column. Other rows join the slot in
/// two ways. A row with its own matching cells aligned elsewhere moves them
/// into the slot when only gaps separate them from it. A row that leaves the
/// same context node before the span and re-enters at the same node after it
/// has its divergent stretch replaced by the slot; an unrelated paraphrase of
/// the value ("their product" for "a*b=0") disappears this way. Columns left
/// empty are dropped. The result is again the lattice of an alignment, so
/// every slotted row is a start-to-end path.
///
/// Throws ContractError if `inst` is a term.
SlottedLattice make_slotted(const Lattice& l, const InstanceRecord& inst, const Thesaurus& t);

} // namespace lexmsa
