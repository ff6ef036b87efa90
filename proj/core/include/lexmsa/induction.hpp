#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lexmsa/lattice.hpp"
#include "lexmsa/similarity.hpp"
#include "lexmsa/slotting.hpp"

namespace lexmsa {

/// Words whose nodes carry little template evidence on their own.
inline const std::vector<Token> kStopWords = {"the", "a", "to", "and", "of"};

/// Most frequent symbol of a node's column; ties go to the smaller symbol.
/// Throws ContractError for start and end.
const Symbol& representative(const Lattice& l, NodeId n);

/// paths_through x d, where d = `downweight` when the node's payload holds
/// a punctuation mark or a stop word and its representative is not a slot,
/// else 1. Start and end weigh 0.
double node_weight(const Lattice& l, NodeId n, double downweight = 0.1);
std::vector<double> node_weights(const Lattice& l, double downweight = 0.1);

/// Slotted lattices of all instances of one predicate merged into one.
struct UnifiedSlottedLattice {
    std::string predicate;
    Lattice lattice;
    std::vector<double> weights;              ///< per node, see node_weight
    std::vector<std::size_t> rows_per_input;  ///< rows contributed by each input, in input order
};

/// Progressive alignment of the inputs' alignments, with slots compared by
/// role. Throws ContractError on an empty list or mixed predicates.
UnifiedSlottedLattice cross_instance_align(std::span<const SlottedLattice> lattices, const Similarity& sim,
                                           double downweight = 0.1);

/// A DAG whose node ids are a topological order: edges go from lower to
/// higher ids, `start` is 0 and `end` is the last node.
struct WeightedDag {
    std::vector<std::vector<std::size_t>> successors;
    std::vector<double> weights;
    /// Slot role id per node or -1. A path may not visit one role twice.
    std::vector<int> roles;

    std::size_t size() const { return successors.size(); }
};

WeightedDag to_weighted_dag(const Lattice& l, const std::vector<double>& weights);

struct ConsensusPath {
    std::vector<std::size_t> nodes;  ///< interior nodes, start and end excluded
    double mean = 0.0;
};

/// Start-to-end path maximizing the mean weight of its interior nodes among
/// paths with at least `min_length` interior nodes and no repeated role.
/// Exact: dynamic programming over (node, length, roles used). Equal means
/// prefer the shorter path, then the one found through smaller node ids.
std::optional<ConsensusPath> consensus_path(const WeightedDag& dag, std::size_t min_length);

/// Sequence of words and slots emitted for a predicate.
struct Template {
    std::string predicate;
    std::vector<Symbol> elements;

    /// Slot roles in order of first appearance.
    std::vector<std::string> roles() const;
    std::size_t arity() const { return roles().size(); }
    /// Words as display text, slots as "[role]".
    std::string to_string() const;

    bool operator==(const Template&) const = default;
};

/// Template read off the consensus path, or nullopt when no path reaches the floor.
std::optional<Template> consensus(const UnifiedSlottedLattice& u, std::size_t min_length = 6);

} // namespace lexmsa
