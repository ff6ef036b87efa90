#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lexmsa/msa.hpp"
#include "lexmsa/symbol.hpp"

namespace lexmsa {

using NodeId = std::size_t;

struct LatticeNode {
    /// Distinct symbols of the column, sorted. Empty for start and end.
    std::vector<Symbol> payload;
    /// Symbol multiplicities in the column, parallel to payload.
    std::vector<std::size_t> counts;
    /// Number of rows that pass through the node.
    std::size_t paths_through = 0;
};

/// Word lattice read off an alignment. Node 0 is the start, column c becomes
/// node c + 1 and the end is node cols + 1, so ids are already a topological
/// order. Each row is a path start -> its non-gap columns -> end.
class Lattice {
public:
    explicit Lattice(Msa source);

    const Msa& source() const { return source_; }
    std::size_t size() const { return nodes_.size(); }
    NodeId start() const { return 0; }
    NodeId end() const { return nodes_.size() - 1; }
    bool is_terminal(NodeId n) const { return n == start() || n == end(); }

    const LatticeNode& node(NodeId n) const { return nodes_[n]; }
    /// Column of an inner node.
    std::size_t column(NodeId n) const { return n - 1; }
    NodeId node_of_column(std::size_t c) const { return c + 1; }

    const std::vector<NodeId>& successors(NodeId n) const { return succ_[n]; }
    const std::vector<NodeId>& predecessors(NodeId n) const { return pred_[n]; }
    /// All edges sorted by (from, to).
    std::vector<std::pair<NodeId, NodeId>> edges() const;
    bool has_edge(NodeId from, NodeId to) const;

    /// Node sequence of row r, terminals included.
    std::vector<NodeId> row_path(std::size_t r) const;
    /// True when `symbols` can be read along some start-to-end path.
    bool accepts(const std::vector<Symbol>& symbols) const;

    /// Payload labels joined with "/".
    std::string node_label(NodeId n) const;

private:
    Msa source_;
    std::vector<LatticeNode> nodes_;
    std::vector<std::vector<NodeId>> succ_;
    std::vector<std::vector<NodeId>> pred_;
};

inline Lattice msa_to_lattice(const Msa& m) { return Lattice(m); }

/// Graphviz rendering. `weights`, if non-empty, is shown under each label.
std::string to_dot(const Lattice& l, const std::string& name = "lattice", const std::vector<double>& weights = {});

} // namespace lexmsa
