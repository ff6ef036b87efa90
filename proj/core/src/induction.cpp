#include "lexmsa/induction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "lexmsa/error.hpp"

namespace lexmsa {

namespace {

bool weak_word(const Symbol& s)
{
    return s.is_word() &&
           (is_punctuation(s.text()) || std::find(kStopWords.begin(), kStopWords.end(), s.text()) != kStopWords.end());
}

bool greater(double x, double y)
{
    return x > y + 1e-12 * std::max(1.0, std::abs(y));
}

} // namespace

const Symbol& representative(const Lattice& l, NodeId n)
{
    if (l.is_terminal(n))
        throw ContractError("start and end carry no symbols");
    const auto& node = l.node(n);
    std::size_t best = 0;
    for (std::size_t i = 1; i < node.payload.size(); ++i)
        if (node.counts[i] > node.counts[best])
            best = i;
    return node.payload[best];
}

double node_weight(const Lattice& l, NodeId n, double downweight)
{
    if (l.is_terminal(n))
        return 0.0;
    const auto& node = l.node(n);
    double d = 1.0;
    if (!representative(l, n).is_slot() && std::any_of(node.payload.begin(), node.payload.end(), weak_word))
        d = downweight;
    return static_cast<double>(node.paths_through) * d;
}

std::vector<double> node_weights(const Lattice& l, double downweight)
{
    std::vector<double> w(l.size());
    for (NodeId n = 0; n < l.size(); ++n)
        w[n] = node_weight(l, n, downweight);
    return w;
}

UnifiedSlottedLattice cross_instance_align(std::span<const SlottedLattice> lattices, const Similarity& sim,
                                           double downweight)
{
    if (lattices.empty())
        throw ContractError("cross-instance alignment needs at least one lattice");
    std::vector<Msa> items;
    std::vector<std::size_t> rows;
    for (const auto& s : lattices) {
        if (s.predicate != lattices.front().predicate)
            throw ContractError("cross-instance alignment mixes predicates " + lattices.front().predicate + " and " +
                                s.predicate);
        items.push_back(s.lattice.source());
        rows.push_back(s.lattice.source().rows());
    }
    Lattice merged(lattices.size() == 1 ? items.front() : iterative_msa(items, sim));
    auto weights = node_weights(merged, downweight);
    return {lattices.front().predicate, std::move(merged), std::move(weights), std::move(rows)};
}

WeightedDag to_weighted_dag(const Lattice& l, const std::vector<double>& weights)
{
    WeightedDag dag;
    dag.weights = weights;
    dag.successors.resize(l.size());
    dag.roles.assign(l.size(), -1);
    std::map<std::string, int> role_ids;
    for (NodeId n = 0; n < l.size(); ++n) {
        dag.successors[n] = l.successors(n);
        if (!l.is_terminal(n)) {
            const Symbol& rep = representative(l, n);
            if (rep.is_slot())
                dag.roles[n] = role_ids.emplace(rep.text(), static_cast<int>(role_ids.size())).first->second;
        }
    }
    return dag;
}

std::optional<ConsensusPath> consensus_path(const WeightedDag& dag, std::size_t min_length)
{
    const std::size_t n = dag.size();
    if (n < 2)
        throw ContractError("a path graph needs start and end");
    const std::size_t end = n - 1;
    min_length = std::max<std::size_t>(min_length, 1);

    // Only roles held by two or more nodes can repeat along a path.
    std::map<int, int> role_nodes;
    for (int r : dag.roles)
        if (r >= 0)
            ++role_nodes[r];
    std::map<int, int> bit_of;
    for (auto [r, k] : role_nodes)
        if (k > 1)
            bit_of.emplace(r, static_cast<int>(bit_of.size()));
    if (bit_of.size() > 16)
        throw ContractError("too many repeated slot roles for exact consensus");
    const std::size_t masks = std::size_t{1} << bit_of.size();
    const std::size_t lengths = n - 1;  // interior length 0 .. n-2

    constexpr double none = -std::numeric_limits<double>::infinity();
    auto at = [&](std::size_t v, std::size_t len, std::size_t mask) { return (v * lengths + len) * masks + mask; };
    std::vector<double> best(n * lengths * masks, none);
    struct Back {
        std::size_t node = 0;
        std::size_t mask = 0;
    };
    std::vector<Back> back(best.size());
    best[at(0, 0, 0)] = 0.0;

    for (std::size_t u = 0; u < end; ++u) {
        for (std::size_t len = 0; len < lengths; ++len) {
            for (std::size_t mask = 0; mask < masks; ++mask) {
                double here = best[at(u, len, mask)];
                if (here == none)
                    continue;
                for (std::size_t v : dag.successors[u]) {
                    if (v == end || len + 1 >= lengths)
                        continue;
                    std::size_t next_mask = mask;
                    if (auto it = bit_of.find(dag.roles[v]); dag.roles[v] >= 0 && it != bit_of.end()) {
                        std::size_t bit = std::size_t{1} << it->second;
                        if (mask & bit)
                            continue;
                        next_mask |= bit;
                    }
                    double cand = here + dag.weights[v];
                    auto& slot = best[at(v, len + 1, next_mask)];
                    if (slot == none || greater(cand, slot)) {
                        slot = cand;
                        back[at(v, len + 1, next_mask)] = {u, mask};
                    }
                }
            }
        }
    }

    bool found = false;
    double best_mean = 0.0;
    std::size_t bu = 0, blen = 0, bmask = 0;
    for (std::size_t len = min_length; len < lengths; ++len)
        for (std::size_t u = 1; u < end; ++u) {
            if (std::find(dag.successors[u].begin(), dag.successors[u].end(), end) == dag.successors[u].end())
                continue;
            for (std::size_t mask = 0; mask < masks; ++mask) {
                double sum = best[at(u, len, mask)];
                if (sum == none)
                    continue;
                double mean = sum / static_cast<double>(len);
                if (!found || greater(mean, best_mean)) {
                    found = true;
                    best_mean = mean;
                    bu = u;
                    blen = len;
                    bmask = mask;
                }
            }
        }
    if (!found)
        return std::nullopt;

    ConsensusPath path;
    path.mean = best_mean;
    std::size_t v = bu, len = blen, mask = bmask;
    while (len > 0) {
        path.nodes.push_back(v);
        Back b = back[at(v, len, mask)];
        v = b.node;
        mask = b.mask;
        --len;
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    return path;
}

std::vector<std::string> Template::roles() const
{
    std::vector<std::string> out;
    for (const auto& e : elements)
        if (e.is_slot() && std::find(out.begin(), out.end(), e.text()) == out.end())
            out.push_back(e.text());
    return out;
}

std::string Template::to_string() const
{
    std::string out;
    for (const auto& e : elements) {
        if (!out.empty())
            out += ' ';
        out += e.label();
    }
    return out;
}

std::optional<Template> consensus(const UnifiedSlottedLattice& u, std::size_t min_length)
{
    auto path = consensus_path(to_weighted_dag(u.lattice, u.weights), min_length);
    if (!path)
        return std::nullopt;
    Template t{u.predicate, {}};
    for (std::size_t n : path->nodes)
        t.elements.push_back(representative(u.lattice, n));
    return t;
}

} // namespace lexmsa
