#include "lexmsa/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace lexmsa {

Lattice::Lattice(Msa source) : source_(std::move(source))
{
    const std::size_t cols = source_.cols();
    nodes_.resize(cols + 2);
    succ_.resize(cols + 2);
    pred_.resize(cols + 2);
    for (std::size_t c = 0; c < cols; ++c) {
        std::map<Symbol, std::size_t> counts;
        for (std::size_t r = 0; r < source_.rows(); ++r)
            if (const auto& cell = source_.at(r, c))
                ++counts[*cell];
        auto& node = nodes_[c + 1];
        for (const auto& [sym, k] : counts) {
            node.payload.push_back(sym);
            node.counts.push_back(k);
            node.paths_through += k;
        }
    }
    nodes_.front().paths_through = nodes_.back().paths_through = source_.rows();

    std::set<std::pair<NodeId, NodeId>> edges;
    for (std::size_t r = 0; r < source_.rows(); ++r) {
        auto path = row_path(r);
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            edges.emplace(path[i], path[i + 1]);
    }
    for (auto [u, v] : edges) {
        succ_[u].push_back(v);
        pred_[v].push_back(u);
    }
    for (auto& p : pred_)
        std::sort(p.begin(), p.end());
}

std::vector<std::pair<NodeId, NodeId>> Lattice::edges() const
{
    std::vector<std::pair<NodeId, NodeId>> out;
    for (NodeId u = 0; u < succ_.size(); ++u)
        for (NodeId v : succ_[u])
            out.emplace_back(u, v);
    return out;
}

bool Lattice::has_edge(NodeId from, NodeId to) const
{
    const auto& s = succ_[from];
    return std::binary_search(s.begin(), s.end(), to);
}

std::vector<NodeId> Lattice::row_path(std::size_t r) const
{
    std::vector<NodeId> path{start()};
    for (std::size_t c = 0; c < source_.cols(); ++c)
        if (source_.at(r, c))
            path.push_back(node_of_column(c));
    path.push_back(end());
    return path;
}

bool Lattice::accepts(const std::vector<Symbol>& symbols) const
{
    std::vector<char> frontier(size(), 0);
    frontier[start()] = 1;
    for (const auto& s : symbols) {
        std::vector<char> next(size(), 0);
        bool any = false;
        for (NodeId u = 0; u < size(); ++u) {
            if (!frontier[u])
                continue;
            for (NodeId v : succ_[u]) {
                const auto& p = nodes_[v].payload;
                if (std::binary_search(p.begin(), p.end(), s)) {
                    next[v] = 1;
                    any = true;
                }
            }
        }
        if (!any)
            return false;
        frontier.swap(next);
    }
    for (NodeId u = 0; u < size(); ++u)
        if (frontier[u] && has_edge(u, end()))
            return true;
    return false;
}

std::string Lattice::node_label(NodeId n) const
{
    if (n == start())
        return "<start>";
    if (n == end())
        return "<end>";
    std::string out;
    for (const auto& s : nodes_[n].payload) {
        if (!out.empty())
            out += '/';
        out += s.label();
    }
    return out;
}

namespace {

std::string dot_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\')
            out += '\\';
        out += ch;
    }
    return out;
}

} // namespace

std::string to_dot(const Lattice& l, const std::string& name, const std::vector<double>& weights)
{
    std::string out = "digraph \"" + dot_escape(name) + "\" {\n  rankdir=LR;\n";
    for (NodeId n = 0; n < l.size(); ++n) {
        std::string label = dot_escape(l.node_label(n));
        if (!weights.empty() && !l.is_terminal(n)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3g", weights[n]);
            label += "\\n";
            label += buf;
        }
        out += "  n" + std::to_string(n) + " [label=\"" + label + "\"";
        if (l.is_terminal(n))
            out += ", shape=point";
        out += "];\n";
    }
    for (auto [u, v] : l.edges())
        out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

} // namespace lexmsa
