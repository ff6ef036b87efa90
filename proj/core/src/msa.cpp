#include "lexmsa/msa.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

#include "lexmsa/error.hpp"

namespace lexmsa {

namespace {

constexpr double kEps = 1e-9;

// Column of an alignment as (symbol id, multiplicity) pairs.
struct Profile {
    std::vector<std::vector<std::pair<int, int>>> columns;
    std::vector<int> non_gaps;
    int rows = 0;
};

Profile make_profile(const Msa& m, std::map<Symbol, int>& ids, std::vector<const Symbol*>& table)
{
    Profile p;
    p.rows = static_cast<int>(m.rows());
    p.columns.resize(m.cols());
    p.non_gaps.assign(m.cols(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::map<int, int> counts;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            const Cell& cell = m.at(r, c);
            if (!cell)
                continue;
            auto [it, fresh] = ids.emplace(*cell, static_cast<int>(table.size()));
            if (fresh)
                table.push_back(&it->first);
            ++counts[it->second];
            ++p.non_gaps[c];
        }
        p.columns[c].assign(counts.begin(), counts.end());
    }
    return p;
}

struct ProfilePair {
    Profile a, b;
    std::vector<std::vector<double>> sim;  // [id in a][id in b]
    double gap = 0.0;

    ProfilePair(const Msa& ma, const Msa& mb, const Similarity& s)
    {
        std::map<Symbol, int> ids_a, ids_b;
        std::vector<const Symbol*> ta, tb;
        a = make_profile(ma, ids_a, ta);
        b = make_profile(mb, ids_b, tb);
        sim.assign(ta.size(), std::vector<double>(tb.size()));
        for (std::size_t i = 0; i < ta.size(); ++i)
            for (std::size_t j = 0; j < tb.size(); ++j)
                sim[i][j] = s(*ta[i], *tb[j]);
        gap = s.constants().gap;
    }

    double match(std::size_t i, std::size_t j) const
    {
        double total = 0.0;
        for (auto [x, cx] : a.columns[i])
            for (auto [y, cy] : b.columns[j])
                total += static_cast<double>(cx) * cy * sim[x][y];
        int gaps_a = a.rows - a.non_gaps[i];
        int gaps_b = b.rows - b.non_gaps[j];
        total += gap * (static_cast<double>(a.non_gaps[i]) * gaps_b + static_cast<double>(gaps_a) * b.non_gaps[j]);
        return total;
    }
    double gap_in_b(std::size_t i) const { return gap * a.non_gaps[i] * b.rows; }
    double gap_in_a(std::size_t j) const { return gap * b.non_gaps[j] * a.rows; }
};

bool close(double x, double y)
{
    return std::abs(x - y) <= kEps * std::max(1.0, std::abs(x));
}

std::string content_key(const Msa& m)
{
    std::vector<std::string> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string s;
        for (const auto& cell : m.row(r)) {
            if (!cell)
                s += '\x1d';
            else if (cell->is_slot())
                s += '\x1c' + cell->text();
            else
                s += cell->text();
            s += '\x1e';
        }
        rows.push_back(std::move(s));
    }
    std::sort(rows.begin(), rows.end());
    std::string key;
    for (const auto& r : rows) {
        key += r;
        key += '\x1f';
    }
    return key;
}

} // namespace

Msa Msa::from_sequence(std::vector<Symbol> sequence, std::size_t origin)
{
    std::vector<Cell> row(sequence.begin(), sequence.end());
    return Msa({std::move(row)}, {origin});
}

Msa Msa::from_tokens(std::span<const Token> tokens, std::size_t origin)
{
    return from_sequence(to_symbols(tokens), origin);
}

Msa::Msa(std::vector<std::vector<Cell>> rows, std::vector<std::size_t> origins)
    : rows_(std::move(rows)), origins_(std::move(origins))
{
    if (rows_.empty())
        throw InvariantError("an alignment needs at least one row");
    if (origins_.size() != rows_.size())
        throw InvariantError("one origin per alignment row is required");
    cols_ = rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != cols_)
            throw InvariantError("alignment rows differ in length");
    for (std::size_t c = 0; c < cols_; ++c)
        if (non_gaps_in_column(c) == 0)
            throw InvariantError("alignment column " + std::to_string(c) + " is all gaps");
}

std::vector<Symbol> Msa::row_symbols(std::size_t r) const
{
    std::vector<Symbol> out;
    for (const auto& cell : rows_[r])
        if (cell)
            out.push_back(*cell);
    return out;
}

std::size_t Msa::non_gaps_in_column(std::size_t c) const
{
    std::size_t n = 0;
    for (const auto& r : rows_)
        n += r[c].has_value();
    return n;
}

Msa Msa::sorted_by_origin() const
{
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return origins_[x] < origins_[y]; });
    std::vector<std::vector<Cell>> rows;
    std::vector<std::size_t> origins;
    for (auto i : order) {
        rows.push_back(rows_[i]);
        origins.push_back(origins_[i]);
    }
    return Msa(std::move(rows), std::move(origins));
}

double sop_score(const Msa& m, const Similarity& sim)
{
    double total = 0.0;
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t s = r + 1; s < m.rows(); ++s)
                if (m.at(r, c) || m.at(s, c))
                    total += sim(m.at(r, c), m.at(s, c));
    return total;
}

Msa align_pair(const Msa& a, const Msa& b, const Similarity& sim)
{
    ProfilePair pp(a, b, sim);
    const std::size_t n = a.cols();
    const std::size_t m = b.cols();

    std::vector<std::vector<double>> h(n + 1, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 1; i <= n; ++i)
        h[i][0] = h[i - 1][0] + pp.gap_in_b(i - 1);
    for (std::size_t j = 1; j <= m; ++j)
        h[0][j] = h[0][j - 1] + pp.gap_in_a(j - 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= m; ++j)
            h[i][j] = std::max({h[i - 1][j - 1] + pp.match(i - 1, j - 1), h[i][j - 1] + pp.gap_in_a(j - 1),
                                h[i - 1][j] + pp.gap_in_b(i - 1)});

    // Traceback: (column of a or npos, column of b or npos), built in reverse.
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::pair<std::size_t, std::size_t>> steps;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && close(h[i][j], h[i - 1][j - 1] + pp.match(i - 1, j - 1))) {
            steps.emplace_back(--i, --j);
        } else if (j > 0 && close(h[i][j], h[i][j - 1] + pp.gap_in_a(j - 1))) {
            steps.emplace_back(none, --j);
        } else if (i > 0 && close(h[i][j], h[i - 1][j] + pp.gap_in_b(i - 1))) {
            steps.emplace_back(--i, none);
        } else {
            throw InvariantError("alignment traceback lost the optimal path");
        }
    }
    std::reverse(steps.begin(), steps.end());

    std::vector<std::vector<Cell>> rows(a.rows() + b.rows());
    for (auto& r : rows)
        r.reserve(steps.size());
    for (auto [ca, cb] : steps) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            rows[r].push_back(ca == none ? Cell{} : a.at(r, ca));
        for (std::size_t r = 0; r < b.rows(); ++r)
            rows[a.rows() + r].push_back(cb == none ? Cell{} : b.at(r, cb));
    }
    std::vector<std::size_t> origins = a.origins();
    origins.insert(origins.end(), b.origins().begin(), b.origins().end());
    return Msa(std::move(rows), std::move(origins));
}

double pair_score(std::span<const Symbol> a, std::span<const Symbol> b, const Similarity& sim)
{
    const double gap = sim.constants().gap;
    std::vector<double> prev(b.size() + 1), cur(b.size() + 1);
    for (std::size_t j = 1; j <= b.size(); ++j)
        prev[j] = prev[j - 1] + gap;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = prev[0] + gap;
        for (std::size_t j = 1; j <= b.size(); ++j)
            cur[j] = std::max({prev[j - 1] + sim(a[i - 1], b[j - 1]), cur[j - 1] + gap, prev[j] + gap});
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

Msa iterative_msa(std::span<const Msa> items, const Similarity& sim)
{
    if (items.empty())
        throw ContractError("iterative_msa needs at least one alignment");

    struct Cluster {
        Msa msa;
        std::vector<std::size_t> members;  // global row ids
        std::string key;
    };
    std::vector<Cluster> clusters;
    std::vector<std::vector<Symbol>> sequences;
    std::vector<std::size_t> owner;
    for (std::size_t k = 0; k < items.size(); ++k) {
        const Msa& item = items[k];
        std::vector<std::size_t> ids;
        for (std::size_t r = 0; r < item.rows(); ++r) {
            ids.push_back(sequences.size());
            sequences.push_back(item.row_symbols(r));
            owner.push_back(k);
        }
        std::vector<std::vector<Cell>> rows;
        for (std::size_t r = 0; r < item.rows(); ++r)
            rows.push_back(item.row(r));
        clusters.push_back({Msa(std::move(rows), ids), ids, content_key(item)});
    }
    if (clusters.size() == 1)
        return clusters.front().msa;

    // Pairwise sequence scores between rows of different items.
    const std::size_t total = sequences.size();
    std::vector<std::vector<double>> pair(total, std::vector<double>(total, 0.0));
    for (std::size_t u = 0; u < total; ++u)
        for (std::size_t v = u + 1; v < total; ++v)
            if (owner[u] != owner[v])
                pair[u][v] = pair[v][u] = pair_score(sequences[u], sequences[v], sim);

    // sum[x][y]: total pairwise score between clusters x and y.
    std::size_t live = clusters.size();
    std::vector<bool> alive(clusters.size(), true);
    std::vector<std::vector<double>> sum(clusters.size(), std::vector<double>(clusters.size(), 0.0));
    for (std::size_t x = 0; x < clusters.size(); ++x)
        for (std::size_t y = x + 1; y < clusters.size(); ++y) {
            double s = 0.0;
            for (auto u : clusters[x].members)
                for (auto v : clusters[y].members)
                    s += pair[u][v];
            sum[x][y] = sum[y][x] = s;
        }

    auto ordered = [&](std::size_t x, std::size_t y) {
        const auto& cx = clusters[x];
        const auto& cy = clusters[y];
        if (cx.key != cy.key)
            return cx.key < cy.key ? std::pair{x, y} : std::pair{y, x};
        return cx.members.front() < cy.members.front() ? std::pair{x, y} : std::pair{y, x};
    };

    while (live > 1) {
        std::size_t bx = 0, by = 0;
        double best = 0.0;
        bool found = false;
        for (std::size_t x = 0; x < clusters.size(); ++x) {
            if (!alive[x])
                continue;
            for (std::size_t y = x + 1; y < clusters.size(); ++y) {
                if (!alive[y])
                    continue;
                double avg = sum[x][y] /
                             static_cast<double>(clusters[x].members.size() * clusters[y].members.size());
                bool better = !found || avg > best + kEps;
                if (!better && close(avg, best)) {
                    auto [p, q] = ordered(x, y);
                    auto [bp, bq] = ordered(bx, by);
                    auto key = std::tie(clusters[p].key, clusters[q].key);
                    auto bkey = std::tie(clusters[bp].key, clusters[bq].key);
                    better = key < bkey ||
                             (key == bkey && std::min(clusters[p].members.front(), clusters[q].members.front()) <
                                                 std::min(clusters[bp].members.front(), clusters[bq].members.front()));
                }
                if (better) {
                    best = avg;
                    bx = x;
                    by = y;
                    found = true;
                }
            }
        }

        auto [first, second] = ordered(bx, by);
        Cluster merged{align_pair(clusters[first].msa, clusters[second].msa, sim), {}, {}};
        merged.members = clusters[first].members;
        merged.members.insert(merged.members.end(), clusters[second].members.begin(), clusters[second].members.end());
        std::sort(merged.members.begin(), merged.members.end());
        merged.key = content_key(merged.msa);

        // Reuse slot `first`; retire `second`.
        for (std::size_t z = 0; z < clusters.size(); ++z) {
            if (!alive[z] || z == first || z == second)
                continue;
            sum[first][z] = sum[z][first] = sum[first][z] + sum[second][z];
        }
        clusters[first] = std::move(merged);
        alive[second] = false;
        --live;
    }

    for (std::size_t x = 0; x < clusters.size(); ++x)
        if (alive[x])
            return clusters[x].msa.sorted_by_origin();
    throw InvariantError("progressive alignment lost every cluster");
}

std::string format_msa(const Msa& m)
{
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (const auto& cell = m.at(r, c))
                width[c] = std::max(width[c], cell->label().size());
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::string line;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.at(r, c);
            std::string label = cell ? cell->label() : "_";
            line += label;
            if (c + 1 < m.cols())
                line += std::string(width[c] - label.size() + 1, ' ');
        }
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace lexmsa
