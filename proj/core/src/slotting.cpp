#include "lexmsa/slotting.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "lexmsa/error.hpp"

namespace lexmsa {

namespace {

// Upper bound on enumerated runs; lattices from a handful of sentences stay far below it.
constexpr std::size_t kMaxRuns = 20000;
// Longest stretch a bracketing row may lose to a slot it does not itself match.
constexpr std::size_t kMaxAbsorbed = 6;

// Atomic symbols of a value and which of them each value token covers.
// Words that equal or paraphrase a whole token of another argument's value
// belong to that argument and never match this one.
class ValueIndex {
public:
    ValueIndex(const TokenSeq& value, const std::vector<TokenSeq>& others, const Thesaurus& t) : t_(&t)
    {
        for (const auto& tok : value) {
            std::vector<int> ids;
            for (const auto& atom : symbolize(tok)) {
                auto [it, fresh] = atoms_.emplace(atom, static_cast<int>(atoms_.size()));
                ids.push_back(it->second);
            }
            tokens_.emplace_back(tok, std::move(ids));
        }
        for (const auto& v : others)
            foreign_.insert(foreign_.end(), v.begin(), v.end());
    }

    void cover(const Symbol& s, std::set<int>& out) const
    {
        if (!s.is_word())
            return;
        const Token& w = s.text();
        bool own = false;
        for (const auto& [tok, ids] : tokens_)
            if (w == tok || t_->paraphrases(w, tok)) {
                out.insert(ids.begin(), ids.end());
                own = true;
            }
        if (!own && std::any_of(foreign_.begin(), foreign_.end(),
                                [&](const Token& f) { return w == f || t_->paraphrases(w, f); }))
            return;
        for (const auto& [atom, id] : atoms_)
            if (w == atom || t_->paraphrases(w, atom))
                out.insert(id);
    }

    bool qualifies(const Cell& c) const
    {
        if (!c)
            return false;
        std::set<int> s;
        cover(*c, s);
        return !s.empty();
    }

private:
    const Thesaurus* t_;
    std::map<std::string, int> atoms_;
    std::vector<std::pair<Token, std::vector<int>>> tokens_;
    TokenSeq foreign_;
};

using Rows = std::vector<std::vector<Cell>>;

bool has_slot(const std::vector<Cell>& row, std::size_t lo, std::size_t hi)
{
    for (std::size_t c = lo; c <= hi; ++c)
        if (row[c] && row[c]->is_slot())
            return true;
    return false;
}

Rows drop_empty_columns(const Rows& rows)
{
    const std::size_t cols = rows.front().size();
    std::vector<bool> keep(cols, false);
    for (const auto& r : rows)
        for (std::size_t c = 0; c < cols; ++c)
            keep[c] = keep[c] || r[c].has_value();
    Rows out(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c)
            if (keep[c])
                out[i].push_back(rows[i][c]);
    return out;
}

// Tries to replace `run` by a slot. Returns false when a touching row already
// holds a slot inside the span the new slot would take.
bool apply_run(Rows& rows, const Lattice& lat, const NodeRun& run, const ValueIndex& index, SlotMatch& match)
{
    std::set<std::size_t> run_cols;
    for (NodeId n : run.nodes)
        run_cols.insert(lat.column(n));

    const std::size_t n_rows = rows.size();
    std::vector<bool> touching(n_rows, false);
    std::vector<std::size_t> last(n_rows, 0);
    std::size_t lo = SIZE_MAX;
    for (std::size_t r = 0; r < n_rows; ++r)
        for (std::size_t c : run_cols)
            if (index.qualifies(rows[r][c])) {
                touching[r] = true;
                last[r] = std::max(last[r], c);
                lo = std::min(lo, c);
            }
    if (lo == SIZE_MAX)
        return false;
    for (std::size_t r = 0; r < n_rows; ++r)
        if (touching[r] && has_slot(rows[r], lo, last[r]))
            return false;

    const std::size_t cols = rows.front().size();
    std::set<std::pair<std::size_t, std::size_t>> brackets;
    for (std::size_t r = 0; r < n_rows; ++r) {
        if (!touching[r])
            continue;
        std::size_t p = lo, s = last[r] + 1;
        while (p > 0 && !rows[r][p - 1])
            --p;
        while (s < cols && !rows[r][s])
            ++s;
        if (p > 0 && s < cols)
            brackets.emplace(p - 1, s);
    }

    std::vector<std::pair<std::size_t, std::size_t>> gapped(n_rows, {1, 0});  // empty range
    std::vector<bool> slotted = touching;
    // A touching row loses everything from the slot position to its last
    // matching cell; cells after that keep their place behind the slot.
    for (std::size_t r = 0; r < n_rows; ++r)
        if (touching[r])
            gapped[r] = {lo, last[r]};

    // Rows whose own matching cells sit elsewhere but next to the slot
    // position, with only gaps in between, move those cells into the slot.
    for (std::size_t q = 0; q < n_rows; ++q) {
        if (touching[q])
            continue;
        std::size_t best_cover = 0;
        std::pair<std::size_t, std::size_t> best_span{1, 0};
        std::size_t c = 0;
        while (c < cols) {
            if (!index.qualifies(rows[q][c])) {
                ++c;
                continue;
            }
            std::set<int> cover;
            std::size_t first = c, last = c;
            for (; c < cols; ++c) {
                if (!rows[q][c])
                    continue;
                if (!index.qualifies(rows[q][c]))
                    break;
                index.cover(*rows[q][c], cover);
                last = c;
            }
            if (cover.size() > best_cover) {
                best_cover = cover.size();
                best_span = {first, last};
            }
        }
        if (best_cover == 0)
            continue;
        auto [g1, g2] = best_span;
        std::size_t from = g2 < lo ? g2 + 1 : lo;
        std::size_t to = g2 < lo ? lo : g1;  // exclusive
        bool clear = true;
        for (std::size_t k = from; k < to; ++k)
            clear = clear && !rows[q][k];
        if (!clear || has_slot(rows[q], g1, g2))
            continue;
        gapped[q] = best_span;
        slotted[q] = true;
        ++match.rows_moved;
    }

    for (std::size_t q = 0; q < n_rows; ++q) {
        if (slotted[q])
            continue;
        for (auto [p, s] : brackets) {
            if (!rows[q][p] || !rows[q][s] || s - p < 2 || has_slot(rows[q], p + 1, s - 1))
                continue;
            std::size_t inner = 0;
            for (std::size_t c = p + 1; c < s; ++c)
                inner += rows[q][c].has_value();
            if (inner == 0 || inner > kMaxAbsorbed)
                continue;
            gapped[q] = {p + 1, s - 1};
            slotted[q] = true;
            ++match.rows_absorbed;
            break;
        }
    }

    Rows next(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        auto& out = next[r];
        out.reserve(cols + 1);
        for (std::size_t c = 0; c < cols; ++c) {
            if (c == lo)
                out.push_back(slotted[r] ? Cell{Symbol::slot(match.role)} : Cell{});
            bool gone = gapped[r].first <= c && c <= gapped[r].second;
            out.push_back(gone ? Cell{} : rows[r][c]);
        }
        match.rows_touched += touching[r];
    }
    rows = drop_empty_columns(next);
    return true;
}

} // namespace

std::vector<NodeRun> candidate_runs(const Lattice& l, const TokenSeq& value, const Thesaurus& t,
                                    const std::vector<TokenSeq>& other_values)
{
    if (value.empty())
        throw ContractError("argument value must be non-empty");
    ValueIndex index(value, other_values, t);

    std::vector<std::set<int>> cover(l.size());
    std::vector<bool> good(l.size(), false);
    for (NodeId n = 0; n < l.size(); ++n) {
        if (l.is_terminal(n))
            continue;
        for (const auto& s : l.node(n).payload)
            index.cover(s, cover[n]);
        good[n] = !cover[n].empty();
    }

    std::vector<NodeRun> runs;
    std::vector<NodeId> path;
    auto extend = [&](auto&& self, NodeId u) -> void {
        if (runs.size() >= kMaxRuns)
            return;
        path.push_back(u);
        bool leaf = true;
        for (NodeId v : l.successors(u))
            if (good[v]) {
                leaf = false;
                self(self, v);
            }
        if (leaf) {
            NodeRun run;
            run.nodes = path;
            std::set<int> all;
            for (NodeId n : path) {
                all.insert(cover[n].begin(), cover[n].end());
                run.paths_through += l.node(n).paths_through;
            }
            run.coverage = all.size();
            runs.push_back(std::move(run));
        }
        path.pop_back();
    };
    for (NodeId n = 0; n < l.size(); ++n) {
        if (!good[n])
            continue;
        bool root = std::none_of(l.predecessors(n).begin(), l.predecessors(n).end(), [&](NodeId p) { return good[p]; });
        if (root)
            extend(extend, n);
    }

    std::sort(runs.begin(), runs.end(), [](const NodeRun& a, const NodeRun& b) {
        if (a.coverage != b.coverage)
            return a.coverage > b.coverage;
        if (a.paths_through != b.paths_through)
            return a.paths_through > b.paths_through;
        return a.nodes < b.nodes;
    });
    return runs;
}

std::optional<NodeRun> match_argument(const Lattice& l, const TokenSeq& value, const Thesaurus& t,
                                      const std::vector<TokenSeq>& other_values)
{
    auto runs = candidate_runs(l, value, t, other_values);
    if (runs.empty())
        return std::nullopt;
    return runs.front();
}

std::vector<std::string> SlottedLattice::roles() const
{
    std::vector<std::string> out;
    for (const auto& s : slots)
        out.push_back(s.role);
    return out;
}

SlottedLattice make_slotted(const Lattice& l, const InstanceRecord& inst, const Thesaurus& t)
{
    if (!inst.semantics.is_predicate())
        throw ContractError("only predicate instances can be slotted");

    const Msa& source = l.source();
    Rows rows;
    for (std::size_t r = 0; r < source.rows(); ++r)
        rows.push_back(source.row(r));
    std::vector<SlotMatch> slots;

    for (const auto& arg : inst.semantics.args()) {
        std::vector<TokenSeq> others;
        for (const auto& o : inst.semantics.args())
            if (o.role != arg.role)
                others.push_back(o.value);
        Lattice current(Msa(rows, source.origins()));
        ValueIndex index(arg.value, others, t);
        for (const auto& run : candidate_runs(current, arg.value, t, others)) {
            SlotMatch match{arg.role, run, 0, 0};
            if (apply_run(rows, current, run, index, match)) {
                slots.push_back(std::move(match));
                break;
            }
        }
    }
    return SlottedLattice{inst.semantics.name(), Lattice(Msa(std::move(rows), source.origins())), std::move(slots)};
}

} // namespace lexmsa
