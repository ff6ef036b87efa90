#include "lexmsa/thesaurus_induction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexmsa/error.hpp"
#include "parallel.hpp"

namespace lexmsa {

namespace {

bool is_match_column(const Msa& m, std::size_t c, const Similarity& sim)
{
    const Cell& x = m.at(0, c);
    const Cell& y = m.at(1, c);
    return x && y && sim(*x, *y) >= sim.constants().paraphrase;
}

TokenSeq interior(const Msa& m, std::size_t row, std::size_t lo, std::size_t hi)
{
    TokenSeq out;
    for (std::size_t c = lo + 1; c < hi; ++c)
        if (const Cell& cell = m.at(row, c))
            out.push_back(cell->text());
    return out;
}

// A sausage side as a single token: constituent words fused together.
Token as_phrase(const TokenSeq& side)
{
    if (side.size() == 1)
        return side.front();
    TokenSeq words;
    for (const auto& t : side)
        for (auto& w : unfuse_phrase(t))
            words.push_back(std::move(w));
    return fuse_phrase(words);
}

} // namespace

std::vector<Sausage> extract_sausages(const Msa& m, const Similarity& sim)
{
    if (m.rows() != 2)
        throw ContractError("sausage extraction needs a 2-row alignment");
    std::vector<Sausage> out;
    bool have_entry = false;
    std::size_t entry = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_match_column(m, c, sim))
            continue;
        if (have_entry && c > entry + 1) {
            Sausage s{entry, c, interior(m, 0, entry, c), interior(m, 1, entry, c)};
            if (!s.first.empty() && !s.second.empty())
                out.push_back(std::move(s));
        }
        have_entry = true;
        entry = c;
    }
    return out;
}

Corpus fuse_corpus(const Corpus& c, const Thesaurus& t)
{
    std::vector<InstanceRecord> records = c.records();
    for (auto& r : records)
        for (auto& v : r.verbalizations)
            v = t.fuse(v);
    return Corpus(std::move(records));
}

ThesaurusInduction induce_thesaurus(const Corpus& c, const ThesaurusConfig& config, const Thesaurus& seed)
{
    if (!config.sim.valid())
        throw ContractError("similarity constants must satisfy match > paraphrase > 0 > gap > mismatch");

    ThesaurusInduction result;
    result.thesaurus = seed;

    std::vector<AlignmentRef> tasks;
    for (std::size_t r = 0; r < c.size(); ++r) {
        const auto n = c.records()[r].verbalizations.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                tasks.push_back({r, i, j});
    }
    result.alignments = tasks.size();

    while (result.iterations < config.max_iterations) {
        ++result.iterations;
        const Corpus work = fuse_corpus(c, result.thesaurus);
        const Similarity sim(result.thesaurus, config.sim);

        struct Found {
            bool retained = false;
            std::vector<std::pair<Token, Token>> candidates;
        };
        std::vector<Found> found(tasks.size());
        detail::parallel_for(tasks.size(), config.threads, [&](std::size_t k) {
            const auto& task = tasks[k];
            const auto& verbs = work.records()[task.record].verbalizations;
            Msa m = align_pair(Msa::from_tokens(verbs[task.first], 0), Msa::from_tokens(verbs[task.second], 1), sim);
            if (sop_score(m, sim) < config.score_cutoff)
                return;
            found[k].retained = true;
            std::set<std::pair<Token, Token>> seen;
            for (const auto& s : extract_sausages(m, sim)) {
                if (s.first.size() > config.interior_cap || s.second.size() > config.interior_cap)
                    continue;
                Token a = as_phrase(s.first);
                Token b = as_phrase(s.second);
                if (a == b || result.thesaurus.paraphrases(a, b))
                    continue;
                if (b < a)
                    std::swap(a, b);
                if (seen.emplace(a, b).second)
                    found[k].candidates.emplace_back(std::move(a), std::move(b));
            }
        });

        std::map<std::pair<Token, Token>, std::vector<AlignmentRef>> witnesses;
        result.retained = 0;
        for (std::size_t k = 0; k < tasks.size(); ++k) {
            result.retained += found[k].retained;
            for (const auto& cand : found[k].candidates)
                witnesses[cand].push_back(tasks[k]);
        }

        bool added = false;
        for (auto& [pair, refs] : witnesses) {
            if (refs.size() < config.witness_k)
                continue;
            if (result.thesaurus.add(pair.first, pair.second, refs.size())) {
                result.promoted.push_back({pair.first, pair.second, result.iterations, std::move(refs)});
                added = true;
            }
        }
        if (!added)
            break;
    }
    return result;
}

} // namespace lexmsa
