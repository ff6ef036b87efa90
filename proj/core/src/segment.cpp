#include "lexmsa/segment.hpp"

#include <map>
#include <utility>

#include <json.hpp>

#include "lexmsa/error.hpp"
#include "lines.hpp"

namespace lexmsa {

using nlohmann::json;

std::size_t shared_symbol_count(const SemanticExpression& step, std::span<const Token> sentence)
{
    std::map<Token, std::size_t> bag;
    if (step.is_predicate()) {
        for (const auto& t : tokenize(step.name()))
            ++bag[t];
        for (const auto& a : step.args())
            for (const auto& t : a.value)
                ++bag[t];
    } else {
        for (const auto& t : step.term_value())
            ++bag[t];
    }
    std::size_t shared = 0;
    for (const auto& t : sentence) {
        auto it = bag.find(t);
        if (it != bag.end() && it->second > 0) {
            --it->second;
            ++shared;
        }
    }
    return shared;
}

std::vector<StepSentencePair> segment_pairs(std::span<const SemanticExpression> steps,
                                            std::span<const TokenSeq> sentences)
{
    const std::size_t n = steps.size();
    const std::size_t m = sentences.size();
    if (n == 0 || m == 0)
        return {};

    // (total shared symbols, matched pairs), compared lexicographically.
    using Value = std::pair<std::size_t, std::size_t>;
    std::vector<std::vector<std::size_t>> score(n, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            score[i][j] = shared_symbol_count(steps[i], sentences[j]);

    std::vector<std::vector<Value>> best(n + 1, std::vector<Value>(m + 1, {0, 0}));
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            Value match{best[i - 1][j - 1].first + score[i - 1][j - 1], best[i - 1][j - 1].second + 1};
            best[i][j] = std::max({best[i - 1][j], best[i][j - 1], match});
        }
    }

    std::vector<StepSentencePair> out;
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        Value match{best[i - 1][j - 1].first + score[i - 1][j - 1], best[i - 1][j - 1].second + 1};
        if (best[i][j - 1] == best[i][j]) {
            --j;  // leaving the later sentence unmatched keeps matches early
        } else if (match == best[i][j]) {
            out.push_back({i - 1, j - 1});
            --i;
            --j;
        } else {
            --i;
        }
    }
    return {out.rbegin(), out.rend()};
}

std::vector<std::string> split_sentences(std::string_view narrative)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < narrative.size(); ++i) {
        char c = narrative[i];
        if (c != '.' && c != '!' && c != '?')
            continue;
        bool boundary = i + 1 == narrative.size() || narrative[i + 1] == ' ' || narrative[i + 1] == '\n' ||
                        narrative[i + 1] == '\t' || narrative[i + 1] == '\r';
        if (!boundary)
            continue;
        std::string_view s = narrative.substr(start, i + 1 - start);
        if (s.find_first_not_of(" \t\r\n") != std::string_view::npos)
            out.emplace_back(s.substr(s.find_first_not_of(" \t\r\n")));
        start = i + 1;
    }
    std::string_view rest = narrative.substr(std::min(start, narrative.size()));
    if (auto p = rest.find_first_not_of(" \t\r\n"); p != std::string_view::npos)
        out.emplace_back(rest.substr(p));
    return out;
}

std::vector<RawProof> parse_raw_proofs(std::string_view document)
{
    std::vector<RawProof> out;
    detail::for_each_line(document, [&](std::string_view line, std::size_t line_no) {
        json obj;
        try {
            obj = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(line_no, "<record>", std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw ParseError(line_no, "<record>", "expected a JSON object");

        RawProof proof;
        if (auto it = obj.find("proof"); it != obj.end()) {
            if (!it->is_string())
                throw ParseError(line_no, "proof", "expected a string");
            proof.id = it->get<std::string>();
        }
        auto steps = obj.find("steps");
        if (steps == obj.end() || !steps->is_array() || steps->empty())
            throw ParseError(line_no, "steps", "expected a non-empty array");
        for (const auto& s : *steps)
            proof.steps.push_back(parse_expression_json(s.dump(), line_no));

        if (auto it = obj.find("narrative"); it != obj.end()) {
            if (!it->is_string())
                throw ParseError(line_no, "narrative", "expected a string");
            proof.narratives.push_back(it->get<std::string>());
        }
        if (auto it = obj.find("narratives"); it != obj.end()) {
            if (!it->is_array())
                throw ParseError(line_no, "narratives", "expected an array");
            for (const auto& n : *it) {
                if (!n.is_string())
                    throw ParseError(line_no, "narratives", "expected strings");
                proof.narratives.push_back(n.get<std::string>());
            }
        }
        if (proof.narratives.empty())
            throw ParseError(line_no, "narrative", "missing");
        out.push_back(std::move(proof));
    });
    return out;
}

Segmentation corpus_from_raw_proofs(std::span<const RawProof> proofs)
{
    struct Group {
        std::vector<SemanticExpression> steps;
        std::vector<std::vector<TokenSeq>> verbalizations;
    };
    std::vector<Group> groups;
    std::map<std::string, std::size_t> index;

    Segmentation result;
    for (const auto& proof : proofs) {
        std::string key = proof.id;
        if (key.empty()) {
            key = "\x1f";
            for (const auto& s : proof.steps)
                key += expression_to_json(s) + "\n";
        }
        auto [it, fresh] = index.emplace(key, groups.size());
        if (fresh)
            groups.push_back({proof.steps, std::vector<std::vector<TokenSeq>>(proof.steps.size())});
        Group& g = groups[it->second];
        if (g.steps != proof.steps)
            throw ContractError("proof '" + proof.id + "' appears with different step lists");

        for (const auto& narrative : proof.narratives) {
            std::vector<TokenSeq> sentences;
            for (const auto& s : split_sentences(narrative)) {
                TokenSeq toks = tokenize(s);
                if (!toks.empty())
                    sentences.push_back(std::move(toks));
            }
            for (const auto& p : segment_pairs(g.steps, sentences)) {
                g.verbalizations[p.step].push_back(sentences[p.sentence]);
                ++result.pairs;
            }
        }
    }

    std::vector<InstanceRecord> records;
    for (auto& g : groups)
        for (std::size_t i = 0; i < g.steps.size(); ++i)
            if (!g.verbalizations[i].empty())
                records.push_back({g.steps[i], std::move(g.verbalizations[i])});
    result.corpus = Corpus(std::move(records));
    return result;
}

} // namespace lexmsa
