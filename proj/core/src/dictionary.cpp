#include "lexmsa/dictionary.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "lexmsa/error.hpp"
#include "lexmsa/thesaurus_induction.hpp"
#include "lines.hpp"
#include "parallel.hpp"

namespace lexmsa {

using nlohmann::ordered_json;

namespace {

Msa align_verbalizations(const std::vector<TokenSeq>& verbs, const Similarity& sim)
{
    std::vector<Msa> items;
    for (std::size_t i = 0; i < verbs.size(); ++i)
        items.push_back(Msa::from_tokens(verbs[i], i));
    return iterative_msa(items, sim);
}

TokenSeq flatten(const TokenSeq& tokens)
{
    TokenSeq out;
    for (const auto& t : tokens)
        for (auto& w : unfuse_phrase(t))
            out.push_back(std::move(w));
    return out;
}

// Slot-free consensus of a term's verbalizations, punctuation dropped.
TokenSeq term_consensus(const std::vector<TokenSeq>& verbs, const Thesaurus& t, const InductionConfig& config)
{
    Similarity sim(t, config.sim);
    Lattice lat(align_verbalizations(verbs, sim));
    auto path = consensus_path(to_weighted_dag(lat, node_weights(lat, config.downweight)), 1);
    TokenSeq out;
    if (path)
        for (std::size_t n : path->nodes)
            if (!is_punctuation(representative(lat, n).text()))
                out.push_back(representative(lat, n).text());
    return flatten(out);
}

} // namespace

const Template* MappingDictionary::find(const std::string& predicate) const
{
    auto it = templates.find(predicate);
    return it == templates.end() ? nullptr : &it->second;
}

const TokenSeq* MappingDictionary::find_term(const TokenSeq& value) const
{
    auto it = terms.find(join_tokens(value));
    return it == terms.end() ? nullptr : &it->second;
}

PredicateStages induce_predicate(std::span<const InstanceRecord> instances, const Thesaurus& t,
                                 const InductionConfig& config)
{
    if (instances.empty())
        throw ContractError("no instances to induce from");
    Similarity sim(t, config.sim);
    std::vector<Lattice> lattices;
    std::vector<SlottedLattice> slotted;
    for (const auto& inst : instances) {
        if (!inst.semantics.is_predicate() || inst.semantics.name() != instances.front().semantics.name())
            throw ContractError("instances must share one predicate");
        lattices.emplace_back(align_verbalizations(inst.verbalizations, sim));
        slotted.push_back(make_slotted(lattices.back(), inst, t));
    }
    UnifiedSlottedLattice unified = cross_instance_align(slotted, sim, config.downweight);
    auto path = consensus_path(to_weighted_dag(unified.lattice, unified.weights), config.template_floor);
    std::optional<Template> result;
    if (path) {
        result = Template{unified.predicate, {}};
        for (std::size_t n : path->nodes)
            result->elements.push_back(representative(unified.lattice, n));
    }
    return {std::move(lattices), std::move(slotted), std::move(unified), std::move(path), std::move(result)};
}

std::map<std::string, std::vector<InstanceRecord>> group_by_predicate(const Corpus& c)
{
    std::map<std::string, std::vector<InstanceRecord>> groups;
    for (const auto& r : c.records())
        if (r.semantics.is_predicate())
            groups[r.semantics.name()].push_back(r);
    return groups;
}

DictionaryInduction induce_dictionary(const Corpus& c, const Thesaurus& t, const InductionConfig& config)
{
    if (!config.sim.valid())
        throw ContractError("similarity constants must satisfy match > paraphrase > 0 > gap > mismatch");
    const Corpus work = fuse_corpus(c, t);
    const auto groups = group_by_predicate(work);

    std::vector<const std::pair<const std::string, std::vector<InstanceRecord>>*> order;
    for (const auto& g : groups)
        order.push_back(&g);
    std::vector<PredicateSummary> summaries(order.size());
    std::vector<std::optional<Template>> templates(order.size());
    detail::parallel_for(order.size(), config.threads, [&](std::size_t k) {
        const auto& [name, instances] = *order[k];
        PredicateStages stages = induce_predicate(instances, t, config);
        auto& s = summaries[k];
        s.predicate = name;
        s.instances = instances.size();
        for (const auto& inst : instances)
            s.verbalizations += inst.verbalizations.size();
        for (const auto& sl : stages.slotted)
            s.zero_slot_instances += sl.zero_slots();
        if (stages.path)
            s.weight = stages.path->mean;
        templates[k] = std::move(stages.result);
    });

    DictionaryInduction out;
    auto& dict = out.dictionary;
    for (std::size_t k = 0; k < order.size(); ++k) {
        if (templates[k])
            dict.templates.emplace(order[k]->first, std::move(*templates[k]));
        else
            dict.uncovered.push_back(order[k]->first);
    }
    out.predicates = std::move(summaries);

    // Terms with their own records: consensus of their verbalizations.
    std::map<std::string, std::vector<TokenSeq>> term_verbs;
    for (const auto& r : work.records())
        if (r.semantics.is_term()) {
            auto& v = term_verbs[join_tokens(r.semantics.term_value())];
            v.insert(v.end(), r.verbalizations.begin(), r.verbalizations.end());
        }
    for (const auto& [key, verbs] : term_verbs) {
        TokenSeq real = term_consensus(verbs, t, config);
        if (!real.empty())
            dict.terms.emplace(key, std::move(real));
    }

    // Other terms: best-supported thesaurus paraphrase.
    std::set<Token> candidates;
    for (const auto& r : c.records()) {
        if (r.semantics.is_term() && r.semantics.term_value().size() == 1)
            candidates.insert(r.semantics.term_value().front());
        for (const auto& a : r.semantics.args())
            if (a.value.size() == 1)
                candidates.insert(a.value.front());
    }
    const auto entries = t.entries();
    for (const auto& term : candidates) {
        if (dict.terms.count(term))
            continue;
        std::size_t best = 0;
        std::vector<Token> picks;
        for (const auto& e : entries) {
            const Token* other = e.first == term ? &e.second : e.second == term ? &e.first : nullptr;
            if (!other)
                continue;
            if (picks.empty() || e.witnesses > best) {
                best = e.witnesses;
                picks = {*other};
            } else if (e.witnesses == best) {
                picks.push_back(*other);
            }
        }
        if (picks.empty())
            continue;
        std::sort(picks.begin(), picks.end());
        if (picks.size() > 1) {
            std::string note = term + ":";
            for (const auto& p : picks)
                note += " " + display_token(p);
            dict.ties.push_back(std::move(note));
        }
        dict.terms.emplace(term, unfuse_phrase(picks.front()));
    }
    return out;
}

TokenSeq realize(const SemanticExpression& e, const MappingDictionary& d)
{
    auto value_of = [&](const TokenSeq& value) -> TokenSeq {
        if (const TokenSeq* real = d.find_term(value))
            return *real;
        return value;
    };
    if (e.is_term())
        return value_of(e.term_value());

    const Template* tpl = d.find(e.name());
    if (!tpl)
        throw LookupError("no template for predicate '" + e.name() + "'");
    TokenSeq out;
    for (const auto& el : tpl->elements) {
        if (el.is_word()) {
            for (auto& w : unfuse_phrase(el.text()))
                out.push_back(std::move(w));
            continue;
        }
        const Argument* arg = e.find(el.text());
        if (!arg)
            throw LookupError("predicate '" + e.name() + "' has no argument for slot [" + el.text() + "]");
        TokenSeq v = value_of(arg->value);
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::string dictionary_to_jsonl(const MappingDictionary& d)
{
    std::string out;
    for (const auto& [name, tpl] : d.templates) {
        ordered_json obj;
        obj["predicate"] = name;
        obj["arity"] = tpl.arity();
        ordered_json elems = ordered_json::array();
        for (const auto& el : tpl.elements) {
            ordered_json e;
            if (el.is_slot())
                e["slot"] = el.text();
            else
                e["word"] = display_token(el.text());
            elems.push_back(std::move(e));
        }
        obj["template"] = std::move(elems);
        out += obj.dump() + "\n";
    }
    for (const auto& [term, real] : d.terms) {
        ordered_json obj;
        obj["term"] = term;
        obj["realization"] = join_tokens(real);
        out += obj.dump() + "\n";
    }
    ordered_json cov;
    cov["uncovered"] = d.uncovered;
    cov["ties"] = d.ties;
    ordered_json obj;
    obj["coverage"] = std::move(cov);
    out += obj.dump() + "\n";
    return out;
}

MappingDictionary parse_dictionary(std::string_view document)
{
    MappingDictionary d;
    auto strings = [](const ordered_json& v, const char* field, std::size_t line) {
        if (!v.is_array())
            throw ParseError(line, field, "expected an array");
        std::vector<std::string> out;
        for (const auto& s : v) {
            if (!s.is_string())
                throw ParseError(line, field, "expected strings");
            out.push_back(s.get<std::string>());
        }
        return out;
    };
    detail::for_each_line(document, [&](std::string_view line, std::size_t line_no) {
        ordered_json obj;
        try {
            obj = ordered_json::parse(line);
        } catch (const ordered_json::parse_error& e) {
            throw ParseError(line_no, "<record>", std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object())
            throw ParseError(line_no, "<record>", "expected a JSON object");

        if (auto it = obj.find("predicate"); it != obj.end()) {
            if (!it->is_string() || it->get<std::string>().empty())
                throw ParseError(line_no, "predicate", "expected a non-empty string");
            Template tpl{it->get<std::string>(), {}};
            auto elems = obj.find("template");
            if (elems == obj.end() || !elems->is_array() || elems->empty())
                throw ParseError(line_no, "template", "expected a non-empty array");
            for (const auto& el : *elems) {
                if (auto w = el.find("word"); el.is_object() && w != el.end() && w->is_string()) {
                    TokenSeq words = tokenize(w->get<std::string>());
                    if (words.empty())
                        throw ParseError(line_no, "word", "empty word");
                    tpl.elements.push_back(Symbol::word(fuse_phrase(words)));
                } else if (auto s = el.find("slot"); el.is_object() && s != el.end() && s->is_string()) {
                    tpl.elements.push_back(Symbol::slot(s->get<std::string>()));
                } else {
                    throw ParseError(line_no, "template", "elements must be {word} or {slot}");
                }
            }
            if (auto a = obj.find("arity"); a != obj.end() && (!a->is_number_unsigned() || a->get<std::size_t>() != tpl.arity()))
                throw ParseError(line_no, "arity", "does not match the template's slots");
            if (!d.templates.emplace(tpl.predicate, tpl).second)
                throw ParseError(line_no, "predicate", "duplicate predicate '" + tpl.predicate + "'");
        } else if (auto it = obj.find("term"); it != obj.end()) {
            if (!it->is_string())
                throw ParseError(line_no, "term", "expected a string");
            auto real = obj.find("realization");
            if (real == obj.end() || !real->is_string())
                throw ParseError(line_no, "realization", "expected a string");
            TokenSeq key = tokenize(it->get<std::string>());
            TokenSeq value = tokenize(real->get<std::string>());
            if (key.empty() || value.empty())
                throw ParseError(line_no, "term", "empty term or realization");
            d.terms[join_tokens(key)] = std::move(value);
        } else if (auto it = obj.find("coverage"); it != obj.end()) {
            if (!it->is_object())
                throw ParseError(line_no, "coverage", "expected an object");
            if (auto u = it->find("uncovered"); u != it->end())
                d.uncovered = strings(*u, "uncovered", line_no);
            if (auto t = it->find("ties"); t != it->end())
                d.ties = strings(*t, "ties", line_no);
        } else {
            throw ParseError(line_no, "<record>", "expected a predicate, term or coverage line");
        }
    });
    return d;
}

} // namespace lexmsa
