#include "lexmsa/config.hpp"

#include <json.hpp>

#include "lexmsa/error.hpp"

namespace lexmsa {

using nlohmann::ordered_json;

void PipelineConfig::validate() const
{
    if (!sim.valid())
        throw ContractError("similarity constants must satisfy match > paraphrase > 0 > gap > mismatch");
    if (witness_k < 1)
        throw ContractError("witness_k must be at least 1");
    if (interior_cap < 1)
        throw ContractError("interior_cap must be at least 1");
    if (!(downweight > 0.0 && downweight <= 1.0))
        throw ContractError("downweight must lie in (0, 1]");
    if (template_floor < 1)
        throw ContractError("template_floor must be at least 1");
}

ThesaurusConfig PipelineConfig::thesaurus(unsigned threads) const
{
    ThesaurusConfig t;
    t.sim = sim;
    t.score_cutoff = thesaurus_cutoff;
    t.witness_k = witness_k;
    t.interior_cap = interior_cap;
    t.threads = threads;
    return t;
}

InductionConfig PipelineConfig::induction(unsigned threads) const
{
    return {sim, downweight, template_floor, threads};
}

std::string config_to_json(const PipelineConfig& c)
{
    ordered_json j;
    j["match"] = c.sim.match;
    j["paraphrase"] = c.sim.paraphrase;
    j["gap"] = c.sim.gap;
    j["mismatch"] = c.sim.mismatch;
    j["thesaurus_cutoff"] = c.thesaurus_cutoff;
    j["witness_k"] = c.witness_k;
    j["interior_cap"] = c.interior_cap;
    j["downweight"] = c.downweight;
    j["template_floor"] = c.template_floor;
    j["deterministic"] = c.deterministic;
    return j.dump(2) + "\n";
}

PipelineConfig parse_config(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw ParseError(0, "<config>", std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ParseError(0, "<config>", "expected a JSON object");

    PipelineConfig c;
    for (const auto& [key, v] : j.items()) {
        auto real = [&](double& out) {
            if (!v.is_number())
                throw ParseError(0, key, "expected a number");
            out = v.get<double>();
        };
        auto count = [&](std::size_t& out) {
            if (!v.is_number_unsigned())
                throw ParseError(0, key, "expected a non-negative integer");
            out = v.get<std::size_t>();
        };
        if (key == "match")
            real(c.sim.match);
        else if (key == "paraphrase")
            real(c.sim.paraphrase);
        else if (key == "gap")
            real(c.sim.gap);
        else if (key == "mismatch")
            real(c.sim.mismatch);
        else if (key == "thesaurus_cutoff")
            real(c.thesaurus_cutoff);
        else if (key == "witness_k")
            count(c.witness_k);
        else if (key == "interior_cap")
            count(c.interior_cap);
        else if (key == "downweight")
            real(c.downweight);
        else if (key == "template_floor")
            count(c.template_floor);
        else if (key == "deterministic") {
            if (!v.is_boolean())
                throw ParseError(0, key, "expected true or false");
            c.deterministic = v.get<bool>();
        } else
            throw ParseError(0, key, "unknown setting");
    }
    c.validate();
    return c;
}

} // namespace lexmsa
