#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lexmsa/dictionary.hpp"
#include "lexmsa/similarity.hpp"
#include "lexmsa/thesaurus_induction.hpp"

namespace lexmsa {

/// Every tunable constant of the pipeline.
struct PipelineConfig {
    SimConstants sim;
    double thesaurus_cutoff = 4.0;
    std::size_t witness_k = 2;
    std::size_t interior_cap = 4;
    double downweight = 0.1;
    std::size_t template_floor = 6;
    /// Work is split across threads only in ways that keep outputs identical.
    bool deterministic = true;

    /// Throws ContractError naming the first bad setting.
    void validate() const;

    ThesaurusConfig thesaurus(unsigned threads = 1) const;
    InductionConfig induction(unsigned threads = 1) const;

    bool operator==(const PipelineConfig&) const = default;
};

/// Pretty-printed JSON with every field present.
std::string config_to_json(const PipelineConfig& c);
/// Missing fields keep their defaults; unknown fields are rejected. The
/// result is validated. Throws ParseError (line 0) for malformed JSON or
/// wrongly typed fields and ContractError for invalid values.
PipelineConfig parse_config(std::string_view text);

} // namespace lexmsa
