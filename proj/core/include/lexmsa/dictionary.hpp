#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexmsa/corpus.hpp"
#include "lexmsa/induction.hpp"
#include "lexmsa/thesaurus.hpp"

namespace lexmsa {

struct InductionConfig {
    SimConstants sim;
    double downweight = 0.1;
    std::size_t template_floor = 6;
    unsigned threads = 1;
};

/// Templates per predicate plus slot-free realizations of terms.
struct MappingDictionary {
    std::map<std::string, Template> templates;
    /// Keyed by the term's tokens joined with spaces.
    std::map<std::string, TokenSeq> terms;
    /// Predicates seen in the corpus that got no template.
    std::vector<std::string> uncovered;
    /// Terms whose realization was picked among equally supported paraphrases.
    std::vector<std::string> ties;

    const Template* find(const std::string& predicate) const;
    const TokenSeq* find_term(const TokenSeq& value) const;

    bool operator==(const MappingDictionary&) const = default;
};

/// Every intermediate structure built for one predicate.
struct PredicateStages {
    std::vector<Lattice> lattices;  ///< per instance
    std::vector<SlottedLattice> slotted;
    UnifiedSlottedLattice unified;
    std::optional<ConsensusPath> path;
    std::optional<Template> result;
};

/// Runs per-instance alignment, slotting, cross-instance alignment and
/// consensus. Verbalizations are used as given (fuse them beforehand).
/// Throws ContractError if `instances` is empty or mixes predicates.
PredicateStages induce_predicate(std::span<const InstanceRecord> instances, const Thesaurus& t,
                                 const InductionConfig& config = {});

struct PredicateSummary {
    std::string predicate;
    std::size_t instances = 0;
    std::size_t verbalizations = 0;
    std::size_t zero_slot_instances = 0;
    std::optional<double> weight;  ///< mean weight of the consensus path
};

struct DictionaryInduction {
    MappingDictionary dictionary;
    std::vector<PredicateSummary> predicates;  ///< sorted by name
};

/// Records of each predicate, in corpus order, keyed by predicate name.
std::map<std::string, std::vector<InstanceRecord>> group_by_predicate(const Corpus& c);

DictionaryInduction induce_dictionary(const Corpus& c, const Thesaurus& t, const InductionConfig& config = {});

/// Fills the template's slots with argument values, each replaced by its
/// term realization when the dictionary has one. Terms realize through their
/// entry or verbatim. Throws LookupError for an unknown predicate or a
/// template role the expression lacks.
TokenSeq realize(const SemanticExpression& e, const MappingDictionary& d);

/// One JSON object per line: predicate templates, then terms, then coverage.
std::string dictionary_to_jsonl(const MappingDictionary& d);
/// Throws ParseError naming line and field.
MappingDictionary parse_dictionary(std::string_view document);

} // namespace lexmsa
