#pragma once

#include "lexmsa/symbol.hpp"
#include "lexmsa/thesaurus.hpp"

namespace lexmsa {

/// Elementary similarity values. Defaults are the hand-tuned constants;
/// valid() checks match > paraphrase > 0 > gap > mismatch.
struct SimConstants {
    double match = 1.0;
    double paraphrase = 0.5;
    double gap = -0.01;
    double mismatch = -0.5;

    bool valid() const { return match > paraphrase && paraphrase > 0.0 && 0.0 > gap && gap > mismatch; }
    bool operator==(const SimConstants&) const = default;
};

/// sim(x, y) bound to a thesaurus. Slots score like words: same role is a
/// match, anything else involving a slot is a mismatch.
class Similarity {
public:
    explicit Similarity(const Thesaurus& thesaurus, SimConstants constants = {})
        : thesaurus_(&thesaurus), constants_(constants) {}

    double operator()(const Symbol& x, const Symbol& y) const;
    /// Throws ContractError when both cells are gaps.
    double operator()(const Cell& x, const Cell& y) const;
    /// Max over S1 x S2 for symbol sets. Throws ContractError for gap/gap.
    double operator()(const AlignmentSymbol& x, const AlignmentSymbol& y) const;

    const Thesaurus& thesaurus() const { return *thesaurus_; }
    const SimConstants& constants() const { return constants_; }

private:
    const Thesaurus* thesaurus_;
    SimConstants constants_;
};

double sim(const AlignmentSymbol& x, const AlignmentSymbol& y, const Thesaurus& t,
           const SimConstants& constants = {});

} // namespace lexmsa
