#include "lexmsa/similarity.hpp"

#include <algorithm>
#include <limits>

#include "lexmsa/error.hpp"

namespace lexmsa {

double Similarity::operator()(const Symbol& x, const Symbol& y) const
{
    if (x == y)
        return constants_.match;
    if (x.is_word() && y.is_word() && thesaurus_->paraphrases(x.text(), y.text()))
        return constants_.paraphrase;
    return constants_.mismatch;
}

double Similarity::operator()(const Cell& x, const Cell& y) const
{
    if (!x && !y)
        throw ContractError("sim is undefined for two gaps");
    if (!x || !y)
        return constants_.gap;
    return (*this)(*x, *y);
}

double Similarity::operator()(const AlignmentSymbol& x, const AlignmentSymbol& y) const
{
    if (x.is_gap() && y.is_gap())
        throw ContractError("sim is undefined for two gaps");
    if (x.is_gap() || y.is_gap())
        return constants_.gap;
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& a : x.symbols())
        for (const auto& b : y.symbols())
            best = std::max(best, (*this)(a, b));
    return best;
}

double sim(const AlignmentSymbol& x, const AlignmentSymbol& y, const Thesaurus& t, const SimConstants& constants)
{
    return Similarity(t, constants)(x, y);
}

} // namespace lexmsa
