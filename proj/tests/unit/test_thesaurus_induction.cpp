#include <gtest/gtest.h>

#include <set>

#include "lexmsa/error.hpp"
#include "lexmsa/thesaurus_induction.hpp"
#include "lexmsa_test/synthetic.hpp"

using namespace lexmsa;

namespace {

std::vector<Cell> cells(std::initializer_list<const char*> xs)
{
    std::vector<Cell> out;
    for (const char* x : xs)
        out.push_back(std::string(x) == "_" ? Cell{} : Cell{Symbol::word(x)});
    return out;
}

InstanceRecord record(std::vector<std::string> verbs)
{
    InstanceRecord r{SemanticExpression::term({"x"}), {}};
    for (const auto& v : verbs)
        r.verbalizations.push_back(tokenize(v));
    return r;
}

} // namespace

TEST(Sausages, InteriorBetweenMatchColumns)
{
    Thesaurus t;
    Msa m({cells({"the", "conclusion", "_", "is", "0", "."}), cells({"the", "_", "result", "is", "zero", "."})}, {0, 1});
    auto s = extract_sausages(m, Similarity(t));
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s[0], (Sausage{0, 3, {"conclusion"}, {"result"}}));
    EXPECT_EQ(s[1], (Sausage{3, 5, {"0"}, {"zero"}}));
}

TEST(Sausages, ParaphraseColumnsCountAsMatches)
{
    Thesaurus t;
    t.add("0", "zero");
    Msa m({cells({"is", "0", "x", "."}), cells({"is", "zero", "y", "."})}, {0, 1});
    auto s = extract_sausages(m, Similarity(t));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0], (Sausage{1, 3, {"x"}, {"y"}}));
}

TEST(Sausages, OneSidedInteriorsAndOpenEndsAreSkipped)
{
    Thesaurus t;
    Msa m({cells({"a", "b", "c", "x"}), cells({"a", "_", "c", "y"})}, {0, 1});
    EXPECT_TRUE(extract_sausages(m, Similarity(t)).empty());
    EXPECT_THROW(extract_sausages(Msa::from_tokens(TokenSeq{"a"}), Similarity(t)), ContractError);
}

TEST(InduceThesaurus, EmptyCorpus)
{
    auto r = induce_thesaurus(Corpus{});
    EXPECT_TRUE(r.thesaurus.empty());
    EXPECT_TRUE(r.promoted.empty());
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_EQ(r.alignments, 0u);
}

TEST(InduceThesaurus, NeedsTwoWitnesses)
{
    Corpus one({record({"we know the conclusion is true here", "we know the result is true here"})});
    EXPECT_TRUE(induce_thesaurus(one).thesaurus.empty());

    Corpus two({record({"we know the conclusion is true here", "we know the result is true here"}),
                record({"so the conclusion holds for all n", "so the result holds for all n"})});
    auto r = induce_thesaurus(two);
    EXPECT_TRUE(r.thesaurus.contains("conclusion", "result"));
    ASSERT_EQ(r.promoted.size(), 1u);
    EXPECT_EQ(r.promoted[0].witnesses.size(), 2u);
    EXPECT_EQ(r.promoted[0].iteration, 1u);
    EXPECT_EQ(r.iterations, 2u);

    ThesaurusConfig strict;
    strict.witness_k = 3;
    EXPECT_TRUE(induce_thesaurus(two, strict).thesaurus.empty());
}

TEST(InduceThesaurus, LowScoringAlignmentsAreIgnored)
{
    Corpus c({record({"a conclusion b", "a result b"}), record({"c conclusion d", "c result d"})});
    auto r = induce_thesaurus(c);
    EXPECT_EQ(r.retained, 0u);
    EXPECT_TRUE(r.thesaurus.empty());
    ThesaurusConfig loose;
    loose.score_cutoff = 1.0;
    EXPECT_TRUE(induce_thesaurus(c, loose).thesaurus.contains("conclusion", "result"));
}

TEST(InduceThesaurus, RecoversPlantedPairs)
{
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto pc = lexmsa_test::paraphrase_corpus(seed);
        auto r = induce_thesaurus(pc.corpus);
        for (const auto& [a, b] : pc.planted)
            EXPECT_TRUE(r.thesaurus.contains(fuse_phrase(a), fuse_phrase(b)))
                << "seed " << seed << ": " << join_tokens(a) << " / " << join_tokens(b);
        for (const auto& p : r.promoted) {
            EXPECT_GE(p.witnesses.size(), 2u);
            std::set<AlignmentRef> distinct(p.witnesses.begin(), p.witnesses.end());
            EXPECT_EQ(distinct.size(), p.witnesses.size());
            for (const auto& w : p.witnesses)
                EXPECT_LT(w.first, w.second);
        }
    }
}

TEST(InduceThesaurus, SeededWithItsOwnOutputIsAFixpoint)
{
    auto pc = lexmsa_test::paraphrase_corpus(11);
    auto first = induce_thesaurus(pc.corpus);
    auto again = induce_thesaurus(pc.corpus, {}, first.thesaurus);
    EXPECT_TRUE(again.promoted.empty());
    EXPECT_EQ(again.iterations, 1u);
    EXPECT_EQ(again.thesaurus.entries(), first.thesaurus.entries());
}

TEST(InduceThesaurus, ThreadCountDoesNotChangeOutput)
{
    auto pc = lexmsa_test::paraphrase_corpus(5);
    ThesaurusConfig par;
    par.threads = 4;
    auto a = induce_thesaurus(pc.corpus);
    auto b = induce_thesaurus(pc.corpus, par);
    EXPECT_EQ(a.thesaurus.to_tsv(true), b.thesaurus.to_tsv(true));
    ASSERT_EQ(a.promoted.size(), b.promoted.size());
    for (std::size_t i = 0; i < a.promoted.size(); ++i) {
        EXPECT_EQ(a.promoted[i].first, b.promoted[i].first);
        EXPECT_EQ(a.promoted[i].witnesses, b.promoted[i].witnesses);
    }
}

TEST(InduceThesaurus, InteriorCapLimitsPhraseLength)
{
    Corpus c({record({"we see that one plus one equals two here", "we see that one plus one is exactly two here"}),
              record({"now note that x equals y in this case", "now note that x is exactly y in this case"})});
    auto r = induce_thesaurus(c);
    EXPECT_TRUE(r.thesaurus.contains("equals", fuse_phrase(TokenSeq{"is", "exactly"})));
    ThesaurusConfig tight;
    tight.interior_cap = 1;
    EXPECT_TRUE(induce_thesaurus(c, tight).thesaurus.empty());
}

TEST(FuseCorpus, FusesKnownPhrases)
{
    Thesaurus t;
    t.add(TokenSeq{"are", "equal", "to"}, TokenSeq{"="});
    Corpus c({record({"a and b are equal to c"})});
    Corpus f = fuse_corpus(c, t);
    EXPECT_EQ(f.records()[0].verbalizations[0],
              (TokenSeq{"a", "and", "b", fuse_phrase(TokenSeq{"are", "equal", "to"}), "c"}));
}
