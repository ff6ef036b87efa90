#include <gtest/gtest.h>

#include "lexmsa/error.hpp"
#include "lexmsa/segment.hpp"
#include "lexmsa_test/oracles.hpp"
#include "lexmsa_test/synthetic.hpp"

using namespace lexmsa;

namespace {

SemanticExpression step(const std::string& name, const std::string& value)
{
    return SemanticExpression::predicate(name, {{"x", tokenize(value)}});
}

std::size_t total(const std::vector<SemanticExpression>& steps, const std::vector<TokenSeq>& sentences,
                  const std::vector<StepSentencePair>& pairs)
{
    std::size_t n = 0;
    for (auto p : pairs)
        n += shared_symbol_count(steps[p.step], sentences[p.sentence]);
    return n;
}

} // namespace

TEST(SegmentPairs, DiagonalWhenEachSentenceNamesItsStep)
{
    std::vector<SemanticExpression> steps{step("intro", "p1"), step("cases", "p2"), step("auto", "p3")};
    std::vector<TokenSeq> sentences{tokenize("first we take p1 ."), tokenize("then split on p2 ."),
                                    tokenize("p3 is trivial .")};
    EXPECT_EQ(segment_pairs(steps, sentences),
              (std::vector<StepSentencePair>{{0, 0}, {1, 1}, {2, 2}}));
    EXPECT_EQ(total(steps, sentences, segment_pairs(steps, sentences)),
              lexmsa_test::exhaustive_segmentation_score(steps, sentences));
}

TEST(SegmentPairs, SingleStepSingleSentence)
{
    std::vector<SemanticExpression> steps{step("intro", "q")};
    std::vector<TokenSeq> sentences{tokenize("unrelated words .")};
    EXPECT_EQ(segment_pairs(steps, sentences), (std::vector<StepSentencePair>{{0, 0}}));
}

TEST(SegmentPairs, PicksTheStepThatSharesSymbols)
{
    std::vector<SemanticExpression> steps{step("intro", "q"), step("cases", "k")};
    std::vector<TokenSeq> sentences{tokenize("we split on k .")};
    EXPECT_EQ(segment_pairs(steps, sentences), (std::vector<StepSentencePair>{{1, 0}}));
}

TEST(SegmentPairs, EmptyInputs)
{
    EXPECT_TRUE(segment_pairs({}, std::vector<TokenSeq>{{"x"}}).empty());
    std::vector<SemanticExpression> steps{step("a", "b")};
    EXPECT_TRUE(segment_pairs(steps, {}).empty());
}

TEST(SegmentPairs, MatchesExhaustiveSearchAndIsMonotone)
{
    lexmsa_test::Rng rng(11);
    const std::vector<std::string> symbols = {"a", "b", "c", "d", "e", "f"};
    for (int round = 0; round < 300; ++round) {
        std::vector<SemanticExpression> steps;
        std::vector<TokenSeq> sentences;
        std::size_t n = lexmsa_test::pick(rng, 1, 6), m = lexmsa_test::pick(rng, 1, 6);
        for (std::size_t i = 0; i < n; ++i)
            steps.push_back(step("p", symbols[lexmsa_test::pick(rng, 0, 5)] + " " + symbols[lexmsa_test::pick(rng, 0, 5)]));
        for (std::size_t j = 0; j < m; ++j) {
            TokenSeq s;
            for (std::size_t k = lexmsa_test::pick(rng, 1, 4); k > 0; --k)
                s.push_back(symbols[lexmsa_test::pick(rng, 0, 5)]);
            sentences.push_back(s);
        }
        auto pairs = segment_pairs(steps, sentences);
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            EXPECT_LT(pairs[k - 1].step, pairs[k].step);
            EXPECT_LT(pairs[k - 1].sentence, pairs[k].sentence);
        }
        EXPECT_EQ(total(steps, sentences, pairs), lexmsa_test::exhaustive_segmentation_score(steps, sentences));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j)
                EXPECT_EQ(shared_symbol_count(steps[i], sentences[j]), lexmsa_test::plain_shared(steps[i], sentences[j]));
    }
}

TEST(SplitSentences, BoundariesNeedFollowingSpace)
{
    EXPECT_EQ(split_sentences("We use x.y here. Then done!  Why? ok"),
              (std::vector<std::string>{"We use x.y here.", "Then done!", "Why?", "ok"}));
    EXPECT_TRUE(split_sentences("   ").empty());
}

TEST(RawProofs, SegmentsNarrativesIntoRecords)
{
    std::string doc =
        R"({"proof":"p","steps":[{"predicate":"intro","args":[{"role":"x","value":"n1"}]},)"
        R"({"predicate":"auto","args":[{"role":"x","value":"g2"}]}],)"
        R"("narratives":["Let n1 be given. Then g2 follows.","Take n1. Clearly g2 holds."]})";
    auto proofs = parse_raw_proofs(doc);
    ASSERT_EQ(proofs.size(), 1u);
    EXPECT_EQ(proofs[0].narratives.size(), 2u);
    auto seg = corpus_from_raw_proofs(proofs);
    EXPECT_EQ(seg.pairs, 4u);
    ASSERT_EQ(seg.corpus.size(), 2u);
    EXPECT_EQ(seg.corpus.records()[0].verbalizations[1], tokenize("Take n1."));
}

TEST(RawProofs, Errors)
{
    EXPECT_THROW(parse_raw_proofs(R"({"steps":[]})"), ParseError);
    EXPECT_THROW(parse_raw_proofs(R"({"steps":[{"predicate":"","term":"0"}]})"), ParseError);
}
