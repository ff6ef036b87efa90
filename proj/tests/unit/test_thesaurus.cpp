#include <gtest/gtest.h>

#include "lexmsa/error.hpp"
#include "lexmsa/thesaurus.hpp"
#include "lexmsa_test/synthetic.hpp"

using namespace lexmsa;

TEST(Thesaurus, SymmetricAndIrreflexive)
{
    Thesaurus t;
    EXPECT_TRUE(t.add("0", "zero"));
    EXPECT_FALSE(t.add("zero", "0"));
    EXPECT_FALSE(t.add("x", "x"));
    EXPECT_TRUE(t.contains("zero", "0"));
    EXPECT_TRUE(t.paraphrases("0", "zero"));
    EXPECT_TRUE(t.paraphrases("zero", "0"));
    EXPECT_FALSE(t.paraphrases("0", "0"));
    EXPECT_EQ(t.size(), 1u);
}

TEST(Thesaurus, ClosureJoinsChains)
{
    Thesaurus t;
    t.add("use", "apply");
    t.add("employ", "utilize");
    EXPECT_FALSE(t.paraphrases("use", "employ"));
    t.add("apply", "employ");
    EXPECT_TRUE(t.paraphrases("use", "utilize"));
    EXPECT_FALSE(t.contains("use", "utilize"));
    EXPECT_EQ(t.class_of("nothing"), -1);
}

TEST(Thesaurus, ClosureSymmetryProperty)
{
    lexmsa_test::Rng rng(3);
    for (int round = 0; round < 50; ++round) {
        Thesaurus t;
        for (int k = 0; k < 8; ++k)
            t.add("w" + std::to_string(lexmsa_test::pick(rng, 0, 9)), "w" + std::to_string(lexmsa_test::pick(rng, 0, 9)));
        for (int a = 0; a < 10; ++a)
            for (int b = 0; b < 10; ++b) {
                std::string x = "w" + std::to_string(a), y = "w" + std::to_string(b);
                EXPECT_EQ(t.paraphrases(x, y), t.paraphrases(y, x));
                if (a == b)
                    EXPECT_FALSE(t.paraphrases(x, y));
            }
    }
}

TEST(Thesaurus, FusesLongestPhraseFirst)
{
    Thesaurus t;
    t.add(TokenSeq{"are", "equal"}, TokenSeq{"match"});
    t.add(TokenSeq{"are", "equal", "to"}, TokenSeq{"="});
    TokenSeq fused = t.fuse(tokenize("x are equal to y and are equal"));
    EXPECT_EQ(fused, (TokenSeq{"x", fuse_phrase(TokenSeq{"are", "equal", "to"}), "y", "and",
                               fuse_phrase(TokenSeq{"are", "equal"})}));
    EXPECT_THROW(t.add(TokenSeq{}, TokenSeq{"x"}), ContractError);
}

TEST(Thesaurus, TsvRoundTrip)
{
    Thesaurus t;
    t.add("0", "zero", 3);
    t.add(TokenSeq{"are", "equal", "to"}, TokenSeq{"="}, 2);
    EXPECT_EQ(t.to_tsv(), "0\tzero\n=\tare equal to\n");
    EXPECT_EQ(t.to_tsv(true), "0\tzero\t3\n=\tare equal to\t2\n");
    Thesaurus back = Thesaurus::from_tsv(t.to_tsv(true));
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.entries()[0].witnesses, 3u);
    EXPECT_EQ(Thesaurus::from_tsv(t.to_tsv()).size(), 2u);
}

TEST(Thesaurus, TsvErrors)
{
    EXPECT_THROW(Thesaurus::from_tsv("only one column\n"), ParseError);
    EXPECT_THROW(Thesaurus::from_tsv("a\tb\tmany\n"), ParseError);
    EXPECT_EQ(Thesaurus::from_tsv("\n\n").size(), 0u);
}
