#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "lexmsa/error.hpp"
#include "lexmsa/msa.hpp"
#include "lexmsa_test/oracles.hpp"
#include "lexmsa_test/synthetic.hpp"

using namespace lexmsa;
using lexmsa_test::pick;

namespace {

std::vector<Cell> cells(std::initializer_list<const char*> xs)
{
    std::vector<Cell> out;
    for (const char* x : xs)
        out.push_back(std::string(x) == "_" ? Cell{} : Cell{Symbol::word(x)});
    return out;
}

Msa seq(const std::string& chars, std::size_t origin = 0)
{
    TokenSeq t;
    for (char c : chars)
        t.emplace_back(1, c);
    return Msa::from_tokens(t, origin);
}

TokenSeq words_of(const Msa& m, std::size_t r)
{
    TokenSeq out;
    for (const auto& s : m.row_symbols(r))
        out.push_back(s.text());
    return out;
}

// Sum-of-pairs of a table restated with plain scores.
double plain_sop(const std::vector<std::vector<std::optional<std::string>>>& rows, const lexmsa_test::PlainScores& s)
{
    double total = 0;
    for (std::size_t c = 0; c < rows.front().size(); ++c)
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j) {
                const auto& x = rows[i][c];
                const auto& y = rows[j][c];
                if (x && y)
                    total += s(*x, *y);
                else if (x || y)
                    total += s.gap;
            }
    return total;
}

std::vector<std::vector<std::optional<std::string>>> plain_rows(const Msa& m)
{
    std::vector<std::vector<std::optional<std::string>>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& c : m.row(r))
            rows[r].push_back(c ? std::optional<std::string>(c->text()) : std::nullopt);
    return rows;
}

// Best sum-of-pairs over every order-preserving merge of the columns of a and b.
double exhaustive_profile_score(const Msa& a, const Msa& b, const lexmsa_test::PlainScores& s)
{
    auto ra = plain_rows(a), rb = plain_rows(b);
    std::vector<std::vector<std::optional<std::string>>> merged(a.rows() + b.rows());
    double best = -1e300;
    std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t i, std::size_t j) {
        if (i == a.cols() && j == b.cols()) {
            best = std::max(best, plain_sop(merged, s));
            return;
        }
        auto push = [&](bool take_a, bool take_b) {
            for (std::size_t r = 0; r < a.rows(); ++r)
                merged[r].push_back(take_a ? ra[r][i] : std::nullopt);
            for (std::size_t r = 0; r < b.rows(); ++r)
                merged[a.rows() + r].push_back(take_b ? rb[r][j] : std::nullopt);
            walk(i + take_a, j + take_b);
            for (auto& row : merged)
                row.pop_back();
        };
        if (i < a.cols() && j < b.cols())
            push(true, true);
        if (i < a.cols())
            push(true, false);
        if (j < b.cols())
            push(false, true);
    };
    walk(0, 0);
    return best;
}

} // namespace

TEST(Msa, RejectsInvalidTables)
{
    EXPECT_THROW(Msa({}, {}), InvariantError);
    EXPECT_THROW(Msa({cells({"a"}), cells({"a", "b"})}, {0, 1}), InvariantError);
    EXPECT_THROW(Msa({cells({"a", "_"}), cells({"b", "_"})}, {0, 1}), InvariantError);
    EXPECT_THROW(Msa({cells({"a"})}, {0, 1}), InvariantError);
}

TEST(SopScore, Examples)
{
    Thesaurus t;
    Similarity s(t);
    EXPECT_DOUBLE_EQ(sop_score(seq("abcd"), s), 0.0);
    EXPECT_DOUBLE_EQ(sop_score(Msa({cells({"a", "b", "c", "d"}), cells({"a", "b", "c", "d"})}, {0, 1}), s), 4.0);
    // Three matches and two gap columns.
    EXPECT_NEAR(sop_score(Msa({cells({"a", "x", "b", "_", "c"}), cells({"a", "_", "b", "y", "c"})}, {0, 1}), s), 2.98,
                1e-12);
    // Gap/gap pairs add nothing.
    EXPECT_NEAR(sop_score(Msa({cells({"a", "b"}), cells({"a", "_"}), cells({"a", "_"})}, {0, 1, 2}), s), 3.0 - 0.02,
                1e-12);
}

TEST(AlignPair, AbadAgainstAbd)
{
    Thesaurus t;
    Msa m = align_pair(seq("abad"), seq("abd", 1), Similarity(t));
    ASSERT_EQ(m.cols(), 4u);
    EXPECT_EQ(m.row(0), cells({"a", "b", "a", "d"}));
    EXPECT_EQ(m.row(1), cells({"a", "b", "_", "d"}));
    lexmsa_test::PlainScores ps;
    EXPECT_NEAR(sop_score(m, Similarity(t)),
                lexmsa_test::exhaustive_alignment_score({"a", "b", "a", "d"}, {"a", "b", "d"}, ps), 1e-12);
}

TEST(AlignPair, IdenticalSequencesAlignWithoutGaps)
{
    Thesaurus t;
    lexmsa_test::Rng rng(5);
    for (int round = 0; round < 50; ++round) {
        TokenSeq s = lexmsa_test::random_sequence(rng, 1, 9, 4);
        Msa m = align_pair(Msa::from_tokens(s, 0), Msa::from_tokens(s, 1), Similarity(t));
        EXPECT_EQ(m.cols(), s.size());
        for (std::size_t c = 0; c < m.cols(); ++c)
            EXPECT_EQ(m.non_gaps_in_column(c), 2u);
    }
}

TEST(AlignPair, MatchesExhaustiveEnumeration)
{
    lexmsa_test::Rng rng(1234);
    Thesaurus t;
    t.add("t0", "t1");
    lexmsa_test::PlainScores ps;
    ps.paraphrases = {{"t0", "t1"}};
    Similarity s(t);
    for (int round = 0; round < 250; ++round) {
        TokenSeq a = lexmsa_test::random_sequence(rng, 0, 6, 5);
        TokenSeq b = lexmsa_test::random_sequence(rng, 0, 6, 5);
        if (a.empty() && b.empty())
            continue;
        if (a.empty() || b.empty()) {
            // A 0-column table cannot be built, so only the oracle's value is checked.
            EXPECT_NEAR(lexmsa_test::exhaustive_alignment_score(a, b, ps), -0.01 * static_cast<double>(a.size() + b.size()), 1e-12);
            continue;
        }
        Msa m = align_pair(Msa::from_tokens(a, 0), Msa::from_tokens(b, 1), s);
        EXPECT_NEAR(sop_score(m, s), lexmsa_test::exhaustive_alignment_score(a, b, ps), 1e-9);
        EXPECT_NEAR(pair_score(to_symbols(a), to_symbols(b), s), sop_score(m, s), 1e-9);
        EXPECT_EQ(words_of(m, 0), a);
        EXPECT_EQ(words_of(m, 1), b);
    }
}

TEST(AlignPair, ProfilesMaximizeSumOfPairs)
{
    lexmsa_test::Rng rng(99);
    Thesaurus t;
    t.add("t1", "t2");
    lexmsa_test::PlainScores ps;
    ps.paraphrases = {{"t1", "t2"}};
    Similarity s(t);
    for (int round = 0; round < 120; ++round) {
        auto left = lexmsa_test::random_items(rng, pick(rng, 1, 3), 4, 4);
        auto right = lexmsa_test::random_items(rng, pick(rng, 1, 3), 4, 4);
        Msa a = iterative_msa(left, s);
        Msa b = iterative_msa(right, s);
        Msa m = align_pair(a, b, s);
        EXPECT_NEAR(sop_score(m, s), exhaustive_profile_score(a, b, ps), 1e-9);
        ASSERT_EQ(m.rows(), a.rows() + b.rows());
        for (std::size_t r = 0; r < a.rows(); ++r)
            EXPECT_EQ(m.row_symbols(r), a.row_symbols(r));
        for (std::size_t r = 0; r < b.rows(); ++r)
            EXPECT_EQ(m.row_symbols(a.rows() + r), b.row_symbols(r));
    }
}

TEST(AlignPair, BeatsNaiveLeftAlignedMerge)
{
    lexmsa_test::Rng rng(77);
    Thesaurus t;
    Similarity s(t);
    for (int round = 0; round < 200; ++round) {
        TokenSeq a = lexmsa_test::random_sequence(rng, 1, 10, 4);
        TokenSeq b = lexmsa_test::random_sequence(rng, 1, 10, 4);
        std::size_t n = std::max(a.size(), b.size());
        std::vector<std::vector<Cell>> rows(2);
        for (std::size_t i = 0; i < n; ++i) {
            rows[0].push_back(i < a.size() ? Cell{Symbol::word(a[i])} : Cell{});
            rows[1].push_back(i < b.size() ? Cell{Symbol::word(b[i])} : Cell{});
        }
        Msa naive(rows, {0, 1});
        EXPECT_GE(sop_score(align_pair(Msa::from_tokens(a, 0), Msa::from_tokens(b, 1), s), s) + 1e-12,
                  sop_score(naive, s));
    }
}

TEST(IterativeMsa, SingleInputIsReturnedUnchanged)
{
    Thesaurus t;
    Msa one = seq("abc", 0);
    EXPECT_EQ(iterative_msa(std::vector<Msa>{one}, Similarity(t)), one);
    EXPECT_THROW(iterative_msa(std::vector<Msa>{}, Similarity(t)), ContractError);
}

TEST(IterativeMsa, TwoIdenticalSequences)
{
    Thesaurus t;
    Msa m = iterative_msa(std::vector<Msa>{seq("abcd", 0), seq("abcd", 1)}, Similarity(t));
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 4u);
    EXPECT_DOUBLE_EQ(sop_score(m, Similarity(t)), 4.0);
}

TEST(IterativeMsa, FiveSequencesKeepInputOrder)
{
    Thesaurus t;
    std::vector<Msa> items;
    std::vector<std::string> strings{"abad", "abd", "acd", "abcd", "bad"};
    for (std::size_t i = 0; i < strings.size(); ++i)
        items.push_back(seq(strings[i], i));
    Msa m = iterative_msa(items, Similarity(t));
    ASSERT_EQ(m.rows(), 5u);
    EXPECT_EQ(words_of(m, 0), (TokenSeq{"a", "b", "a", "d"}));
    for (std::size_t r = 0; r < 5; ++r)
        EXPECT_EQ(m.origin(r), r);
}

TEST(IterativeMsa, RowRecoveryAndPermutationStability)
{
    lexmsa_test::Rng rng(2024);
    Thesaurus t;
    t.add("t0", "t3");
    Similarity s(t);
    for (int round = 0; round < 150; ++round) {
        auto items = lexmsa_test::random_items(rng, pick(rng, 2, 6), 7, 4);
        Msa m = iterative_msa(items, s);
        ASSERT_EQ(m.rows(), items.size());
        for (std::size_t r = 0; r < m.rows(); ++r)
            EXPECT_EQ(m.row_symbols(r), items[m.origin(r)].row_symbols(0));

        std::vector<std::size_t> perm(items.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Msa> shuffled;
        for (std::size_t i = 0; i < perm.size(); ++i)
            shuffled.push_back(Msa::from_sequence(items[perm[i]].row_symbols(0), i));
        Msa again = iterative_msa(shuffled, s);
        EXPECT_NEAR(sop_score(again, s), sop_score(m, s), 1e-9);
    }
}

TEST(IterativeMsa, MultiRowItemsKeepTheirRows)
{
    lexmsa_test::Rng rng(8);
    Thesaurus t;
    Similarity s(t);
    for (int round = 0; round < 60; ++round) {
        std::vector<Msa> groups;
        std::vector<std::vector<Symbol>> sources;
        for (std::size_t g = 0; g < pick(rng, 2, 4); ++g) {
            auto items = lexmsa_test::random_items(rng, pick(rng, 1, 3), 5, 3);
            for (const auto& it : items)
                sources.push_back(it.row_symbols(0));
            groups.push_back(iterative_msa(items, s));
        }
        Msa m = iterative_msa(groups, s);
        ASSERT_EQ(m.rows(), sources.size());
        for (std::size_t r = 0; r < m.rows(); ++r) {
            EXPECT_EQ(m.origin(r), r);
            EXPECT_EQ(m.row_symbols(r), sources[r]);
        }
    }
}

TEST(FormatMsa, UnderscoresForGaps)
{
    Msa m({cells({"a", "b", "a", "d"}), cells({"a", "b", "_", "d"})}, {0, 1});
    EXPECT_EQ(format_msa(m), "a b a d\na b _ d\n");
}
