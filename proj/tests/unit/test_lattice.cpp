#include <gtest/gtest.h>

#include "lexmsa/lattice.hpp"
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

std::vector<Symbol> words(std::initializer_list<const char*> xs)
{
    std::vector<Symbol> out;
    for (const char* x : xs)
        out.push_back(Symbol::word(x));
    return out;
}

} // namespace

TEST(Lattice, SingleRowIsAChain)
{
    Lattice l(Msa::from_tokens(TokenSeq{"a", "b", "c"}));
    ASSERT_EQ(l.size(), 5u);
    EXPECT_EQ(l.edges(), (std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    for (NodeId n = 1; n <= 3; ++n)
        EXPECT_EQ(l.node(n).paths_through, 1u);
    EXPECT_TRUE(l.node(l.start()).payload.empty());
    EXPECT_TRUE(l.node(l.end()).payload.empty());
}

TEST(Lattice, GapBecomesSkipEdge)
{
    Lattice l(Msa({cells({"a", "b", "a", "d"}), cells({"a", "b", "_", "d"})}, {0, 1}));
    EXPECT_TRUE(l.has_edge(2, 3));
    EXPECT_TRUE(l.has_edge(2, 4));
    EXPECT_TRUE(l.has_edge(3, 4));
    EXPECT_FALSE(l.has_edge(1, 3));
    EXPECT_EQ(l.node(3).paths_through, 1u);
    EXPECT_EQ(l.node(1).paths_through, 2u);
    EXPECT_EQ(l.row_path(1), (std::vector<NodeId>{0, 1, 2, 4, 5}));
    EXPECT_TRUE(l.accepts(words({"a", "b", "d"})));
    EXPECT_TRUE(l.accepts(words({"a", "b", "a", "d"})));
    EXPECT_FALSE(l.accepts(words({"a", "d"})));
}

TEST(Lattice, PayloadCountsSymbols)
{
    Lattice l(Msa({cells({"x"}), cells({"y"}), cells({"x"})}, {0, 1, 2}));
    EXPECT_EQ(l.node(1).payload, words({"x", "y"}));
    EXPECT_EQ(l.node(1).counts, (std::vector<std::size_t>{2, 1}));
    EXPECT_EQ(l.node(1).paths_through, 3u);
    EXPECT_EQ(l.node_label(1), "x/y");
}

TEST(Lattice, EveryRowIsAnAcceptedPath)
{
    lexmsa_test::Rng rng(31);
    Thesaurus t;
    Similarity s(t);
    for (int round = 0; round < 100; ++round) {
        auto items = lexmsa_test::random_items(rng, lexmsa_test::pick(rng, 1, 5), 6, 4);
        Msa m = iterative_msa(items, s);
        Lattice l(m);
        ASSERT_EQ(l.size(), m.cols() + 2);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            auto path = l.row_path(r);
            EXPECT_EQ(path.front(), l.start());
            EXPECT_EQ(path.back(), l.end());
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                EXPECT_TRUE(l.has_edge(path[i], path[i + 1]));
                EXPECT_LT(path[i], path[i + 1]);
            }
            EXPECT_TRUE(l.accepts(m.row_symbols(r)));
        }
        for (std::size_t c = 0; c < m.cols(); ++c)
            EXPECT_EQ(l.node(l.node_of_column(c)).paths_through, m.non_gaps_in_column(c));
        for (auto [u, v] : l.edges()) {
            EXPECT_LT(u, v);
            EXPECT_TRUE(l.is_terminal(u) || !l.node(u).payload.empty());
        }
    }
}

TEST(Lattice, DotOutput)
{
    Lattice l(Msa({cells({"a", "b"}), cells({"a", "_"})}, {0, 1}));
    std::string dot = to_dot(l, "g", {0.0, 2.0, 0.25, 0.0});
    EXPECT_NE(dot.find("digraph \"g\""), std::string::npos);
    EXPECT_NE(dot.find("n1 [label=\"a\\n2\"]"), std::string::npos);
    EXPECT_NE(dot.find("n2 [label=\"b\\n0.25\"]"), std::string::npos);
    EXPECT_NE(dot.find("n0 [label=\"<start>\", shape=point]"), std::string::npos);
    EXPECT_NE(dot.find("n1 -> n3;"), std::string::npos);
}
