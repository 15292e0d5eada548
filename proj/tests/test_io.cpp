#include <gtest/gtest.h>

#include "seidel/io.hpp"

using namespace seidel;

TEST(EdgeList, RoundTrip) {
  const Graph g = cycle_graph(5);
  EXPECT_EQ(write_edge_list(g), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  EXPECT_EQ(parse_edge_list("3 0\n"), Graph::edgeless(3));
}

TEST(EdgeList, Errors) {
  try {
    parse_edge_list("3 1\n0 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6U);
  }
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), ParseError);
}

TEST(Detect, Formats) {
  EXPECT_EQ(detect_format("Dhc\n"), GraphFormat::Graph6);
  EXPECT_EQ(detect_format(">>graph6<<Dhc"), GraphFormat::Graph6);
  EXPECT_EQ(detect_format("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), GraphFormat::EdgeList);
  EXPECT_EQ(detect_format("1 2 3 4\n3 1 4 2\n"), GraphFormat::Diagram);
  EXPECT_EQ(detect_format("1 0\n0 1\n"), GraphFormat::Diagram);
}

TEST(ReadGraph, AllFormatsAgree) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(read_graph("Dhc"), c5);
  EXPECT_EQ(read_graph(write_edge_list(c5)), c5);
  const Graph p4 = read_graph("1 2 3 4\n3 1 4 2\n");
  EXPECT_EQ(p4.size(), 3U);
  EXPECT_THROW(read_graph("Dhc", GraphFormat::EdgeList), ParseError);
}

TEST(Graph6Lines, SkipsCommentsAndReportsOffsets) {
  const auto gs = read_graph6_lines("# corpus\nDhc\n\nA_\n");
  ASSERT_EQ(gs.size(), 2U);
  EXPECT_EQ(gs[1].size(), 1U);
  try {
    read_graph6_lines("Dhc\nD~~~~\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.offset(), 4U);
  }
}
