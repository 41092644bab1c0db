// Copyright 2026 The kfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sstream>

#include "kfx/errors.hpp"
#include "kfx/graph.hpp"

namespace kfx {
namespace {

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(Graph, BasicQueries) {
  const Graph g = triangle();
  EXPECT_EQ(g.vertex_count(), 3);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.is_connected());
  EXPECT_TRUE(g.is_unicyclic());
  EXPECT_FALSE(g.is_tree());
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(max_degree(g), 2);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidParameter);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
}

TEST(Graph, RelabelPreservesStructure) {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<Vertex> perm{3, 1, 0, 2};
  const Graph h = g.relabeled(perm);
  EXPECT_TRUE(h.has_edge(3, 1));
  EXPECT_TRUE(h.has_edge(1, 0));
  EXPECT_TRUE(h.has_edge(0, 2));
  EXPECT_EQ(h.edge_count(), 3u);
}

TEST(Graph, BfsDistancesOnPath) {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto d = bfs_distances(g, 0);
  EXPECT_EQ(d, (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(EdgeList, RoundTrip) {
  const Graph g = triangle();
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text, "3 3\n0 1\n0 2\n1 2\n");
  EXPECT_EQ(parse_edge_list(text), g);
}

TEST(EdgeList, SkipsCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# triangle\n3 3\n\n0 1\n1 2 # inline\n2 0\n");
  EXPECT_EQ(g, triangle());
}

int parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("3 3\n0 1\n1 1\n0 2\n"), 3);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 0\n"), 3);
  EXPECT_EQ(parse_error_line("3 2\n0 1\n1 5\n"), 3);
  EXPECT_EQ(parse_error_line("3 3\n0 1\n1 2\n"), 3);
  EXPECT_EQ(parse_error_line("3 1\n0 1\n1 2\n"), 3);
  EXPECT_EQ(parse_error_line("x 1\n"), 1);
  EXPECT_EQ(parse_error_line("3 1\n0 one\n"), 2);
  EXPECT_NE(parse_error_line(""), -1);
}

}  // namespace
}  // namespace kfx
