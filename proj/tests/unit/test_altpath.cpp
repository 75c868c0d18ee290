#include <doctest.h>

#include "l2net/altpath.hpp"
#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/metrics.hpp"
#include "l2net/testkit.hpp"
#include "support.hpp"

using namespace l2net;

namespace {

ColoredTree one_edge(Color x, Color y) {
  ColoredTree t;
  t.nodes = {{"x", true, x, 2}, {"y", true, y, 2}};
  t.edges = {{0, 1}};
  return t;
}

std::string renamed_figure1(const std::string& file) {
  std::string text = l2test::fixture_text(file);
  for (auto [from, to] : {std::pair{"leaf a ", "leaf l_x1 "}, {"leaf b ", "leaf l_x2 "}, {"leaf c ", "leaf l_y1 "},
                          {"leaf d ", "leaf l_y2 "}})
    text.replace(text.find(from), std::string(from).size(), to);
  return text;
}

}  // namespace

TEST_CASE("figure 7 pair from its coloured tree") {
  ColoredTree t = parse_colored_tree(l2test::fixture_text("figure7_tree.txt"));
  CHECK(t.leaf_count() == 5);
  Network n1 = build_altpath(t), n2 = build_altpath(similar(t));
  CHECK(is_isomorphic(n1, l2test::fixture("figure7_n1.net")));
  CHECK(is_isomorphic(n2, l2test::fixture("figure7_n2.net")));
  CHECK(shortest_matrix(n1) == shortest_matrix(n2));
  CHECK_FALSE(sl_matrix(n1) == sl_matrix(n2));
  CHECK(level(n1) == 2);
  CHECK(parse_colored_tree(format_colored_tree(t)).nodes.size() == t.nodes.size());
}

TEST_CASE("similar is an involution") {
  ColoredTree t = random_colored_tree(6, 3);
  ColoredTree back = similar(similar(t));
  REQUIRE(back.nodes.size() == t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) CHECK(back.nodes[i].color == t.nodes[i].color);
  CHECK(is_isomorphic(build_altpath(back), build_altpath(t)));
}

TEST_CASE("the smallest structure is figure 1") {
  CHECK(is_isomorphic(build_altpath(one_edge(Color::Black, Color::Red)), parse_network(renamed_figure1("figure1_left.net"))));
  CHECK(is_isomorphic(build_altpath(one_edge(Color::Red, Color::Black)), parse_network(renamed_figure1("figure1_right.net"))));
  CHECK_THROWS_AS(build_altpath(one_edge(Color::Red, Color::Red)), InvalidColoring);
  ColoredTree big = one_edge(Color::Black, Color::Red);
  big.nodes[0].size = 4;
  CHECK_THROWS_AS(check_colored_tree(big), InvalidColoring);
}

TEST_CASE("malformed trees") {
  CHECK_THROWS_AS(parse_colored_tree("leaf a black 2\nleaf b red 2\n"), InvalidTree);
  CHECK_THROWS_AS(parse_colored_tree("leaf a green 2\n"), ParseError);
}

TEST_CASE("detection") {
  Network left = l2test::fixture("figure1_left.net"), right = l2test::fixture("figure1_right.net");
  auto emb = detect_altpath(left);
  REQUIRE(emb.has_value());
  CHECK(emb->tree.leaf_count() == 2);
  CHECK(is_isomorphic(swap_in_place(left, *emb), right));
  auto back = detect_altpath(swap_in_place(left, *emb));
  REQUIRE(back.has_value());
  CHECK(is_isomorphic(swap_in_place(swap_in_place(left, *emb), *back), left));

  Network n1 = l2test::fixture("figure7_n1.net");
  auto e7 = detect_altpath(n1);
  REQUIRE(e7.has_value());
  CHECK(e7->tree.leaf_count() == 5);
  CHECK(is_isomorphic(swap_in_place(n1, *e7), l2test::fixture("figure7_n2.net")));

  CHECK_FALSE(detect_altpath(l2test::fixture("figure3.net")).has_value());
  CHECK(is_shortest_reconstructible(l2test::fixture("figure3.net")));
  CHECK_FALSE(is_shortest_reconstructible(left));
}

TEST_CASE("swapping keeps shortest distances and changes longest ones") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    GenParams p;
    p.seed = seed;
    p.max_chain = 2;
    p.max_leaves = 14;
    p.min_blobs = 2;
    p.bad_blob_rate = 0.7;
    Network net = random_network(p);
    auto emb = detect_altpath(net);
    if (!emb) continue;
    Network other = swap_in_place(net, *emb);
    CHECK(is_valid(other));
    CHECK(shortest_matrix(other) == shortest_matrix(net));
    CHECK_FALSE(sl_matrix(other) == sl_matrix(net));
  }
}

TEST_CASE("random coloured trees") {
  for (int leaves = 2; leaves <= 8; ++leaves) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ColoredTree t = random_colored_tree(leaves, seed);
      CHECK(t.leaf_count() == static_cast<std::size_t>(leaves));
      CHECK_NOTHROW(check_colored_tree(t));
      Network a = build_altpath(t), b = build_altpath(similar(t));
      CHECK(shortest_matrix(a) == shortest_matrix(b));
      CHECK_FALSE(sl_matrix(a) == sl_matrix(b));
      CHECK_FALSE(is_isomorphic(a, b));
    }
  }
}
