#pragma once

#include <optional>
#include <string>
#include <vector>

#include "l2net/network.hpp"

namespace l2net {

enum class Color { Black, Red };
std::string color_name(Color c);

// Unrooted binary tree with a proper black/red colouring. Leaves carry the
// number of leaves (2 or 3) of the pendant blob that replaces them.
struct ColoredTree {
  struct Node {
    std::string name;
    bool leaf = false;
    Color color = Color::Black;
    int size = 0;  // leaves only
  };
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> edges;

  int index(const std::string& name) const;  // -1 when absent
  std::vector<std::vector<int>> adjacency() const;
  std::size_t leaf_count() const;
};

// `leaf <name> <black|red> <size>`, `color <name> <black|red>` for internal
// vertices, `edge <u> <v>`; `#` comments. Throws ParseError, InvalidTree,
// InvalidColoring.
ColoredTree parse_colored_tree(const std::string& text);
std::string format_colored_tree(const ColoredTree& t);
// Throws InvalidTree (shape) or InvalidColoring (adjacent vertices share a
// colour, or a leaf size outside {2,3}).
void check_colored_tree(const ColoredTree& t);

// Same tree with every colour flipped.
ColoredTree similar(const ColoredTree& t);

// The alt-path structure: black internal vertices become leafless K(2,3)
// blobs, red internal vertices stay plain, black leaves become (s,0,0,0)
// blobs and red leaves cycles with s leaves. Leaf j of the blob replacing
// tree leaf x is named l_<x><j>.
Network build_altpath(const ColoredTree& t);

// One tree vertex realised in a network. `ports[k]` is the vertex meeting
// the k-th tree edge of this node (in ColoredTree::adjacency order).
struct AltPathPiece {
  int node = 0;
  std::vector<VertexId> ports;
  std::vector<VertexId> body;   // blob vertices: black internal v1,v2,v3,n,s; leaves the poles (if any)
  std::vector<VertexId> slots;  // leaves: the non-attachment vertices along the cycle or main path
};

struct AltPathEmbedding {
  ColoredTree tree;
  std::vector<AltPathPiece> pieces;  // parallel to tree.nodes
  std::vector<Edge> links;           // one cut-edge per tree edge, ports in tree-edge order
};

// An alt-path structure contained in a level-2 network, with pendant blobs
// allowed to carry further structure on their slot vertices.
std::optional<AltPathEmbedding> detect_altpath(const Network& net);

// Replace the contained structure by its similar one. Throws InvalidEmbedding.
Network swap_in_place(const Network& net, const AltPathEmbedding& emb);

bool is_shortest_reconstructible(const Network& net);

}  // namespace l2net
