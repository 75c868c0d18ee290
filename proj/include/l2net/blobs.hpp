#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "l2net/network.hpp"
#include "l2net/pendant_form.hpp"

namespace l2net {

struct Blob {
  std::vector<VertexId> vertices;  // sorted
  std::vector<Edge> edges;
  int level = 0;
  // (vertex in blob, vertex outside), sorted
  std::vector<Edge> cut_edges;
};

// Blob tree: one node per blob and one per internal vertex outside every
// blob; one edge per cut-edge whose endpoints are both internal.
struct BlobTreeNode {
  int blob = -1;        // index into blobs, or -1
  VertexId vertex = 0;  // meaningful when blob == -1
};

struct BlobTreeEdge {
  int from = 0;
  int to = 0;
  Edge cut;  // cut.u lies in `from`, cut.v in `to`
};

struct Decomposition {
  std::vector<Blob> blobs;
  std::vector<Edge> cut_edges;  // every bridge, u < v
  std::vector<BlobTreeNode> nodes;
  std::vector<BlobTreeEdge> tree_edges;

  std::map<VertexId, int> blob_at;  // vertex -> blob index
  std::map<VertexId, int> node_at;  // internal vertex -> tree node

  int blob_of(VertexId v) const;  // -1 when v lies in no blob
};

Decomposition decompose(const Network& net);
int level(const Network& net);

// Theta structure of a level-2 blob: poles p < q and the three main paths,
// each listed from p to q without the poles.
struct Theta {
  VertexId p = 0;
  VertexId q = 0;
  std::vector<std::vector<VertexId>> paths;
};
Theta theta_of(const Network& net, const Blob& blob);
// Cycle order of a level-1 blob starting at `start`.
std::vector<VertexId> cycle_of(const Network& net, const Blob& blob, VertexId start);

struct Split {
  std::vector<std::string> a;  // holds the smallest taxon
  std::vector<std::string> b;
  auto operator<=>(const Split&) const = default;
  std::string to_string() const;
};
Split make_split(std::vector<std::string> side, const std::vector<std::string>& taxa);

// Splits induced by cut-edges with at least two leaves on each side.
std::vector<Split> cut_edge_splits(const Network& net);

struct PendantInfo {
  PendantForm form;
  VertexId attachment = 0;  // blob end of the non-trivial cut-edge
  VertexId connection = 0;  // the other end
};
PendantInfo classify_pendant(const Network& net, const Blob& blob);

// Generator of a network: pendant trees deleted, degree-2 vertices
// suppressed. A network that is a single cycle yields one vertex with a loop.
struct GeneratorGraph {
  struct Side {
    VertexId from = 0;
    VertexId to = 0;
    std::vector<VertexId> spine;  // from -> to, without endpoints
    Chain chain;                  // leaves hanging off the spine in order
  };
  std::vector<VertexId> vertices;
  std::vector<Side> sides;
};
GeneratorGraph generator(const Network& net);

// Leaf-labelled isomorphism.
std::string canonical_form(const Network& net);
bool is_isomorphic(const Network& a, const Network& b);

}  // namespace l2net
