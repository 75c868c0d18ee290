#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace l2net {

using VertexId = std::int64_t;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  auto operator<=>(const Edge&) const = default;
};

// Undirected multigraph with taxon labels on some vertices. Loops and
// parallel edges are representable so that `validate` can report them; every
// algorithm past validation assumes a valid phylogenetic network.
class Network {
 public:
  VertexId add_vertex();
  void add_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void remove_vertex(VertexId v);
  void set_label(VertexId v, const std::string& taxon);
  void clear_label(VertexId v);

  bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;
  std::vector<VertexId> vertices() const;
  // Each edge once with u <= v, sorted.
  std::vector<Edge> edges() const;
  VertexId next_id() const;

  std::optional<std::string> label(VertexId v) const;
  bool is_leaf(VertexId v) const { return label_.count(v) != 0; }
  // Vertex carrying `taxon`; throws UnknownLeaf.
  VertexId leaf(const std::string& taxon) const;
  bool has_taxon(const std::string& taxon) const { return leaf_.count(taxon) != 0; }
  std::vector<std::string> taxa() const;
  const std::map<std::string, VertexId>& leaves() const { return leaf_; }

 private:
  std::map<VertexId, std::vector<VertexId>> adj_;
  std::map<std::string, VertexId> leaf_;
  std::map<VertexId, std::string> label_;
};

// Compact index view used by the graph algorithms. `taxa` is sorted and
// `leaf_index[i]` is the dense index of taxa[i].
struct DenseGraph {
  std::vector<VertexId> ids;
  std::vector<std::vector<int>> adj;
  std::vector<std::string> taxa;
  std::vector<int> leaf_index;
  std::vector<int> taxon_of;  // -1 for unlabelled vertices

  int index_of(VertexId v) const;
  int size() const { return static_cast<int>(ids.size()); }
};

DenseGraph dense(const Network& net);

enum class ViolationKind {
  SelfLoop,
  ParallelEdge,
  DegreeViolation,
  Disconnected,
  TooFewLeaves,
  EmptyCutSide,
  DuplicateSplit,
};

struct Violation {
  ViolationKind kind;
  std::vector<VertexId> where;
  std::string to_string() const;
};

std::vector<Violation> validate(const Network& net);
bool is_valid(const Network& net);
// Throws InvalidNetwork naming the first violation.
void require_valid(const Network& net);

// Text format: `leaf <taxon> <id>` and `edge <id> <id>` lines, `#` comments.
Network parse_network(const std::string& text);
std::string format_network(const Network& net);
std::string to_dot(const Network& net);

bool valid_taxon_name(const std::string& name);

}  // namespace l2net
