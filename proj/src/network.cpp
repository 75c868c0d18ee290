#include "l2net/network.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <set>
#include <sstream>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"

namespace l2net {

namespace {
const std::vector<VertexId> kNoNeighbors;
}

VertexId Network::add_vertex() {
  VertexId v = next_id();
  adj_[v];
  return v;
}

void Network::add_vertex(VertexId v) { adj_[v]; }

void Network::add_edge(VertexId u, VertexId v) {
  adj_[u].push_back(v);
  if (u != v) adj_[v].push_back(u);
  else adj_[u].push_back(u);
}

void Network::remove_edge(VertexId u, VertexId v) {
  auto drop = [&](VertexId from, VertexId to) {
    auto it = adj_.find(from);
    if (it == adj_.end()) return false;
    auto pos = std::find(it->second.begin(), it->second.end(), to);
    if (pos == it->second.end()) return false;
    it->second.erase(pos);
    return true;
  };
  if (!drop(u, v)) throw InvalidNetwork("no edge " + std::to_string(u) + "-" + std::to_string(v));
  drop(v, u);
}

void Network::remove_vertex(VertexId v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) return;
  for (VertexId w : std::vector<VertexId>(it->second)) {
    if (w == v) continue;
    auto& other = adj_[w];
    other.erase(std::remove(other.begin(), other.end(), v), other.end());
  }
  adj_.erase(it);
  clear_label(v);
}

void Network::set_label(VertexId v, const std::string& taxon) {
  auto existing = leaf_.find(taxon);
  if (existing != leaf_.end() && existing->second != v)
    throw TaxonCollision("taxon '" + taxon + "' already labels vertex " +
                         std::to_string(existing->second));
  clear_label(v);
  adj_[v];
  leaf_[taxon] = v;
  label_[v] = taxon;
}

void Network::clear_label(VertexId v) {
  auto it = label_.find(v);
  if (it == label_.end()) return;
  leaf_.erase(it->second);
  label_.erase(it);
}

const std::vector<VertexId>& Network::neighbors(VertexId v) const {
  auto it = adj_.find(v);
  return it == adj_.end() ? kNoNeighbors : it->second;
}

std::size_t Network::edge_count() const {
  std::size_t twice = 0;
  for (const auto& [v, nb] : adj_) twice += nb.size();
  return twice / 2;
}

std::vector<VertexId> Network::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adj_.size());
  for (const auto& [v, nb] : adj_) out.push_back(v);
  return out;
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  for (const auto& [u, nb] : adj_) {
    int loops = 0;
    for (VertexId v : nb) {
      if (u < v) out.push_back({u, v});
      else if (u == v && (loops++ % 2 == 0)) out.push_back({u, u});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexId Network::next_id() const { return adj_.empty() ? 0 : adj_.rbegin()->first + 1; }

std::optional<std::string> Network::label(VertexId v) const {
  auto it = label_.find(v);
  if (it == label_.end()) return std::nullopt;
  return it->second;
}

VertexId Network::leaf(const std::string& taxon) const {
  auto it = leaf_.find(taxon);
  if (it == leaf_.end()) throw UnknownLeaf("no leaf labelled '" + taxon + "'");
  return it->second;
}

std::vector<std::string> Network::taxa() const {
  std::vector<std::string> out;
  for (const auto& [t, v] : leaf_) out.push_back(t);
  return out;
}

int DenseGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids.begin(), ids.end(), v);
  if (it == ids.end() || *it != v) return -1;
  return static_cast<int>(it - ids.begin());
}

DenseGraph dense(const Network& net) {
  DenseGraph g;
  g.ids = net.vertices();
  g.adj.resize(g.ids.size());
  g.taxon_of.assign(g.ids.size(), -1);
  for (std::size_t i = 0; i < g.ids.size(); ++i)
    for (VertexId w : net.neighbors(g.ids[i])) g.adj[i].push_back(g.index_of(w));
  g.taxa = net.taxa();
  for (std::size_t t = 0; t < g.taxa.size(); ++t) {
    int idx = g.index_of(net.leaf(g.taxa[t]));
    g.leaf_index.push_back(idx);
    g.taxon_of[idx] = static_cast<int>(t);
  }
  return g;
}

std::string Violation::to_string() const {
  static const char* names[] = {"SelfLoop",     "ParallelEdge", "DegreeViolation", "Disconnected",
                                "TooFewLeaves", "EmptyCutSide", "DuplicateSplit"};
  std::string s = names[static_cast<int>(kind)];
  if (!where.empty()) {
    s += "(";
    for (std::size_t i = 0; i < where.size(); ++i) s += (i ? "," : "") + std::to_string(where[i]);
    s += ")";
  }
  return s;
}

std::vector<Violation> validate(const Network& net) {
  std::vector<Violation> out;
  bool simple = true;
  for (VertexId v : net.vertices()) {
    const auto& nb = net.neighbors(v);
    std::set<VertexId> seen;
    for (VertexId w : nb) {
      if (w == v) {
        out.push_back({ViolationKind::SelfLoop, {v}});
        simple = false;
        break;
      }
      if (!seen.insert(w).second && v < w) {
        out.push_back({ViolationKind::ParallelEdge, {v, w}});
        simple = false;
      }
    }
    std::size_t want = net.is_leaf(v) ? 1 : 3;
    if (nb.size() != want) out.push_back({ViolationKind::DegreeViolation, {v}});
  }
  if (net.leaves().size() < 2) out.push_back({ViolationKind::TooFewLeaves, {}});

  DenseGraph g = dense(net);
  if (g.size() > 0) {
    std::vector<char> seen(g.size(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
    }
    if (count != g.size()) {
      for (int i = 0; i < g.size(); ++i)
        if (!seen[i]) {
          out.push_back({ViolationKind::Disconnected, {g.ids[i]}});
          break;
        }
      simple = false;
    }
  }
  if (!simple || !out.empty()) return out;

  // Every cut-edge must separate leaves on both sides, and no two cut-edges
  // may induce the same bipartition.
  Decomposition dec = decompose(net);
  std::set<std::vector<std::string>> sides;
  auto taxa = net.taxa();
  for (const Edge& e : dec.cut_edges) {
    std::vector<std::string> side;
    std::vector<char> seen(g.size(), 0);
    int a = g.index_of(e.u), b = g.index_of(e.v);
    std::vector<int> stack{a};
    seen[a] = seen[b] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (g.taxon_of[v] >= 0) side.push_back(g.taxa[g.taxon_of[v]]);
      for (int w : g.adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    if (side.empty() || side.size() == taxa.size()) {
      out.push_back({ViolationKind::EmptyCutSide, {e.u, e.v}});
      continue;
    }
    std::sort(side.begin(), side.end());
    Split s = make_split(side, taxa);
    if (!sides.insert(s.a).second) out.push_back({ViolationKind::DuplicateSplit, {e.u, e.v}});
  }
  return out;
}

bool is_valid(const Network& net) { return validate(net).empty(); }

void require_valid(const Network& net) {
  auto v = validate(net);
  if (!v.empty()) throw InvalidNetwork("invalid network: " + v.front().to_string());
}

bool valid_taxon_name(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name)
    if (!(std::isalnum(c) || c == '_')) return false;
  return true;
}

Network parse_network(const std::string& text) {
  Network net;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<VertexId> labelled;
  auto fail = [&](const std::string& why) {
    throw ParseError("line " + std::to_string(lineno) + ": " + why);
  };
  auto read_id = [&](std::istringstream& ls) {
    std::string tok;
    if (!(ls >> tok)) fail("missing vertex id");
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      fail("bad vertex id '" + tok + "'");
    }
    if (used != tok.size() || v < 0) fail("bad vertex id '" + tok + "'");
    return static_cast<VertexId>(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "leaf") {
      std::string taxon;
      if (!(ls >> taxon)) fail("missing taxon");
      if (!valid_taxon_name(taxon)) fail("bad taxon name '" + taxon + "'");
      VertexId v = read_id(ls);
      if (net.has_taxon(taxon))
        throw TaxonCollision("line " + std::to_string(lineno) + ": duplicate taxon '" + taxon + "'");
      if (!labelled.insert(v).second) fail("vertex " + std::to_string(v) + " labelled twice");
      net.set_label(v, taxon);
    } else if (kw == "edge") {
      VertexId u = read_id(ls);
      VertexId v = read_id(ls);
      net.add_edge(u, v);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  return net;
}

std::string format_network(const Network& net) {
  std::string out;
  for (const auto& [taxon, v] : net.leaves()) out += "leaf " + taxon + " " + std::to_string(v) + "\n";
  for (const Edge& e : net.edges()) out += "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string to_dot(const Network& net) {
  std::string out = "graph network {\n";
  for (VertexId v : net.vertices()) {
    out += "  v" + std::to_string(v);
    if (auto t = net.label(v)) out += " [shape=box, label=\"" + *t + "\"]";
    else out += " [shape=point]";
    out += ";\n";
  }
  for (const Edge& e : net.edges())
    out += "  v" + std::to_string(e.u) + " -- v" + std::to_string(e.v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace l2net
