#include "l2net/altpath.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"

namespace l2net {

std::string color_name(Color c) { return c == Color::Black ? "black" : "red"; }

namespace {

Color parse_color(const std::string& s, int line) {
  if (s == "black") return Color::Black;
  if (s == "red") return Color::Red;
  throw ParseError("line " + std::to_string(line) + ": unknown colour '" + s + "'");
}

}  // namespace

int ColoredTree::index(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> ColoredTree::adjacency() const {
  std::vector<std::vector<int>> adj(nodes.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::size_t ColoredTree::leaf_count() const {
  return std::count_if(nodes.begin(), nodes.end(), [](const Node& n) { return n.leaf; });
}

void check_colored_tree(const ColoredTree& t) {
  const std::size_t n = t.nodes.size();
  if (t.leaf_count() < 2) throw InvalidTree("a tree needs at least two leaves");
  if (t.edges.size() + 1 != n) throw InvalidTree("edge count does not match a tree");
  auto adj = t.adjacency();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& node = t.nodes[i];
    if (!valid_taxon_name(node.name)) throw InvalidTree("bad vertex name '" + node.name + "'");
    if (t.index(node.name) != static_cast<int>(i)) throw InvalidTree("duplicate vertex '" + node.name + "'");
    if (node.leaf && adj[i].size() != 1) throw InvalidTree("leaf '" + node.name + "' must have degree 1");
    if (!node.leaf && adj[i].size() != 3) throw InvalidTree("internal vertex '" + node.name + "' must have degree 3");
    if (node.leaf && node.size != 2 && node.size != 3)
      throw InvalidColoring("leaf '" + node.name + "' must stand for 2 or 3 leaves");
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidTree("tree is disconnected");
  for (auto [a, b] : t.edges)
    if (t.nodes[a].color == t.nodes[b].color)
      throw InvalidColoring("adjacent vertices '" + t.nodes[a].name + "' and '" + t.nodes[b].name +
                            "' share a colour");
}

ColoredTree parse_colored_tree(const std::string& text) {
  ColoredTree t;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> w;
    for (std::string s; ls >> s;) w.push_back(s);
    if (w.empty()) continue;
    auto fail = [&](const std::string& why) { throw ParseError("line " + std::to_string(line) + ": " + why); };
    if (w[0] == "leaf" && w.size() == 4) {
      ColoredTree::Node node{w[1], true, parse_color(w[2], line), 0};
      try {
        node.size = std::stoi(w[3]);
      } catch (const std::exception&) {
        fail("bad leaf size '" + w[3] + "'");
      }
      t.nodes.push_back(node);
    } else if (w[0] == "color" && w.size() == 3) {
      t.nodes.push_back({w[1], false, parse_color(w[2], line), 0});
    } else if (w[0] == "edge" && w.size() == 3) {
      edges.emplace_back(w[1], w[2]);
    } else {
      fail("expected 'leaf <name> <colour> <size>', 'color <name> <colour>' or 'edge <u> <v>'");
    }
  }
  for (const auto& [a, b] : edges) {
    int ia = t.index(a), ib = t.index(b);
    if (ia < 0 || ib < 0) throw ParseError("edge names an undeclared vertex: " + (ia < 0 ? a : b));
    t.edges.emplace_back(ia, ib);
  }
  check_colored_tree(t);
  return t;
}

std::string format_colored_tree(const ColoredTree& t) {
  std::string out;
  for (const auto& n : t.nodes)
    if (n.leaf) out += "leaf " + n.name + " " + color_name(n.color) + " " + std::to_string(n.size) + "\n";
  for (const auto& n : t.nodes)
    if (!n.leaf) out += "color " + n.name + " " + color_name(n.color) + "\n";
  for (auto [a, b] : t.edges) out += "edge " + t.nodes[a].name + " " + t.nodes[b].name + "\n";
  return out;
}

ColoredTree similar(const ColoredTree& t) {
  ColoredTree s = t;
  for (auto& n : s.nodes) n.color = n.color == Color::Black ? Color::Red : Color::Black;
  return s;
}

namespace {

// Ports of every node, one per tree edge in adjacency order, and for each
// tree edge the positions of that edge in its two nodes' port lists.
std::vector<std::pair<int, int>> edge_positions(const ColoredTree& t) {
  std::vector<int> used(t.nodes.size(), 0);
  std::vector<std::pair<int, int>> pos;
  for (auto [a, b] : t.edges) pos.emplace_back(used[a]++, used[b]++);
  return pos;
}

// Slots s_1..s_k: a cycle through u for a red leaf, the path p..q of an
// (s,0,0,0) blob whose other paths are the edge pq and p-u-q for a black one.
void leaf_blob(Network& net, VertexId u, const std::vector<VertexId>& slots, Color c) {
  for (std::size_t i = 0; i + 1 < slots.size(); ++i) net.add_edge(slots[i], slots[i + 1]);
  if (c == Color::Red) {
    net.add_edge(u, slots.front());
    net.add_edge(slots.back(), u);
    return;
  }
  VertexId p = net.add_vertex(), q = net.add_vertex();
  net.add_edge(p, q);
  net.add_edge(p, u);
  net.add_edge(u, q);
  net.add_edge(p, slots.front());
  net.add_edge(slots.back(), q);
}

std::vector<VertexId> internal_piece(Network& net, Color c) {
  if (c == Color::Red) {
    VertexId v = net.add_vertex();
    return {v, v, v};
  }
  VertexId n = net.add_vertex(), s = net.add_vertex();
  std::vector<VertexId> ports;
  for (int i = 0; i < 3; ++i) {
    VertexId v = net.add_vertex();
    net.add_edge(v, n);
    net.add_edge(v, s);
    ports.push_back(v);
  }
  return ports;
}

}  // namespace

Network build_altpath(const ColoredTree& t) {
  check_colored_tree(t);
  Network net;
  std::vector<std::vector<VertexId>> ports(t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    if (!node.leaf) {
      ports[i] = internal_piece(net, node.color);
      continue;
    }
    VertexId u = net.add_vertex();
    std::vector<VertexId> slots;
    for (int j = 1; j <= node.size; ++j) {
      VertexId s = net.add_vertex(), leaf = net.add_vertex();
      net.add_edge(s, leaf);
      net.set_label(leaf, "l_" + node.name + std::to_string(j));
      slots.push_back(s);
    }
    leaf_blob(net, u, slots, node.color);
    ports[i] = {u};
  }
  auto pos = edge_positions(t);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [a, b] = t.edges[e];
    net.add_edge(ports[a][pos[e].first], ports[b][pos[e].second]);
  }
  return net;
}

namespace {

enum class Role { None, RedInternal, BlackInternal, RedLeaf, BlackLeaf };

struct Arc {
  int to;       // neighbouring blob-tree node
  VertexId here;
  VertexId there;
};

struct Detector {
  const Network& net;
  Decomposition dec;
  std::vector<std::vector<Arc>> arcs;
  std::vector<Role> internal_role;  // per node
  std::map<std::pair<int, int>, bool> memo;

  explicit Detector(const Network& n) : net(n), dec(decompose(n)) {
    arcs.resize(dec.nodes.size());
    for (const auto& te : dec.tree_edges) {
      arcs[te.from].push_back({te.to, te.cut.u, te.cut.v});
      arcs[te.to].push_back({te.from, te.cut.v, te.cut.u});
    }
    for (std::size_t i = 0; i < dec.nodes.size(); ++i) internal_role.push_back(classify_internal(static_cast<int>(i)));
  }

  Role classify_internal(int node) const {
    const auto& nd = dec.nodes[node];
    if (nd.blob < 0) return arcs[node].size() == 3 ? Role::RedInternal : Role::None;
    const Blob& b = dec.blobs[nd.blob];
    if (b.level != 2 || b.vertices.size() != 5 || b.edges.size() != 6 || arcs[node].size() != 3 ||
        b.cut_edges.size() != 3)
      return Role::None;
    Theta th = theta_of(net, b);
    for (const auto& p : th.paths)
      if (p.size() != 1) return Role::None;
    return Role::BlackInternal;
  }

  // Role of `node` as a tree leaf entered at vertex `port`.
  Role leaf_role(int node, VertexId port) const {
    const auto& nd = dec.nodes[node];
    if (nd.blob < 0) return Role::None;
    const Blob& b = dec.blobs[nd.blob];
    if (b.level == 1) return b.vertices.size() == 3 || b.vertices.size() == 4 ? Role::RedLeaf : Role::None;
    if (b.level != 2) return Role::None;
    Theta th = theta_of(net, b);
    bool has_empty = false, has_port = false, has_slots = false;
    for (const auto& p : th.paths) {
      if (p.empty()) has_empty = true;
      else if (p.size() == 1 && p[0] == port) has_port = true;
      else if (p.size() == 2 || p.size() == 3) has_slots = true;
    }
    return has_empty && has_port && has_slots ? Role::BlackLeaf : Role::None;
  }

  static Color color_of(Role r) { return r == Role::RedInternal || r == Role::RedLeaf ? Color::Red : Color::Black; }

  // Can an alt-path structure continue from `from` into arcs[from][k].to,
  // given that `from` has colour `c`?
  bool feasible(int from, int k, Color c) {
    auto key = std::make_pair(from, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    memo[key] = false;
    const Arc& arc = arcs[from][k];
    bool ok = false;
    Role lr = leaf_role(arc.to, arc.there);
    if (lr != Role::None && color_of(lr) != c) ok = true;
    Role ir = internal_role[arc.to];
    if (!ok && ir != Role::None && color_of(ir) != c) {
      ok = true;
      for (std::size_t j = 0; j < arcs[arc.to].size() && ok; ++j)
        if (arcs[arc.to][j].to != from) ok = feasible(arc.to, static_cast<int>(j), color_of(ir));
    }
    memo[key] = ok;
    return ok;
  }

  // Colour a node must have when the structure is entered from it.
  std::optional<Color> side_color(int node, VertexId port) const {
    Role lr = leaf_role(node, port);
    if (lr != Role::None) return color_of(lr);
    return std::nullopt;
  }

  int find_arc(int node, int to) const {
    for (std::size_t j = 0; j < arcs[node].size(); ++j)
      if (arcs[node][j].to == to) return static_cast<int>(j);
    return -1;
  }
};

}  // namespace

std::optional<AltPathEmbedding> detect_altpath(const Network& net) {
  Detector d(net);
  const int nn = static_cast<int>(d.dec.nodes.size());

  // Every structure has a tree edge between two of its nodes. Each end is a
  // leaf or internal piece; try both readings of the first end.
  for (int x = 0; x < nn; ++x)
    for (int k = 0; k < static_cast<int>(d.arcs[x].size()); ++k) {
      const Arc& arc = d.arcs[x][k];
      int y = arc.to;
      int back = d.find_arc(y, x);
      std::vector<std::pair<Role, Color>> readings;
      if (Role r = d.leaf_role(x, arc.here); r != Role::None) readings.emplace_back(r, Detector::color_of(r));
      if (Role r = d.internal_role[x]; r != Role::None) readings.emplace_back(r, Detector::color_of(r));
      for (auto [role, color] : readings) {
        if (!d.feasible(x, k, color)) continue;
        if (role == Role::BlackInternal || role == Role::RedInternal) {
          bool ok = true;
          for (std::size_t j = 0; j < d.arcs[x].size() && ok; ++j)
            if (static_cast<int>(j) != k) ok = d.feasible(x, static_cast<int>(j), color);
          if (!ok) continue;
        }
        (void)back;

        // Assemble the embedding by walking outwards from x.
        AltPathEmbedding emb;
        std::vector<std::vector<VertexId>> node_ports;
        std::vector<std::pair<int, int>> tree_edges;  // tree indices
        std::vector<Edge> links;

        auto add_piece = [&](int bt_node, Role r, VertexId port) -> int {
          int idx = static_cast<int>(emb.tree.nodes.size());
          ColoredTree::Node tn;
          tn.name = "n" + std::to_string(idx);
          tn.color = Detector::color_of(r);
          tn.leaf = r == Role::RedLeaf || r == Role::BlackLeaf;
          AltPathPiece piece;
          piece.node = idx;
          const auto& nd = d.dec.nodes[bt_node];
          if (r == Role::RedInternal) {
            piece.body = {nd.vertex};
          } else if (r == Role::BlackInternal) {
            Theta th = theta_of(net, d.dec.blobs[nd.blob]);
            piece.body = {th.paths[0][0], th.paths[1][0], th.paths[2][0], th.p, th.q};
          } else if (r == Role::RedLeaf) {
            auto order = cycle_of(net, d.dec.blobs[nd.blob], port);
            piece.slots.assign(order.begin() + 1, order.end());
            piece.ports = {port};
          } else {
            Theta th = theta_of(net, d.dec.blobs[nd.blob]);
            piece.body = {th.p, th.q};
            for (const auto& p : th.paths)
              if (p.size() >= 2) piece.slots = p;
            piece.ports = {port};
          }
          if (tn.leaf) tn.size = static_cast<int>(piece.slots.size());
          emb.tree.nodes.push_back(tn);
          emb.pieces.push_back(piece);
          return idx;
        };

        // Grows the structure into `bt_node`, entered from `parent` over
        // `link`; returns the new tree index.
        std::function<int(int, int, Edge, Color)> grow = [&](int bt_node, int parent_bt, Edge link, Color pc) -> int {
          VertexId port = link.v;
          Role lr = d.leaf_role(bt_node, port);
          if (lr != Role::None && Detector::color_of(lr) != pc) return add_piece(bt_node, lr, port);
          Role ir = d.internal_role[bt_node];
          int idx = add_piece(bt_node, ir, port);
          for (const Arc& a : d.arcs[bt_node]) {
            if (a.to == parent_bt) continue;
            int child = grow(a.to, bt_node, Edge{a.here, a.there}, Detector::color_of(ir));
            tree_edges.emplace_back(idx, child);
            links.push_back(Edge{a.here, a.there});
          }
          return idx;
        };

        int root = add_piece(x, role, arc.here);
        if (role == Role::RedLeaf || role == Role::BlackLeaf) {
          int child = grow(y, x, Edge{arc.here, arc.there}, color);
          tree_edges.emplace_back(root, child);
          links.push_back(Edge{arc.here, arc.there});
        } else {
          for (const Arc& a : d.arcs[x]) {
            int child = grow(a.to, x, Edge{a.here, a.there}, color);
            tree_edges.emplace_back(root, child);
            links.push_back(Edge{a.here, a.there});
          }
        }
        emb.tree.edges = tree_edges;
        emb.links = links;

        // Ports of internal pieces follow the tree's adjacency order.
        auto adj = emb.tree.adjacency();
        for (std::size_t e = 0; e < tree_edges.size(); ++e) {
          auto [a, b] = tree_edges[e];
          for (int end : {a, b}) {
            auto& piece = emb.pieces[end];
            if (emb.tree.nodes[end].leaf) continue;
            VertexId mine = end == a ? links[e].u : links[e].v;
            piece.ports.push_back(mine);
          }
        }
        for (std::size_t i = 0; i < emb.pieces.size(); ++i) {
          auto& piece = emb.pieces[i];
          if (emb.tree.nodes[i].leaf || emb.tree.nodes[i].color == Color::Red) continue;
          // v1..v3 follow the port order.
          std::vector<VertexId> body = piece.ports;
          body.push_back(piece.body[3]);
          body.push_back(piece.body[4]);
          piece.body = body;
        }
        check_colored_tree(emb.tree);
        return emb;
      }
    }
  return std::nullopt;
}

Network swap_in_place(const Network& net, const AltPathEmbedding& emb) {
  const auto& t = emb.tree;
  if (emb.pieces.size() != t.nodes.size() || emb.links.size() != t.edges.size())
    throw InvalidEmbedding("embedding does not match its tree");
  auto adj = t.adjacency();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& piece = emb.pieces[i];
    std::size_t want = t.nodes[i].leaf ? 1 : 3;
    if (piece.ports.size() != want) throw InvalidEmbedding("piece " + t.nodes[i].name + " has the wrong port count");
    for (VertexId v : piece.ports)
      if (!net.has_vertex(v)) throw InvalidEmbedding("port vertex " + std::to_string(v) + " is not in the network");
    if (t.nodes[i].leaf && piece.slots.size() != static_cast<std::size_t>(t.nodes[i].size))
      throw InvalidEmbedding("leaf piece " + t.nodes[i].name + " has the wrong slot count");
  }
  auto has_edge = [&](VertexId a, VertexId b) {
    const auto& nb = net.neighbors(a);
    return std::find(nb.begin(), nb.end(), b) != nb.end();
  };
  for (const Edge& e : emb.links)
    if (!net.has_vertex(e.u) || !net.has_vertex(e.v) || !has_edge(e.u, e.v))
      throw InvalidEmbedding("link " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge");

  Network out = net;
  for (const Edge& e : emb.links) out.remove_edge(e.u, e.v);
  std::vector<std::vector<VertexId>> ports(t.nodes.size());
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    const auto& piece = emb.pieces[i];
    if (!node.leaf) {
      if (node.color == Color::Red) out.remove_vertex(piece.ports[0]);
      else
        for (VertexId v : piece.body) out.remove_vertex(v);
      ports[i] = internal_piece(out, node.color == Color::Red ? Color::Black : Color::Red);
      continue;
    }
    VertexId u = piece.ports[0];
    const auto& s = piece.slots;
    if (node.color == Color::Red) {
      if (!has_edge(u, s.front()) || !has_edge(u, s.back())) throw InvalidEmbedding("red leaf is not a cycle");
      out.remove_edge(u, s.front());
      out.remove_edge(s.back(), u);
      for (std::size_t j = 0; j + 1 < s.size(); ++j) out.remove_edge(s[j], s[j + 1]);
    } else {
      if (piece.body.size() != 2) throw InvalidEmbedding("black leaf without poles");
      for (VertexId v : piece.body) out.remove_vertex(v);
      for (std::size_t j = 0; j + 1 < s.size(); ++j) out.remove_edge(s[j], s[j + 1]);
    }
    leaf_blob(out, u, s, node.color == Color::Red ? Color::Black : Color::Red);
    ports[i] = {u};
  }
  auto pos = edge_positions(t);
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [a, b] = t.edges[e];
    out.add_edge(ports[a][pos[e].first], ports[b][pos[e].second]);
  }
  return out;
}

bool is_shortest_reconstructible(const Network& net) { return !detect_altpath(net).has_value(); }

}  // namespace l2net
