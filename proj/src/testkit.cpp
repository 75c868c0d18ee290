#include "l2net/testkit.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/metrics.hpp"

namespace l2net {

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool chance(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

// Shapes that may become a bad pendant blob once everything hanging off
// them has been reduced.
bool bad_l1(int length) { return length == 3 || length == 4; }
bool bad_l2(std::vector<int> paths) {
  std::sort(paths.begin(), paths.end());
  return paths[0] == 0 && paths[1] == 1 && (paths[2] == 2 || paths[2] == 3);
}

void label_leaves(Network& net, const std::vector<VertexId>& leaves, Rng& rng) {
  std::vector<int> order(leaves.size());
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < leaves.size(); ++i) net.set_label(leaves[i], "x" + std::to_string(order[i]));
}

// Open vertices of a new unit, each still missing one edge.
std::vector<VertexId> add_blob(Network& net, const GenParams& p, Rng& rng) {
  const double w1 = std::max(0.0, p.level1_weight), w2 = std::max(0.0, p.level2_weight);
  bool level1 = w1 + w2 <= 0 ? true : chance(rng, w1 / (w1 + w2));
  std::vector<VertexId> ports;
  if (p.allow_bad_blobs && chance(rng, p.bad_blob_rate)) {
    // A bad shape: cycle of length 3 or 4, or main paths of 0, 1 and 2-3.
    int extra = uniform(rng, 2, 3);
    if (level1) {
      for (int i = 0; i <= extra; ++i) ports.push_back(net.add_vertex());
      for (std::size_t i = 0; i < ports.size(); ++i) net.add_edge(ports[i], ports[(i + 1) % ports.size()]);
      return ports;
    }
    VertexId s = net.add_vertex(), t = net.add_vertex(), u = net.add_vertex();
    net.add_edge(s, t);
    net.add_edge(s, u);
    net.add_edge(u, t);
    ports.push_back(u);
    VertexId prev = s;
    for (int i = 0; i < extra; ++i) {
      VertexId v = net.add_vertex();
      net.add_edge(prev, v);
      ports.push_back(v);
      prev = v;
    }
    net.add_edge(prev, t);
    return ports;
  }
  if (level1) {
    int length;
    do length = uniform(rng, 3, 3 + p.max_chain + 1);
    while (!p.allow_bad_blobs && bad_l1(length));
    for (int i = 0; i < length; ++i) ports.push_back(net.add_vertex());
    for (int i = 0; i < length; ++i) net.add_edge(ports[i], ports[(i + 1) % length]);
    return ports;
  }
  std::vector<int> paths(3);
  while (true) {
    for (int& x : paths) x = uniform(rng, 0, p.max_chain);
    int empty = static_cast<int>(std::count(paths.begin(), paths.end(), 0));
    int total = paths[0] + paths[1] + paths[2];
    if (empty <= 1 && total >= 3 && (p.allow_bad_blobs || !bad_l2(paths))) break;
  }
  VertexId s = net.add_vertex(), t = net.add_vertex();
  for (int len : paths) {
    VertexId prev = s;
    for (int i = 0; i < len; ++i) {
      VertexId v = net.add_vertex();
      net.add_edge(prev, v);
      ports.push_back(v);
      prev = v;
    }
    net.add_edge(prev, t);
  }
  return ports;
}

std::optional<Network> try_blob_tree(const GenParams& p, Rng& rng) {
  Network net;
  const int target = uniform(rng, p.min_leaves, p.max_leaves);
  const int blobs = uniform(rng, p.min_blobs, p.max_blobs);
  std::vector<VertexId> open;
  auto attach = [&](std::vector<VertexId> ports) {
    if (!open.empty()) {
      std::size_t i = uniform(rng, 0, static_cast<int>(open.size()) - 1);
      std::size_t j = uniform(rng, 0, static_cast<int>(ports.size()) - 1);
      net.add_edge(open[i], ports[j]);
      open.erase(open.begin() + i);
      ports.erase(ports.begin() + j);
    }
    open.insert(open.end(), ports.begin(), ports.end());
  };
  // Blobs and plain vertices arrive in random order; plain vertices keep
  // coming until the leaf count is reached.
  int placed = 0;
  while (placed < blobs || static_cast<int>(open.size()) < target) {
    int plain_needed = std::max(0, target - static_cast<int>(open.size()));
    bool blob_next = placed < blobs && (plain_needed == 0 || uniform(rng, 0, plain_needed + blobs - placed - 1) <
                                                                 blobs - placed);
    if (blob_next) {
      attach(add_blob(net, p, rng));
      ++placed;
    } else {
      VertexId v = net.add_vertex();
      attach({v, v, v});
    }
    if (static_cast<int>(open.size()) > p.max_leaves + 2) return std::nullopt;
  }
  if (static_cast<int>(open.size()) < p.min_leaves || static_cast<int>(open.size()) > p.max_leaves)
    return std::nullopt;
  std::vector<VertexId> leaves;
  for (VertexId v : open) {
    VertexId leaf = net.add_vertex();
    net.add_edge(v, leaf);
    leaves.push_back(leaf);
  }
  label_leaves(net, leaves, rng);
  return net;
}

std::optional<Network> try_genside(const GenParams& p, Rng& rng) {
  Network net;
  const int lvl = uniform(rng, 1, std::max(1, p.max_level));
  std::vector<VertexId> leaves;
  auto hang_leaf = [&](VertexId spine) {
    if (chance(rng, p.cherry_rate)) {
      VertexId w = net.add_vertex();
      net.add_edge(spine, w);
      for (int k = 0; k < 2; ++k) {
        VertexId leaf = net.add_vertex();
        net.add_edge(w, leaf);
        leaves.push_back(leaf);
      }
    } else {
      VertexId leaf = net.add_vertex();
      net.add_edge(spine, leaf);
      leaves.push_back(leaf);
    }
  };
  if (lvl == 1) {
    int length = uniform(rng, 3, 3 + p.max_chain);
    std::vector<VertexId> cyc;
    for (int i = 0; i < length; ++i) cyc.push_back(net.add_vertex());
    for (int i = 0; i < length; ++i) {
      net.add_edge(cyc[i], cyc[(i + 1) % length]);
      hang_leaf(cyc[i]);
    }
  } else {
    // Random cubic multigraph from a perfect matching of half-edges.
    const int n = 2 * (lvl - 1);
    std::vector<VertexId> gen;
    for (int i = 0; i < n; ++i) gen.push_back(net.add_vertex());
    std::vector<int> half;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < 3; ++k) half.push_back(i);
    std::shuffle(half.begin(), half.end(), rng);
    for (std::size_t i = 0; i < half.size(); i += 2) {
      VertexId a = gen[half[i]], b = gen[half[i + 1]];
      int chain = uniform(rng, a == b ? 2 : 1, std::max(a == b ? 2 : 1, p.max_chain));
      VertexId prev = a;
      for (int k = 0; k < chain; ++k) {
        VertexId s = net.add_vertex();
        net.add_edge(prev, s);
        hang_leaf(s);
        prev = s;
      }
      net.add_edge(prev, b);
    }
  }
  if (static_cast<int>(leaves.size()) < p.min_leaves || static_cast<int>(leaves.size()) > p.max_leaves)
    return std::nullopt;
  label_leaves(net, leaves, rng);
  if (!is_valid(net)) return std::nullopt;
  // A bridge in the generator would split it into several blobs.
  Decomposition d = decompose(net);
  if (d.blobs.size() != 1 || d.blobs[0].level != lvl) return std::nullopt;
  return net;
}

}  // namespace

bool is_bad_shape(const Network& net, int blob_index) {
  Decomposition d = decompose(net);
  const Blob& b = d.blobs.at(blob_index);
  if (b.level == 1) return bad_l1(static_cast<int>(b.vertices.size()));
  if (b.level != 2) return false;
  Theta th = theta_of(net, b);
  return bad_l2({static_cast<int>(th.paths[0].size()), static_cast<int>(th.paths[1].size()),
                 static_cast<int>(th.paths[2].size())});
}

Network random_network(const GenParams& p) {
  if (p.min_leaves < 2 || p.max_leaves < p.min_leaves || p.min_blobs < 0 || p.max_blobs < p.min_blobs ||
      p.max_chain < 1 || p.max_level < 1)
    throw InfeasibleParams("inconsistent generator parameters");
  Rng rng(p.seed);
  for (int attempt = 0; attempt < 5000; ++attempt) {
    auto net = p.require_leaf_every_side ? try_genside(p, rng) : try_blob_tree(p, rng);
    if (net && is_valid(*net)) return *net;
  }
  throw InfeasibleParams("no network found for these parameters");
}

ColoredTree random_colored_tree(int leaves, std::uint64_t seed) {
  if (leaves < 2) throw InfeasibleParams("a coloured tree needs at least two leaves");
  Rng rng(seed);
  // Grow by subdividing a random edge and hanging a new leaf there.
  std::vector<std::pair<int, int>> edges{{0, 1}};
  std::vector<bool> is_leaf{true, true};
  for (int k = 2; k < leaves; ++k) {
    std::size_t e = uniform(rng, 0, static_cast<int>(edges.size()) - 1);
    auto [a, b] = edges[e];
    int mid = static_cast<int>(is_leaf.size());
    is_leaf.push_back(false);
    int leaf = static_cast<int>(is_leaf.size());
    is_leaf.push_back(true);
    edges[e] = {a, mid};
    edges.emplace_back(mid, b);
    edges.emplace_back(mid, leaf);
  }
  const int n = static_cast<int>(is_leaf.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> color(n, -1);
  color[0] = uniform(rng, 0, 1);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      }
  }
  ColoredTree t;
  int leaf_no = 0, internal_no = 0;
  for (int v = 0; v < n; ++v) {
    ColoredTree::Node node;
    node.leaf = is_leaf[v];
    node.color = color[v] ? Color::Red : Color::Black;
    if (node.leaf) {
      node.name = leaf_no < 26 ? std::string(1, static_cast<char>('a' + leaf_no)) : "t" + std::to_string(leaf_no);
      ++leaf_no;
      node.size = uniform(rng, 2, 3);
    } else {
      node.name = std::to_string(++internal_no);
    }
    t.nodes.push_back(node);
  }
  t.edges = edges;
  check_colored_tree(t);
  return t;
}

std::string mode_name(RoundTripMode m) {
  switch (m) {
    case RoundTripMode::Sl:
      return "sl";
    case RoundTripMode::Shortest:
      return "shortest";
    case RoundTripMode::Genside:
      return "genside";
  }
  return {};
}

RoundTripMode parse_mode(const std::string& s) {
  if (s == "sl") return RoundTripMode::Sl;
  if (s == "shortest") return RoundTripMode::Shortest;
  if (s == "genside") return RoundTripMode::Genside;
  throw ParseError("unknown mode '" + s + "' (expected sl, shortest or genside)");
}

RoundTripReport verify_roundtrip(const Network& net, RoundTripMode mode) {
  RoundTripReport rep;
  try {
    ReconstructionResult r;
    switch (mode) {
      case RoundTripMode::Sl:
        r = reconstruct_sl(sl_matrix(net));
        break;
      case RoundTripMode::Genside:
        r = reconstruct_genside(shortest_matrix(net));
        break;
      case RoundTripMode::Shortest:
        if (!is_shortest_reconstructible(net)) rep.expected = ReconstructionResult::Outcome::Ambiguous;
        r = reconstruct_shortest(shortest_matrix(net));
        break;
    }
    rep.outcome = r.outcome;
    rep.survivors = r.networks.size();
    bool found = std::any_of(r.networks.begin(), r.networks.end(),
                             [&](const Network& m) { return is_isomorphic(m, net); });
    rep.pass = found && rep.outcome == rep.expected;
    if (!rep.pass) {
      rep.message = "expected " + outcome_name(rep.expected) + ", got " + outcome_name(rep.outcome) + " with " +
                    std::to_string(rep.survivors) + " network(s)" + (found ? "" : ", input not among them");
      if (!r.reason.empty()) rep.message += ": " + r.reason;
      for (const auto& s : r.trace) rep.trace.push_back(s.to_string());
    }
  } catch (const Error& e) {
    rep.pass = false;
    rep.message = e.kind() + ": " + e.what();
  }
  return rep;
}

}  // namespace l2net
