#include "l2net/blobs.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "l2net/errors.hpp"

namespace l2net {

int Decomposition::blob_of(VertexId v) const {
  auto it = blob_at.find(v);
  return it == blob_at.end() ? -1 : it->second;
}

Decomposition decompose(const Network& net) {
  DenseGraph g = dense(net);
  const int n = g.size();
  Decomposition dec;

  // Iterative Tarjan over edges; components with one edge are bridges.
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    struct Frame {
      int v, parent;
      std::size_t next;
      bool skipped_parent;
    };
    std::vector<Frame> stack{{root, -1, 0, false}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.adj[f.v].size()) {
        int w = g.adj[f.v][f.next++];
        if (w == f.parent && !f.skipped_parent) {
          f.skipped_parent = true;
          continue;
        }
        if (disc[w] < 0) {
          edge_stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0, false});
        } else if (disc[w] < disc[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      int v = f.v, parent = f.parent;
      stack.pop_back();
      if (parent < 0) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] < disc[parent]) continue;
      std::vector<std::pair<int, int>> comp;
      while (true) {
        auto e = edge_stack.back();
        edge_stack.pop_back();
        comp.push_back(e);
        if (e.first == parent && e.second == v) break;
      }
      if (comp.size() == 1) {
        VertexId a = g.ids[parent], b = g.ids[v];
        dec.cut_edges.push_back({std::min(a, b), std::max(a, b)});
        continue;
      }
      Blob blob;
      std::set<VertexId> vs;
      for (auto [x, y] : comp) {
        VertexId a = g.ids[x], b = g.ids[y];
        vs.insert(a);
        vs.insert(b);
        blob.edges.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(blob.edges.begin(), blob.edges.end());
      blob.vertices.assign(vs.begin(), vs.end());
      blob.level = static_cast<int>(blob.edges.size()) - static_cast<int>(blob.vertices.size()) + 1;
      dec.blobs.push_back(std::move(blob));
    }
  }
  std::sort(dec.cut_edges.begin(), dec.cut_edges.end());
  std::sort(dec.blobs.begin(), dec.blobs.end(),
            [](const Blob& x, const Blob& y) { return x.vertices < y.vertices; });
  for (std::size_t i = 0; i < dec.blobs.size(); ++i)
    for (VertexId v : dec.blobs[i].vertices) dec.blob_at[v] = static_cast<int>(i);
  for (Blob& b : dec.blobs) {
    for (VertexId v : b.vertices)
      for (VertexId w : net.neighbors(v))
        if (dec.blob_of(w) != dec.blob_of(v)) b.cut_edges.push_back({v, w});
    std::sort(b.cut_edges.begin(), b.cut_edges.end());
  }

  for (std::size_t i = 0; i < dec.blobs.size(); ++i) {
    dec.nodes.push_back({static_cast<int>(i), 0});
    for (VertexId v : dec.blobs[i].vertices) dec.node_at[v] = static_cast<int>(i);
  }
  for (VertexId v : net.vertices()) {
    if (net.is_leaf(v) || dec.blob_of(v) >= 0) continue;
    dec.node_at[v] = static_cast<int>(dec.nodes.size());
    dec.nodes.push_back({-1, v});
  }
  for (const Edge& e : dec.cut_edges) {
    if (net.is_leaf(e.u) || net.is_leaf(e.v)) continue;
    dec.tree_edges.push_back({dec.node_at.at(e.u), dec.node_at.at(e.v), e});
  }
  return dec;
}

int level(const Network& net) {
  int lv = 0;
  for (const Blob& b : decompose(net).blobs) lv = std::max(lv, b.level);
  return lv;
}

namespace {

std::vector<VertexId> blob_neighbors(const Network& net, const Blob& blob, VertexId v) {
  std::vector<VertexId> out;
  for (VertexId w : net.neighbors(v))
    if (std::binary_search(blob.vertices.begin(), blob.vertices.end(), w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Theta theta_of(const Network& net, const Blob& blob) {
  if (blob.level != 2) throw UnrecognizedShape("blob is not level 2");
  std::vector<VertexId> poles;
  for (VertexId v : blob.vertices)
    if (blob_neighbors(net, blob, v).size() == 3) poles.push_back(v);
  if (poles.size() != 2) throw UnrecognizedShape("level-2 blob without two poles");
  Theta t;
  t.p = poles[0];
  t.q = poles[1];
  for (VertexId start : blob_neighbors(net, blob, t.p)) {
    std::vector<VertexId> path;
    VertexId prev = t.p, cur = start;
    while (cur != t.q) {
      path.push_back(cur);
      auto nb = blob_neighbors(net, blob, cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    t.paths.push_back(std::move(path));
  }
  return t;
}

std::vector<VertexId> cycle_of(const Network& net, const Blob& blob, VertexId start) {
  if (blob.level != 1) throw UnrecognizedShape("blob is not level 1");
  std::vector<VertexId> order{start};
  VertexId prev = start, cur = blob_neighbors(net, blob, start)[0];
  while (cur != start) {
    order.push_back(cur);
    auto nb = blob_neighbors(net, blob, cur);
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

std::string Split::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i];
  s += "|";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + b[i];
  return s;
}

Split make_split(std::vector<std::string> side, const std::vector<std::string>& taxa) {
  std::sort(side.begin(), side.end());
  std::vector<std::string> rest;
  for (const auto& t : taxa)
    if (!std::binary_search(side.begin(), side.end(), t)) rest.push_back(t);
  std::sort(rest.begin(), rest.end());
  if (!rest.empty() && (side.empty() || rest.front() < side.front())) std::swap(side, rest);
  return {side, rest};
}

std::vector<Split> cut_edge_splits(const Network& net) {
  DenseGraph g = dense(net);
  Decomposition dec = decompose(net);
  std::set<Split> out;
  for (const Edge& e : dec.cut_edges) {
    std::vector<char> seen(g.size(), 0);
    int a = g.index_of(e.u), b = g.index_of(e.v);
    seen[a] = seen[b] = 1;
    std::vector<int> stack{a};
    std::vector<std::string> side;
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
    if (side.size() < 2 || side.size() + 2 > g.taxa.size()) continue;
    out.insert(make_split(side, g.taxa));
  }
  return {out.begin(), out.end()};
}

PendantInfo classify_pendant(const Network& net, const Blob& blob) {
  std::vector<Edge> nontrivial;
  for (const Edge& e : blob.cut_edges)
    if (!net.is_leaf(e.v)) nontrivial.push_back(e);
  if (nontrivial.size() != 1) throw NotPendant("blob has " + std::to_string(nontrivial.size()) +
                                               " non-trivial cut-edges");
  PendantInfo info;
  info.attachment = nontrivial[0].u;
  info.connection = nontrivial[0].v;

  auto leaf_of = [&](VertexId v) -> std::string {
    for (VertexId w : net.neighbors(v))
      if (auto t = net.label(w)) return *t;
    throw UnrecognizedShape("blob vertex " + std::to_string(v) + " carries no leaf");
  };
  auto chain_along = [&](const std::vector<VertexId>& spine) {
    Chain c;
    for (VertexId v : spine) c.push_back(leaf_of(v));
    return c;
  };

  if (blob.level == 1) {
    auto order = cycle_of(net, blob, info.attachment);
    info.form = PendantForm::level1(chain_along({order.begin() + 1, order.end()}));
  } else if (blob.level == 2) {
    Theta t = theta_of(net, blob);
    int cut_path = -1;
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < t.paths[i].size(); ++j)
        if (t.paths[i][j] == info.attachment) {
          cut_path = i;
          pos = j;
        }
    if (cut_path < 0) throw UnrecognizedShape("attachment vertex is a pole");
    std::vector<Chain> free;
    for (int i = 0; i < 3; ++i)
      if (i != cut_path) free.push_back(chain_along(t.paths[i]));
    const auto& cp = t.paths[cut_path];
    info.form = PendantForm::level2(free[0], free[1], chain_along({cp.begin(), cp.begin() + pos}),
                                    chain_along({cp.begin() + pos + 1, cp.end()}));
  } else {
    throw UnrecognizedShape("pendant blob of level " + std::to_string(blob.level));
  }
  if (!info.form.well_formed()) throw UnrecognizedShape("degenerate pendant blob");
  info.form = info.form.canonical();
  return info;
}

GeneratorGraph generator(const Network& net) {
  Network core = net;
  // Strip pendant trees, remembering which core vertex each leaf hangs from.
  std::map<VertexId, std::string> leaf_at;
  for (const auto& [taxon, v] : net.leaves()) {
    const auto& nb = net.neighbors(v);
    if (nb.size() == 1) leaf_at[nb[0]] = taxon;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v : core.vertices())
      if (core.degree(v) <= 1) {
        core.remove_vertex(v);
        changed = true;
      }
  }
  if (core.vertex_count() == 0) throw IsTree("network has no cycle");

  GeneratorGraph gen;
  for (VertexId v : core.vertices())
    if (core.degree(v) >= 3) gen.vertices.push_back(v);
  auto chain_of = [&](const std::vector<VertexId>& spine) {
    Chain c;
    for (VertexId v : spine)
      if (auto it = leaf_at.find(v); it != leaf_at.end()) c.push_back(it->second);
    return c;
  };
  if (gen.vertices.empty()) {
    // A lone cycle: keep its smallest vertex and turn the rest into a loop.
    VertexId start = core.vertices().front();
    std::vector<VertexId> spine;
    VertexId prev = start, cur = core.neighbors(start)[0];
    while (cur != start) {
      spine.push_back(cur);
      const auto& nb = core.neighbors(cur);
      VertexId next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    gen.vertices.push_back(start);
    gen.sides.push_back({start, start, spine, chain_of(spine)});
    return gen;
  }
  // Walk every side once, tracking edges by id so parallel sides stay apart.
  std::map<VertexId, std::vector<std::pair<VertexId, int>>> inc;
  auto core_edges = core.edges();
  for (int id = 0; id < static_cast<int>(core_edges.size()); ++id) {
    inc[core_edges[id].u].push_back({core_edges[id].v, id});
    inc[core_edges[id].v].push_back({core_edges[id].u, id});
  }
  std::vector<char> used(core_edges.size(), 0);
  for (VertexId g : gen.vertices) {
    for (auto [first, first_id] : inc[g]) {
      if (used[first_id]) continue;
      used[first_id] = 1;
      std::vector<VertexId> spine;
      VertexId cur = first;
      int via = first_id;
      while (core.degree(cur) == 2) {
        spine.push_back(cur);
        for (auto [w, id] : inc[cur])
          if (id != via) {
            via = id;
            cur = w;
            break;
          }
        used[via] = 1;
      }
      gen.sides.push_back({g, cur, spine, chain_of(spine)});
    }
  }
  return gen;
}

namespace {

using Colors = std::vector<int>;

void refine(const DenseGraph& g, Colors& col) {
  const int n = g.size();
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{col[v]};
      std::vector<int> nb;
      for (int w : g.adj[v]) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> keys;
    for (auto& s : sig) keys.push_back(s.first);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (int v = 0; v < n; ++v)
      col[v] = static_cast<int>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
    int now = static_cast<int>(keys.size());
    if (now == classes) break;
    classes = now;
  }
}

std::string certificate(const DenseGraph& g, const Colors& col) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < g.size(); ++v)
    for (int w : g.adj[v])
      if (col[v] <= col[w]) es.push_back({col[v], col[w]});
  std::sort(es.begin(), es.end());
  std::string s;
  for (std::size_t t = 0; t < g.taxa.size(); ++t)
    s += g.taxa[t] + "@" + std::to_string(col[g.leaf_index[t]]) + ";";
  for (auto [a, b] : es) s += std::to_string(a) + "-" + std::to_string(b) + ";";
  return s;
}

std::string search(const DenseGraph& g, Colors col) {
  refine(g, col);
  std::vector<int> count(g.size() + 1, 0);
  for (int c : col) ++count[c];
  int target = -1;
  for (int c = 0; c < g.size(); ++c)
    if (count[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) return certificate(g, col);
  std::string best;
  bool have = false;
  for (int v = 0; v < g.size(); ++v) {
    if (col[v] != target) continue;
    Colors next(col.size());
    for (int w = 0; w < g.size(); ++w) next[w] = 2 * col[w] + 1;
    next[v] = 2 * col[v];
    std::string s = search(g, next);
    if (!have || s < best) {
      best = std::move(s);
      have = true;
    }
  }
  return best;
}

}  // namespace

std::string canonical_form(const Network& net) {
  DenseGraph g = dense(net);
  Colors col(g.size(), 0);
  for (std::size_t t = 0; t < g.taxa.size(); ++t) col[g.leaf_index[t]] = static_cast<int>(t) + 1;
  return std::to_string(g.size()) + "|" + search(g, col);
}

bool is_isomorphic(const Network& a, const Network& b) {
  if (a.taxa() != b.taxa()) throw TaxaMismatch("networks have different taxa");
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace l2net
