#include "l2net/metrics.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"

namespace l2net {

DistanceMatrix::DistanceMatrix(std::vector<std::string> taxa, bool with_longest)
    : taxa_(std::move(taxa)), with_longest_(with_longest) {
  const std::size_t n = taxa_.size();
  dm_.assign(n * n, 0);
  dl_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) lookup_.push_back({taxa_[i], static_cast<int>(i)});
  std::sort(lookup_.begin(), lookup_.end());
  for (std::size_t i = 1; i < n; ++i)
    if (lookup_[i].first == lookup_[i - 1].first)
      throw InvalidMatrix("duplicate taxon '" + lookup_[i].first + "'");
}

std::vector<std::string> DistanceMatrix::sorted_taxa() const {
  std::vector<std::string> out;
  for (const auto& [t, i] : lookup_) out.push_back(t);
  return out;
}

bool DistanceMatrix::contains(const std::string& taxon) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(taxon, -1));
  return it != lookup_.end() && it->first == taxon;
}

int DistanceMatrix::index(const std::string& taxon) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(taxon, -1));
  if (it == lookup_.end() || it->first != taxon) throw UnknownLeaf("no taxon '" + taxon + "' in matrix");
  return it->second;
}

int DistanceMatrix::shortest(const std::string& x, const std::string& y) const {
  return shortest(index(x), index(y));
}

int DistanceMatrix::longest(const std::string& x, const std::string& y) const {
  return longest(index(x), index(y));
}

void DistanceMatrix::set(int i, int j, int dm, int dl) {
  dm_[i * size() + j] = dm_[j * size() + i] = dm;
  dl_[i * size() + j] = dl_[j * size() + i] = dl;
}

void DistanceMatrix::set_shortest(int i, int j, int dm) { dm_[i * size() + j] = dm_[j * size() + i] = dm; }

DistanceMatrix DistanceMatrix::shortest_only() const {
  DistanceMatrix out = *this;
  out.with_longest_ = false;
  std::fill(out.dl_.begin(), out.dl_.end(), 0);
  return out;
}

DistanceMatrix DistanceMatrix::without(const std::vector<std::string>& drop) const {
  std::vector<int> keep;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::find(drop.begin(), drop.end(), taxa_[i]) == drop.end()) {
      keep.push_back(static_cast<int>(i));
      names.push_back(taxa_[i]);
    }
  DistanceMatrix out(names, with_longest_);
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) {
      out.dm_[i * keep.size() + j] = shortest(keep[i], keep[j]);
      out.dl_[i * keep.size() + j] = longest(keep[i], keep[j]);
    }
  return out;
}

DistanceMatrix DistanceMatrix::with_taxon(const std::string& taxon) const {
  if (contains(taxon)) throw TaxonCollision("taxon '" + taxon + "' already present");
  auto names = taxa_;
  names.push_back(taxon);
  DistanceMatrix out(names, with_longest_);
  const std::size_t n = size(), m = n + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.dm_[i * m + j] = dm_[i * n + j];
      out.dl_[i * m + j] = dl_[i * n + j];
    }
  return out;
}

void DistanceMatrix::check() const {
  const int n = static_cast<int>(size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto where = [&] { return " at (" + taxa_[i] + "," + taxa_[j] + ")"; };
      if (shortest(i, j) != shortest(j, i) || longest(i, j) != longest(j, i))
        throw InvalidMatrix("matrix is not symmetric" + where());
      if (i == j && (shortest(i, j) != 0 || longest(i, j) != 0))
        throw InvalidMatrix("non-zero diagonal" + where());
      if (i != j && shortest(i, j) < 1) throw InvalidMatrix("non-positive distance" + where());
      if (i != j && with_longest_ && longest(i, j) < shortest(i, j))
        throw InvalidMatrix("longest below shortest" + where());
    }
}

bool DistanceMatrix::operator==(const DistanceMatrix& o) const {
  if (size() != o.size() || with_longest_ != o.with_longest_) return false;
  for (std::size_t k = 0; k < size(); ++k)
    if (lookup_[k].first != o.lookup_[k].first) return false;
  std::vector<int> map(size());
  for (std::size_t k = 0; k < size(); ++k) map[lookup_[k].second] = o.lookup_[k].second;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      if (shortest(i, j) != o.shortest(map[i], map[j])) return false;
      if (with_longest_ && longest(i, j) != o.longest(map[i], map[j])) return false;
    }
  return true;
}

DistanceMatrix shortest_matrix(const Network& net) {
  DenseGraph g = dense(net);
  DistanceMatrix m(g.taxa, false);
  const int n = g.size();
  std::vector<int> dist(n);
  for (std::size_t s = 0; s < g.taxa.size(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[g.leaf_index[s]] = 0;
    q.push(g.leaf_index[s]);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    for (std::size_t t = 0; t < g.taxa.size(); ++t) {
      if (dist[g.leaf_index[t]] < 0) throw InvalidNetwork("network is disconnected");
      m.set_shortest(s, t, dist[g.leaf_index[t]]);
    }
  }
  return m;
}

LengthTable longest_matrix(const Network& net) {
  DenseGraph g = dense(net);
  Decomposition dec = decompose(net);
  const int n = g.size();
  std::vector<int> blob_of(n, -1);
  for (std::size_t b = 0; b < dec.blobs.size(); ++b) {
    if (dec.blobs[b].level > 2)
      throw LevelTooHigh("blob of level " + std::to_string(dec.blobs[b].level));
    for (VertexId v : dec.blobs[b].vertices) blob_of[g.index_of(v)] = static_cast<int>(b);
  }

  // Inside each blob, the set of simple route lengths between every pair of
  // vertices that have an edge leaving the blob.
  std::vector<std::vector<int>> ports(dec.blobs.size());
  std::map<std::pair<int, int>, int> route;  // (from, to) -> longest
  for (std::size_t b = 0; b < dec.blobs.size(); ++b) {
    for (VertexId id : dec.blobs[b].vertices) {
      int v = g.index_of(id);
      for (int w : g.adj[v])
        if (blob_of[w] != static_cast<int>(b)) {
          ports[b].push_back(v);
          break;
        }
    }
    std::vector<char> on_path(n, 0);
    for (int s : ports[b]) {
      std::map<int, std::set<int>> lengths;
      std::function<void(int, int)> walk = [&](int v, int len) {
        lengths[v].insert(len);
        on_path[v] = 1;
        for (int w : g.adj[v])
          if (blob_of[w] == static_cast<int>(b) && !on_path[w]) walk(w, len + 1);
        on_path[v] = 0;
      };
      walk(s, 0);
      for (int t : ports[b])
        if (t != s) route[{s, t}] = *lengths[t].rbegin();
    }
  }

  LengthTable out{g.taxa, std::vector<int>(g.taxa.size() * g.taxa.size(), 0)};
  std::vector<int> best(n);
  for (std::size_t s = 0; s < g.taxa.size(); ++s) {
    std::fill(best.begin(), best.end(), -1);
    // (vertex, length, vertex we arrived from over a cut-edge)
    std::vector<std::tuple<int, int, int>> todo{{g.leaf_index[s], 0, -1}};
    while (!todo.empty()) {
      auto [v, len, from] = todo.back();
      todo.pop_back();
      best[v] = len;
      auto leave = [&](int x, int xlen, int skip) {
        for (int w : g.adj[x]) {
          if (w == skip) continue;
          if (blob_of[x] >= 0 && blob_of[w] == blob_of[x]) continue;
          todo.push_back({w, xlen + 1, x});
        }
      };
      if (blob_of[v] >= 0 && from >= 0) {
        best[v] = len;
        for (int t : ports[blob_of[v]]) {
          if (t == v) continue;
          int tl = len + route[{v, t}];
          best[t] = tl;
          leave(t, tl, -1);
        }
      } else {
        leave(v, len, from);
      }
    }
    for (std::size_t t = 0; t < g.taxa.size(); ++t) out.cells[s * g.taxa.size() + t] = best[g.leaf_index[t]];
  }
  return out;
}

DistanceMatrix sl_matrix(const Network& net) {
  DistanceMatrix m = shortest_matrix(net);
  LengthTable l = longest_matrix(net);
  DistanceMatrix out(m.taxa(), true);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.set(i, j, m.shortest(i, j), l.at(i, j));
  return out;
}

LengthTable brute_force_longest(const Network& net, std::size_t max_vertices) {
  if (net.vertex_count() > max_vertices)
    throw TooLarge("brute force limited to " + std::to_string(max_vertices) + " vertices");
  DenseGraph g = dense(net);
  const std::size_t k = g.taxa.size();
  LengthTable out{g.taxa, std::vector<int>(k * k, 0)};
  std::vector<char> used(g.size(), 0);
  for (std::size_t s = 0; s < k; ++s) {
    std::vector<int> best(g.size(), 0);
    std::function<void(int, int)> dfs = [&](int v, int len) {
      best[v] = std::max(best[v], len);
      used[v] = 1;
      for (int w : g.adj[v])
        if (!used[w]) dfs(w, len + 1);
      used[v] = 0;
    };
    dfs(g.leaf_index[s], 0);
    for (std::size_t t = 0; t < k; ++t) out.cells[s * k + t] = s == t ? 0 : best[g.leaf_index[t]];
  }
  return out;
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

int parse_int(const std::string& tok, int lineno) {
  bool ok = !tok.empty() && tok.size() < 10 &&
            std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
  if (!ok) throw ParseError("line " + std::to_string(lineno) + ": bad number '" + tok + "'");
  return std::stoi(tok);
}

}  // namespace

DistanceMatrix parse_matrix(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty matrix file");
  int n = parse_int(lines[0], 1);
  if (n < 1) throw ParseError("line 1: matrix needs at least one taxon");
  if (static_cast<int>(lines.size()) != n + 2)
    throw ParseError("expected " + std::to_string(n + 2) + " lines, found " + std::to_string(lines.size()));
  auto taxa = split_tabs(lines[1]);
  if (static_cast<int>(taxa.size()) != n) throw ParseError("line 2: expected " + std::to_string(n) + " taxa");
  for (const auto& t : taxa)
    if (!valid_taxon_name(t)) throw ParseError("line 2: bad taxon name '" + t + "'");
  bool sl = lines[2].find(':') != std::string::npos;
  DistanceMatrix m;
  try {
    m = DistanceMatrix(taxa, sl);
  } catch (const InvalidMatrix& e) {
    throw InvalidMatrix(std::string("line 2: ") + e.what());
  }
  std::vector<int> dm(n * n), dl(n * n);
  for (int i = 0; i < n; ++i) {
    int lineno = i + 3;
    auto cells = split_tabs(lines[i + 2]);
    if (static_cast<int>(cells.size()) != n)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(n) + " cells");
    for (int j = 0; j < n; ++j) {
      const auto& c = cells[j];
      auto colon = c.find(':');
      if (sl != (colon != std::string::npos))
        throw ParseError("line " + std::to_string(lineno) + ": mixed cell kinds");
      if (sl) {
        dm[i * n + j] = parse_int(c.substr(0, colon), lineno);
        dl[i * n + j] = parse_int(c.substr(colon + 1), lineno);
      } else {
        dm[i * n + j] = parse_int(c, lineno);
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dm[i * n + j] != dm[j * n + i] || dl[i * n + j] != dl[j * n + i])
        throw InvalidMatrix("matrix is not symmetric at (" + taxa[i] + "," + taxa[j] + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, dm[i * n + j], dl[i * n + j]);
  m.check();
  return m;
}

std::string format_matrix(const DistanceMatrix& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "\t" : "") + m.taxa()[i];
  out += "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += "\t";
      out += std::to_string(m.shortest(i, j));
      if (m.has_longest()) out += ":" + std::to_string(m.longest(i, j));
    }
    out += "\n";
  }
  return out;
}

}  // namespace l2net
