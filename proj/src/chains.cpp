#include "l2net/chains.hpp"

#include <algorithm>
#include <map>

#include "l2net/errors.hpp"

namespace l2net {

std::vector<std::pair<std::string, std::string>> find_cherries(const DistanceMatrix& m) {
  std::vector<std::pair<std::string, std::string>> out;
  auto taxa = m.sorted_taxa();
  for (std::size_t i = 0; i < taxa.size(); ++i)
    for (std::size_t j = i + 1; j < taxa.size(); ++j)
      if (m.shortest(taxa[i], taxa[j]) == 2) out.push_back({taxa[i], taxa[j]});
  return out;
}

DistanceMatrix reduce_cherry(const DistanceMatrix& m, const std::string& x, const std::string& y,
                             const std::string& z) {
  if (x == y || m.shortest(x, y) != 2) throw NotACherry(x + "," + y + " is not a cherry");
  if (m.contains(z)) throw TaxonCollision("taxon '" + z + "' already present");
  DistanceMatrix out = m.without({x, y}).with_taxon(z);
  int zi = out.index(z);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const std::string& a = out.taxa()[i];
    int dl = m.has_longest() ? m.longest(a, x) - 1 : 0;
    out.set(i, zi, m.shortest(a, x) - 1, dl);
  }
  return out;
}

DistanceMatrix expand_cherry(const DistanceMatrix& m, const std::string& z, const std::string& x,
                             const std::string& y) {
  m.index(z);
  if (x == y) throw TaxonCollision("cherry needs two distinct names");
  for (const auto& t : {x, y})
    if (m.contains(t) && t != z) throw TaxonCollision("taxon '" + t + "' already present");
  DistanceMatrix out = m.without({z}).with_taxon(x).with_taxon(y);
  int xi = out.index(x), yi = out.index(y);
  for (std::size_t i = 0; i + 2 < out.size(); ++i) {
    const std::string& a = out.taxa()[i];
    int dm = m.shortest(a, z) + 1;
    int dl = m.has_longest() ? m.longest(a, z) + 1 : 0;
    out.set(i, xi, dm, dl);
    out.set(i, yi, dm, dl);
  }
  out.set(xi, yi, 2, m.has_longest() ? 2 : 0);
  return out;
}

std::vector<LeafChain> chains_from_matrix(const DistanceMatrix& m) {
  auto taxa = m.sorted_taxa();
  const std::size_t n = taxa.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int d = m.shortest(taxa[i], taxa[j]);
      if (d == 2) throw CherriesPresent(taxa[i] + "," + taxa[j] + " form a cherry");
      if (d == 3) {
        adj[i].push_back(static_cast<int>(j));
        adj[j].push_back(static_cast<int>(i));
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (adj[i].size() > 2) throw InvalidMatrix("taxon '" + taxa[i] + "' has three neighbours at distance 3");

  std::vector<char> seen(n, 0);
  std::vector<LeafChain> out;
  auto walk = [&](int start, int first) {
    LeafChain c;
    int prev = -1, cur = start;
    while (cur >= 0 && !seen[cur]) {
      seen[cur] = 1;
      c.leaves.push_back(taxa[cur]);
      int next = -1;
      if (prev < 0) next = first;
      else
        for (int w : adj[cur])
          if (w != prev) next = w;
      prev = cur;
      cur = next;
    }
    return c;
  };
  // Paths first, from their smaller end (taxa are sorted, so scanning in
  // order meets the smaller end first).
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i] && adj[i].size() <= 1) out.push_back(walk(static_cast<int>(i), adj[i].empty() ? -1 : adj[i][0]));
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) {
      LeafChain c = walk(static_cast<int>(i), std::min(adj[i][0], adj[i][1]));
      c.cyclic = true;
      out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end(), [](const LeafChain& a, const LeafChain& b) { return a.front() < b.front(); });
  return out;
}

ChainAdjacency chain_adjacency(const DistanceMatrix& m, const std::vector<LeafChain>& chains) {
  ChainAdjacency adj;
  adj.count = chains.size();
  adj.kind.assign(adj.count * adj.count, Adjacency::None);
  adj.witnesses.assign(adj.count * adj.count, {});
  auto ends = [](const LeafChain& c) {
    std::vector<std::string> e;
    if (c.cyclic) return e;
    e.push_back(c.front());
    if (c.size() > 1) e.push_back(c.back());
    return e;
  };
  for (std::size_t i = 0; i < adj.count; ++i)
    for (std::size_t j = 0; j < adj.count; ++j) {
      if (i == j) continue;
      auto& w = adj.witnesses[i * adj.count + j];
      for (const auto& x : ends(chains[i]))
        for (const auto& y : ends(chains[j]))
          if (m.shortest(x, y) == 4) w.push_back({x, y});
      adj.kind[i * adj.count + j] = w.empty() ? Adjacency::None : w.size() == 1 ? Adjacency::Once : Adjacency::Twice;
    }
  return adj;
}

int chain_shortest(const DistanceMatrix& m, const std::vector<std::string>& chain, const std::string& x) {
  int best = -1;
  for (const auto& a : chain) {
    int d = m.shortest(a, x);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

int chain_longest(const DistanceMatrix& m, const std::vector<std::string>& chain, const std::string& x) {
  int best = -1;
  for (const auto& a : chain) best = std::max(best, m.longest(a, x));
  return best;
}

FreshNames::FreshNames(const std::vector<std::string>& taken) { reserve(taken); }

void FreshNames::reserve(const std::vector<std::string>& taken) { taken_.insert(taken.begin(), taken.end()); }

std::string FreshNames::next() {
  while (true) {
    std::string name = "_z" + std::to_string(++counter_);
    if (taken_.insert(name).second) return name;
  }
}

}  // namespace l2net
