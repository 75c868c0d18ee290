#include "l2net/splits.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <set>

#include "l2net/chains.hpp"
#include "l2net/errors.hpp"
#include "l2net/pendant.hpp"

namespace l2net {

namespace {

// Condition (i) makes d(a,b) = f(a) + g(b); condition (ii) then separates
// into one maximum per side, so the test costs O(|A||B| + |A|^2 + |B|^2).
bool cut_split_indices(const DistanceMatrix& m, const std::vector<int>& A, const std::vector<int>& B) {
  const int a0 = A[0], b0 = B[0];
  const int base = m.shortest(a0, b0);
  for (int a : A) {
    const int fa = m.shortest(a, b0);
    for (int b : B)
      if (m.shortest(a, b) != fa + m.shortest(a0, b) - base) return false;
  }
  int worst_a = INT_MIN, worst_b = INT_MIN;
  for (int a : A)
    for (int a2 : A) worst_a = std::max(worst_a, m.shortest(a, a2) - m.shortest(a, b0) - m.shortest(a2, b0));
  for (int b : B)
    for (int b2 : B) {
      int gb = m.shortest(a0, b) - base, gb2 = m.shortest(a0, b2) - base;
      worst_b = std::max(worst_b, m.shortest(b, b2) - gb - gb2);
    }
  return worst_a + worst_b <= -2;
}

void split_indices(const DistanceMatrix& m, const std::vector<std::string>& side, std::vector<int>& A,
                   std::vector<int>& B) {
  std::vector<char> in(m.size(), 0);
  for (const auto& t : side) in[m.index(t)] = 1;
  for (std::size_t i = 0; i < m.size(); ++i) (in[i] ? A : B).push_back(static_cast<int>(i));
}

std::vector<Split> exhaustive(const DistanceMatrix& m, std::size_t limit) {
  const std::size_t n = m.size();
  if (n > limit)
    throw TooLargeForExhaustive(std::to_string(n) + " taxa exceed the exhaustive limit of " + std::to_string(limit));
  std::vector<Split> out;
  if (n < 4) return out;
  auto taxa = m.sorted_taxa();
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = m.index(taxa[i]);
  // Subsets of taxa[1..] joined with taxa[0].
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<int> A{idx[0]}, B;
    for (std::size_t i = 1; i < n; ++i) (mask >> (i - 1) & 1 ? A : B).push_back(idx[i]);
    if (A.size() < 2 || B.size() < 2) continue;
    if (!cut_split_indices(m, A, B)) continue;
    std::vector<std::string> side;
    for (int i : A) side.push_back(m.taxa()[i]);
    out.push_back(make_split(side, taxa));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reduce the matrix step by step, tracking which original taxa each current
// taxon stands for. Every cut-edge becomes a pendant edge at some point of
// the reduction, so the member sets seen along the way include every split
// side; each is confirmed against the original matrix.
std::vector<Split> structured(const DistanceMatrix& original) {
  auto taxa = original.sorted_taxa();
  std::set<Split> found;
  std::set<std::vector<std::string>> tried;
  int budget = 4096;
  FreshNames names(taxa);

  auto record = [&](std::vector<std::string> side) {
    std::sort(side.begin(), side.end());
    if (side.size() < 2 || side.size() + 2 > taxa.size()) return;
    if (!tried.insert(side).second) return;
    if (is_cut_split(original, side)) found.insert(make_split(side, taxa));
  };

  using Members = std::map<std::string, std::vector<std::string>>;
  std::function<void(DistanceMatrix, Members)> explore = [&](DistanceMatrix m, Members members) {
    if (--budget < 0) throw BranchBudgetExceeded("structured split search exceeded its branch budget");
    while (true) {
      auto cherries = find_cherries(m);
      if (cherries.empty()) break;
      auto [x, y] = cherries.front();
      std::string z = names.next();
      m = reduce_cherry(m, x, y, z);
      auto& mz = members[z];
      mz = members[x];
      mz.insert(mz.end(), members[y].begin(), members[y].end());
      members.erase(x);
      members.erase(y);
      record(mz);
    }
    if (m.size() < 4) return;
    std::vector<std::vector<std::string>> parts;
    try {
      parts = minimal_parts(m);
    } catch (const NoNontrivialSplit&) {
      return;
    }
    const auto& part = parts.front();
    std::set<std::string> seen_reductions;
    for (const PendantForm& form : pendant_candidates(m, part, true)) {
      std::string z = names.next();
      BlobReduction red = reduce_pendant(m, form, z);
      std::string key = format_matrix(red.matrix.without({z})) + "|";
      for (const auto& t : red.matrix.taxa())
        if (t != z) key += std::to_string(red.matrix.shortest(t, z)) + ":" + std::to_string(red.matrix.longest(t, z)) + ",";
      if (!seen_reductions.insert(key).second) continue;
      Members next = members;
      auto& mz = next[z];
      for (const auto& t : part) {
        mz.insert(mz.end(), next[t].begin(), next[t].end());
        next.erase(t);
      }
      record(mz);
      // A wrong shape guess can leave a matrix no network realises; that
      // only ends this branch.
      try {
        explore(red.matrix, next);
      } catch (const BranchBudgetExceeded&) {
        throw;
      } catch (const Error&) {
      }
    }
  };

  Members members;
  for (const auto& t : taxa) members[t] = {t};
  explore(original, members);
  return {found.begin(), found.end()};
}

}  // namespace

bool is_cut_split(const DistanceMatrix& m, const std::vector<std::string>& side) {
  std::vector<int> A, B;
  split_indices(m, side, A, B);
  if (A.empty() || B.empty()) throw EmptySide("both sides of a split must be non-empty");
  return cut_split_indices(m, A, B);
}

std::vector<Split> all_splits(const DistanceMatrix& m, SplitSearch mode, std::size_t exhaustive_limit) {
  switch (mode) {
    case SplitSearch::Exhaustive:
      return exhaustive(m, exhaustive_limit);
    case SplitSearch::Structured:
      return structured(m);
    case SplitSearch::Auto:
      break;
  }
  try {
    return structured(m);
  } catch (const Error&) {
    if (m.size() > exhaustive_limit) throw;
    return exhaustive(m, exhaustive_limit);
  }
}

std::vector<std::vector<std::string>> minimal_parts(const DistanceMatrix& m) {
  auto chains = chains_from_matrix(m);
  ChainAdjacency adj = chain_adjacency(m, chains);
  const std::size_t q = chains.size();

  // Connected sets of at most four chains in the adjacency graph.
  std::set<std::vector<int>> subsets;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> cur) {
    std::sort(cur.begin(), cur.end());
    if (!subsets.insert(cur).second || cur.size() == 4) return;
    for (int c : cur)
      for (std::size_t w = 0; w < q; ++w)
        if (adj.at(c, w) != Adjacency::None && std::find(cur.begin(), cur.end(), static_cast<int>(w)) == cur.end()) {
          auto next = cur;
          next.push_back(static_cast<int>(w));
          grow(next);
        }
  };
  for (std::size_t c = 0; c < q; ++c) grow({static_cast<int>(c)});

  std::vector<std::vector<std::string>> parts;
  for (const auto& s : subsets) {
    std::vector<std::string> side;
    for (int c : s) side.insert(side.end(), chains[c].leaves.begin(), chains[c].leaves.end());
    if (side.size() < 2 || side.size() + 2 > m.size()) continue;
    std::sort(side.begin(), side.end());
    if (is_cut_split(m, side)) parts.push_back(side);
  }
  std::vector<std::vector<std::string>> minimal;
  for (const auto& p : parts) {
    bool has_smaller = std::any_of(parts.begin(), parts.end(), [&](const auto& o) {
      return o.size() < p.size() && std::includes(p.begin(), p.end(), o.begin(), o.end());
    });
    if (!has_smaller) minimal.push_back(p);
  }
  if (minimal.empty()) throw NoNontrivialSplit("no non-trivial split");
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

}  // namespace l2net
