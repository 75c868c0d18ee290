#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "l2net/errors.hpp"
#include "l2net/reconstruct.hpp"

namespace l2net {

namespace {

// A chain end is a slot of the generator: a multi-leaf chain has one slot at
// each end, a single leaf has two slots on the same leaf. Every slot is used
// by exactly one triple or bulb.
struct Slot {
  int chain;
  std::string leaf;
  bool operator<(const Slot& o) const { return std::tie(chain, leaf) < std::tie(o.chain, o.leaf); }
  bool operator==(const Slot& o) const = default;
};

struct Construct {
  bool bulb = false;
  GenSideTriple triple{};
  GenSideBulb b{};
  std::vector<Slot> uses;
};

std::vector<std::string> ends_of(const LeafChain& c) {
  if (c.size() == 1) return {c.front()};
  return {c.front(), c.back()};
}

// Calls `accept` on every grouping of chain ends until it returns true.
bool for_each_cover(const DistanceMatrix& m, const std::vector<LeafChain>& chains, const ChainAdjacency& adjacency,
                    const std::function<bool(const GenSideStructure&)>& accept) {
  const int q = static_cast<int>(chains.size());
  for (const auto& c : chains)
    if (c.cyclic) throw NotGenSideCovered("a cyclic chain leaves no generator vertex");

  std::vector<Construct> constructs;
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j)
      for (int k = j + 1; k < q; ++k)
        for (const auto& ei : ends_of(chains[i]))
          for (const auto& ej : ends_of(chains[j]))
            for (const auto& ek : ends_of(chains[k])) {
              if (m.shortest(ei, ej) != 4 || m.shortest(ej, ek) != 4 || m.shortest(ei, ek) != 4) continue;
              Construct c;
              c.triple = GenSideTriple{{i, j, k}, {ei, ej, ek}};
              c.uses = {{i, ei}, {j, ej}, {k, ek}};
              constructs.push_back(c);
            }
  for (int p = 0; p < q; ++p) {
    if (chains[p].size() < 2) continue;
    int partner = -1, neighbours = 0;
    for (int w = 0; w < q; ++w)
      if (w != p && adjacency.at(p, w) != Adjacency::None) {
        ++neighbours;
        partner = w;
      }
    if (neighbours != 1 || adjacency.at(p, partner) != Adjacency::Twice) continue;
    for (const auto& e : ends_of(chains[partner])) {
      if (m.shortest(e, chains[p].front()) != 4 || m.shortest(e, chains[p].back()) != 4) continue;
      Construct c;
      c.bulb = true;
      c.b = GenSideBulb{p, partner, e};
      c.uses = {{p, chains[p].front()}, {p, chains[p].back()}, {partner, e}};
      constructs.push_back(c);
    }
  }

  std::map<Slot, int> free;
  for (int i = 0; i < q; ++i) {
    if (chains[i].size() == 1) free[{i, chains[i].front()}] = 2;
    else {
      free[{i, chains[i].front()}] = 1;
      free[{i, chains[i].back()}] = 1;
    }
  }

  // Exact cover: take the first slot still open and try everything using it.
  std::vector<int> chosen;
  std::function<bool()> cover = [&]() {
    auto open = std::find_if(free.begin(), free.end(), [](const auto& kv) { return kv.second > 0; });
    if (open == free.end()) {
      GenSideStructure out;
      out.chains = chains;
      for (int c : chosen) {
        if (constructs[c].bulb) out.bulbs.push_back(constructs[c].b);
        else out.triples.push_back(constructs[c].triple);
      }
      return accept(out);
    }
    const Slot target = open->first;
    for (std::size_t c = 0; c < constructs.size(); ++c) {
      const auto& uses = constructs[c].uses;
      if (std::find(uses.begin(), uses.end(), target) == uses.end()) continue;
      std::map<Slot, int> need;
      for (const auto& s : uses) ++need[s];
      bool fits = std::all_of(need.begin(), need.end(), [&](const auto& kv) { return free[kv.first] >= kv.second; });
      if (!fits) continue;
      for (const auto& [s, k] : need) free[s] -= k;
      chosen.push_back(static_cast<int>(c));
      if (cover()) return true;
      chosen.pop_back();
      for (const auto& [s, k] : need) free[s] += k;
    }
    return false;
  };
  return cover();
}

}  // namespace

GenSideStructure extract_triples_and_bulbs(const DistanceMatrix& m, const std::vector<LeafChain>& chains,
                                           const ChainAdjacency& adjacency) {
  GenSideStructure found;
  if (!for_each_cover(m, chains, adjacency, [&](const GenSideStructure& s) {
        found = s;
        return true;
      }))
    throw NotGenSideCovered("chain ends cannot be grouped into generator vertices");
  return found;
}

GenSideStructure extract_triples_and_bulbs(const DistanceMatrix& m) {
  auto chains = chains_from_matrix(m);
  return extract_triples_and_bulbs(m, chains, chain_adjacency(m, chains));
}

namespace {

Network build_genside(const GenSideStructure& s) {
  Network net;
  std::map<std::string, VertexId> spine;
  for (const auto& c : s.chains) {
    VertexId prev = -1;
    for (const auto& t : c.leaves) {
      VertexId v = net.add_vertex(), leaf = net.add_vertex();
      net.add_edge(v, leaf);
      net.set_label(leaf, t);
      if (prev >= 0) net.add_edge(prev, v);
      spine[t] = v;
      prev = v;
    }
  }
  for (const auto& t : s.triples) {
    VertexId g = net.add_vertex();
    for (const auto& e : t.end) net.add_edge(g, spine.at(e));
  }
  for (const auto& b : s.bulbs) {
    VertexId g = net.add_vertex();
    net.add_edge(g, spine.at(s.chains[b.petal].front()));
    net.add_edge(g, spine.at(s.chains[b.petal].back()));
    net.add_edge(g, spine.at(b.partner_end));
  }
  return net;
}

}  // namespace

ReconstructionResult reconstruct_genside(const DistanceMatrix& input) {
  const DistanceMatrix m = input.shortest_only();
  ReconstructionResult r;
  r.outcome = ReconstructionResult::Outcome::Unrealizable;
  try {
    m.check();
    FreshNames names(m.taxa());
    DistanceMatrix cur = m;
    ReductionTrace trace;
    while (true) {
      auto cherries = find_cherries(cur);
      if (cherries.empty()) break;
      TraceStep step;
      step.kind = TraceStep::Kind::Cherry;
      step.x = cherries.front().first;
      step.y = cherries.front().second;
      step.z = names.next();
      cur = reduce_cherry(cur, step.x, step.y, step.z);
      trace.push_back(step);
    }
    auto accept = [&](const Network& base) {
      Network net = replay(base, trace);
      if (!is_valid(net) || shortest_matrix(net) != m) return false;
      r.outcome = ReconstructionResult::Outcome::Unique;
      r.networks = {net};
      r.trace = trace;
      return true;
    };
    std::vector<LeafChain> chains;
    try {
      chains = chains_from_matrix(cur);
    } catch (const Error&) {
    }
    bool has_cycle = std::any_of(chains.begin(), chains.end(), [](const LeafChain& c) { return c.cyclic; });
    if (!chains.empty() && !has_cycle &&
        for_each_cover(cur, chains, chain_adjacency(cur, chains),
                       [&](const GenSideStructure& s) { return accept(build_genside(s)); }))
      return r;
    // One edge or one cycle has no generator vertex.
    if (cur.size() <= 2 || has_cycle)
      for (const Network& b : reconstruct_single_blob(cur).networks)
        if (accept(b)) return r;
    r.reason = "generator built from the matrix does not realise it";
  } catch (const Error& e) {
    r.reason = e.kind() + ": " + e.what();
  }
  return r;
}

}  // namespace l2net
