#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace l2test {

using namespace l2net;

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(L2NET_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Network fixture(const std::string& name) { return parse_network(fixture_text(name)); }

bool literal_cut_split(const DistanceMatrix& m, const std::vector<std::string>& side) {
  std::set<std::string> in(side.begin(), side.end());
  std::vector<std::string> rest;
  for (const auto& t : m.taxa())
    if (!in.count(t)) rest.push_back(t);
  for (const auto& a : side)
    for (const auto& a2 : side)
      for (const auto& b : rest)
        for (const auto& b2 : rest) {
          int ab = m.shortest(a, b), a2b2 = m.shortest(a2, b2), ab2 = m.shortest(a, b2), a2b = m.shortest(a2, b);
          if (ab + a2b2 != ab2 + a2b) return false;
          if (m.shortest(a, a2) + m.shortest(b, b2) > ab + a2b2 - 2) return false;
        }
  return true;
}

Network replace_part_by_leaf(const Network& net, const std::vector<std::string>& taxa, const std::string& z) {
  std::set<std::string> want(taxa.begin(), taxa.end());
  // Try every edge: the side away from the rest must hold exactly `taxa`.
  for (const Edge& e : net.edges()) {
    for (int dir = 0; dir < 2; ++dir) {
      VertexId inside = dir ? e.u : e.v, outside = dir ? e.v : e.u;
      std::set<VertexId> seen{inside};
      std::vector<VertexId> stack{inside};
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : net.neighbors(v))
          if (!(v == inside && w == outside) && !seen.count(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
      }
      if (seen.count(outside)) break;  // not a cut-edge
      std::set<std::string> got;
      for (VertexId v : seen)
        if (auto l = net.label(v)) got.insert(*l);
      if (got != want) continue;
      Network out = net;
      for (VertexId v : seen) out.remove_vertex(v);
      VertexId leaf = out.add_vertex();
      out.add_edge(outside, leaf);
      out.set_label(leaf, z);
      return out;
    }
  }
  throw std::runtime_error("no cut-edge separates the given taxa");
}

Network scramble_ids(const Network& net, unsigned seed) {
  std::mt19937 rng(seed);
  auto vs = net.vertices();
  std::vector<VertexId> ids(vs.size());
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(1000 + 7 * i);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t i = 0; i < vs.size(); ++i) to[vs[i]] = ids[i];
  auto es = net.edges();
  std::shuffle(es.begin(), es.end(), rng);
  Network out;
  for (VertexId v : vs) out.add_vertex(to[v]);
  for (const Edge& e : es) out.add_edge(to[e.u], to[e.v]);
  for (const auto& [t, v] : net.leaves()) out.set_label(to[v], t);
  return out;
}

}  // namespace l2test
