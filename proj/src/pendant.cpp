#include "l2net/pendant.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>

#include "l2net/chains.hpp"
#include "l2net/errors.hpp"

namespace l2net {

namespace {

const char* const kAttachLabel = "~u";

// Builds the blob of `form` into `net`, using `u` as the attachment vertex.
void build_blob(Network& net, VertexId u, const PendantForm& form) {
  auto spine = [&](const Chain& chain) {
    std::vector<VertexId> vs;
    for (const auto& taxon : chain) {
      VertexId s = net.add_vertex();
      VertexId leaf = net.add_vertex();
      net.add_edge(s, leaf);
      net.set_label(leaf, taxon);
      vs.push_back(s);
    }
    return vs;
  };
  auto link = [&](VertexId from, const std::vector<VertexId>& path, VertexId to) {
    VertexId prev = from;
    for (VertexId v : path) {
      net.add_edge(prev, v);
      prev = v;
    }
    net.add_edge(prev, to);
  };
  if (form.kind == PendantForm::Kind::Level1) {
    link(u, spine(form.a), u);
    return;
  }
  VertexId p = net.add_vertex();
  VertexId q = net.add_vertex();
  link(p, spine(form.a), q);
  link(p, spine(form.b), q);
  link(p, spine(form.c), u);
  link(u, spine(form.d), q);
}

struct PartChains {
  std::vector<LeafChain> chains;
  bool ok = false;
};

// The chains that make up `part`; not ok when some chain straddles it.
PartChains chains_of_part(const DistanceMatrix& m, const std::vector<std::string>& part) {
  PartChains out;
  std::set<std::string> in(part.begin(), part.end());
  if (in.size() != part.size()) return out;
  for (const auto& t : part)
    if (!m.contains(t)) throw UnknownLeaf("no taxon '" + t + "' in matrix");
  std::size_t covered = 0;
  for (const LeafChain& c : chains_from_matrix(m)) {
    std::size_t inside = std::count_if(c.leaves.begin(), c.leaves.end(), [&](const auto& t) { return in.count(t); });
    if (inside == 0) continue;
    if (inside != c.size() || c.cyclic) return out;
    out.chains.push_back(c);
    covered += inside;
  }
  out.ok = covered == part.size();
  return out;
}

bool consistent(const DistanceMatrix& m, const std::vector<std::string>& part, const PendantForm& form,
                bool use_longest) {
  FormGeometry g = form_geometry(form);
  for (std::size_t i = 0; i < part.size(); ++i)
    for (std::size_t j = i + 1; j < part.size(); ++j) {
      if (m.shortest(part[i], part[j]) != g.internal.shortest(part[i], part[j])) return false;
      if (use_longest && m.longest(part[i], part[j]) != g.internal.longest(part[i], part[j])) return false;
    }
  std::set<std::string> in(part.begin(), part.end());
  for (const auto& x : m.taxa()) {
    if (in.count(x)) continue;
    int dm = m.shortest(x, part[0]) - g.shortest_from_u.at(part[0]);
    int dl = use_longest ? m.longest(x, part[0]) - g.longest_from_u.at(part[0]) : 0;
    if (dm < 1 || (use_longest && dl < dm)) return false;
    for (const auto& a : part) {
      if (m.shortest(x, a) - g.shortest_from_u.at(a) != dm) return false;
      if (use_longest && m.longest(x, a) - g.longest_from_u.at(a) != dl) return false;
    }
  }
  return true;
}

Chain reversed(Chain c) {
  std::reverse(c.begin(), c.end());
  return c;
}

// All orientations of `roles` (a, b, c, d) as distinct canonical forms.
std::vector<PendantForm> orientations(const std::vector<Chain>& roles) {
  std::set<std::string> seen;
  std::vector<PendantForm> out;
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Chain> r = roles;
    for (int k = 0; k < 4; ++k)
      if (mask >> k & 1) r[k] = reversed(r[k]);
    PendantForm f = PendantForm::level2(r[0], r[1], r[2], r[3]);
    if (!f.well_formed()) continue;
    f = f.canonical();
    if (seen.insert(f.to_string()).second) out.push_back(f);
  }
  return out;
}

}  // namespace

Network form_network(const PendantForm& form, const std::string& z) {
  Network net;
  VertexId u = net.add_vertex();
  VertexId leaf = net.add_vertex();
  net.add_edge(u, leaf);
  net.set_label(leaf, z);
  build_blob(net, u, form);
  return net;
}

FormGeometry form_geometry(const PendantForm& form) {
  DistanceMatrix sl = sl_matrix(form_network(form, kAttachLabel));
  FormGeometry g;
  for (const auto& t : form.leaves()) {
    g.shortest_from_u[t] = sl.shortest(t, kAttachLabel) - 1;
    g.longest_from_u[t] = sl.longest(t, kAttachLabel) - 1;
  }
  g.internal = sl.without({kAttachLabel});
  return g;
}

std::vector<PendantForm> pendant_candidates(const DistanceMatrix& m, const std::vector<std::string>& part,
                                            bool use_longest) {
  use_longest = use_longest && m.has_longest();
  PartChains pc = chains_of_part(m, part);
  std::vector<PendantForm> out;
  if (!pc.ok || pc.chains.empty() || pc.chains.size() > 4 || part.size() == m.size()) return out;

  std::vector<PendantForm> layouts;
  std::set<std::string> seen;
  auto add = [&](PendantForm f) {
    if (!f.well_formed()) return;
    f = f.canonical();
    if (seen.insert(f.to_string()).second) layouts.push_back(f);
  };
  const std::size_t q = pc.chains.size();
  if (q == 1) add(PendantForm::level1(pc.chains[0].leaves));
  // Injective placement of the chains into the four slots.
  std::vector<int> slot(q, 0);
  std::function<void(std::size_t, int)> place = [&](std::size_t i, int used) {
    if (i == q) {
      std::vector<Chain> roles(4);
      for (std::size_t k = 0; k < q; ++k) roles[slot[k]] = pc.chains[k].leaves;
      for (const auto& f : orientations(roles)) add(f);
      return;
    }
    for (int s = 0; s < 4; ++s)
      if (!(used >> s & 1)) {
        slot[i] = s;
        place(i + 1, used | 1 << s);
      }
  };
  place(0, 0);

  std::vector<std::string> sorted_part = part;
  std::sort(sorted_part.begin(), sorted_part.end());
  for (const auto& f : layouts)
    if (consistent(m, sorted_part, f, use_longest)) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const PendantForm& x, const PendantForm& y) {
    return x.to_string() < y.to_string();
  });
  return out;
}

PendantForm identify_pendant(const DistanceMatrix& m, const std::vector<std::string>& part) {
  if (!m.has_longest()) throw NoConsistentForm("identification needs longest distances");
  PartChains pc = chains_of_part(m, part);
  if (!pc.ok || pc.chains.empty() || pc.chains.size() > 4 || part.size() == m.size())
    throw NoConsistentForm("part is not a union of one to four chains");
  std::set<std::string> in(part.begin(), part.end());
  std::string x;
  for (const auto& t : m.sorted_taxa())
    if (!in.count(t)) {
      x = t;
      break;
    }
  const auto& ch = pc.chains;
  auto dist = [&](std::size_t i) { return chain_shortest(m, ch[i].leaves, x); };

  std::vector<PendantForm> layouts;
  if (ch.size() == 1) {
    const Chain& a = ch[0].leaves;
    const std::size_t k = a.size();
    int dm = k > 1 ? m.shortest(a.front(), a.back()) : 0;
    int dl = k > 1 ? m.longest(a.front(), a.back()) : 0;
    bool cycle = false, theta = false;
    if (k >= 4) {
      cycle = dm == 4;
      theta = dm == 5;
    } else if (k >= 2 && dm == static_cast<int>(k) + 1) {
      cycle = dl == 4;
      theta = dl == 6;
    }
    if (cycle) layouts.push_back(PendantForm::level1(a).canonical());
    if (theta) layouts = orientations({a, {}, {}, {}});
  } else if (ch.size() == 2) {
    int d0 = dist(0), d1 = dist(1);
    if (d0 == d1) layouts = orientations({ch[0].leaves, ch[1].leaves, {}, {}});
    else if (d0 == d1 + 1) layouts = orientations({ch[0].leaves, {}, ch[1].leaves, {}});
    else if (d1 == d0 + 1) layouts = orientations({ch[1].leaves, {}, ch[0].leaves, {}});
  } else if (ch.size() == 3) {
    int d[3] = {dist(0), dist(1), dist(2)};
    for (int odd = 0; odd < 3; ++odd) {
      int i = (odd + 1) % 3, j = (odd + 2) % 3;
      if (d[i] != d[j] || d[odd] == d[i]) continue;
      if (d[odd] + 1 == d[i]) layouts = orientations({ch[i].leaves, ch[j].leaves, ch[odd].leaves, {}});
      else if (d[odd] > d[i]) layouts = orientations({ch[odd].leaves, {}, ch[i].leaves, ch[j].leaves});
    }
  } else {
    std::vector<std::size_t> order{0, 1, 2, 3};
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return dist(i) < dist(j); });
    auto [c, d, a, b] = std::tuple(order[0], order[1], order[2], order[3]);
    ChainAdjacency adj = chain_adjacency(m, ch);
    auto linked = [&](std::size_t i, std::size_t j) { return adj.at(i, j) != Adjacency::None; };
    bool triples = linked(a, b) && linked(a, c) && linked(b, c) && linked(a, d) && linked(b, d);
    if (dist(c) == dist(d) && dist(a) == dist(b) && dist(a) > dist(c) && triples)
      layouts = orientations({ch[a].leaves, ch[b].leaves, ch[c].leaves, ch[d].leaves});
  }

  std::vector<std::string> sorted_part = part;
  std::sort(sorted_part.begin(), sorted_part.end());
  std::vector<PendantForm> ok;
  for (const auto& f : layouts)
    if (consistent(m, sorted_part, f, true)) ok.push_back(f);
  if (ok.size() != 1)
    throw NoConsistentForm(std::to_string(ok.size()) + " layouts fit part " + chain_to_string(sorted_part));
  return ok[0];
}

BlobReduction reduce_pendant(const DistanceMatrix& m, const PendantForm& form_in, const std::string& z) {
  if (m.contains(z)) throw TaxonCollision("taxon '" + z + "' already present");
  const PendantForm form = form_in.canonical();
  const int k = form.a.size(), l = form.b.size(), mm = form.c.size(), n = form.d.size();
  int dm_off = 0, dl_off = 0;
  const Chain* anchor = &form.a;
  std::string anchor_name = "a";
  std::string s = form.shape();
  if (s == "L1") {
    dm_off = 2;
    dl_off = k + 1;
  } else if (s == "(a,0,0,0)") {
    dm_off = 3;
    dl_off = k + 3;
  } else if (s == "(a,b,0,0)") {
    dm_off = 3;
    dl_off = k + l + 3;
  } else {
    anchor = &form.c;
    anchor_name = "c";
    dm_off = 2;
    if (s == "(a,0,c,0)") dl_off = k + mm + 3;
    else if (s == "(a,b,c,0)") dl_off = std::max(k, l) + mm + 3;
    else if (s == "(a,0,c,d)") dl_off = k + mm + n + 3;
    else dl_off = std::max(k, l) + mm + n + 3;
  }
  auto leaves = form.leaves();
  for (const auto& t : leaves) m.index(t);
  DistanceMatrix out = m.without(leaves).with_taxon(z);
  int zi = out.index(z);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const std::string& p = out.taxa()[i];
    int dm = chain_shortest(m, *anchor, p) - dm_off;
    int dl = m.has_longest() ? chain_longest(m, *anchor, p) - dl_off : 0;
    out.set(i, zi, dm, dl);
  }
  return {out, z, form, anchor_name};
}

DistanceMatrix reduce_by_geometry(const DistanceMatrix& m, const PendantForm& form, const std::string& z) {
  if (m.contains(z)) throw TaxonCollision("taxon '" + z + "' already present");
  FormGeometry g = form_geometry(form);
  auto leaves = form.leaves();
  const std::string& a = leaves.front();
  DistanceMatrix out = m.without(leaves).with_taxon(z);
  int zi = out.index(z);
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    const std::string& p = out.taxa()[i];
    int dl = m.has_longest() ? m.longest(p, a) - g.longest_from_u.at(a) : 0;
    out.set(i, zi, m.shortest(p, a) - g.shortest_from_u.at(a), dl);
  }
  return out;
}

Network expand_pendant(const Network& net, const std::string& z, const PendantForm& form) {
  VertexId u = net.leaf(z);
  Network out = net;
  out.clear_label(u);
  for (const auto& t : form.leaves())
    if (out.has_taxon(t)) throw TaxonCollision("taxon '" + t + "' already present");
  build_blob(out, u, form);
  return out;
}

bool is_bad_form(const PendantForm& form) {
  const std::size_t k = form.a.size();
  if (k != 2 && k != 3) return false;
  if (form.kind == PendantForm::Kind::Level1) return true;
  return form.b.empty() && form.c.empty() && form.d.empty();
}

DistanceMatrix drop_middle_of_bad_triple(const DistanceMatrix& m, const std::string& a1, const std::string& a2,
                                         const std::string& a3) {
  if (m.shortest(a1, a2) != 3 || m.shortest(a2, a3) != 3 || m.shortest(a1, a3) != 4)
    throw NoConsistentForm("(" + a1 + "," + a2 + "," + a3 + ") is not a bad chain of three");
  // Longest distances from outside change when a2 goes, so only the
  // shortest part survives.
  DistanceMatrix out = m.shortest_only().without({a2});
  out.set_shortest(out.index(a1), out.index(a3), 3);
  return out;
}

}  // namespace l2net
