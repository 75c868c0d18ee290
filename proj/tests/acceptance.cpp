// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "l2net/altpath.hpp"
#include "l2net/blobs.hpp"
#include "l2net/metrics.hpp"
#include "l2net/reconstruct.hpp"
#include "l2net/splits.hpp"
#include "l2net/testkit.hpp"
#include "support.hpp"

using namespace l2net;
using Outcome = ReconstructionResult::Outcome;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fig3_golden() {
  DistanceMatrix got = sl_matrix(l2test::fixture("figure3.net"));
  DistanceMatrix want = parse_matrix(l2test::fixture_text("figure3_sl.tsv"));
  int cells = 0, bad = 0;
  for (std::size_t i = 0; i < want.size(); ++i)
    for (std::size_t j = i + 1; j < want.size(); ++j) {
      const auto &x = want.taxa()[i], &y = want.taxa()[j];
      ++cells;
      if (got.shortest(x, y) != want.shortest(i, j) || got.longest(x, y) != want.longest(i, j)) ++bad;
    }
  return {cells == 28 && bad == 0, std::to_string(cells - bad) + "/" + std::to_string(cells) + " cells"};
}

Verdict fig1_ambiguity() {
  Network left = l2test::fixture("figure1_left.net"), right = l2test::fixture("figure1_right.net");
  DistanceMatrix m = shortest_matrix(left);
  if (!(m == shortest_matrix(right))) return {false, "shortest matrices differ"};
  if (longest_matrix(left) == longest_matrix(right)) return {false, "longest matrices agree"};
  ReconstructionResult r = reconstruct_shortest(m);
  if (r.outcome != Outcome::Ambiguous || r.networks.size() != 2)
    return {false, outcome_name(r.outcome) + " with " + std::to_string(r.networks.size()) + " survivors"};
  if (is_isomorphic(r.networks[0], r.networks[1])) return {false, "survivors are isomorphic"};
  for (const auto& n : r.networks)
    if (!(shortest_matrix(n) == m)) return {false, "a survivor does not realise the matrix"};
  return {true, "Ambiguous, 2 survivors"};
}

Verdict roundtrips(int count, RoundTripMode mode, GenParams base, bool require_unique) {
  int ok = 0;
  std::string first_fail;
  for (int k = 0; k < count; ++k) {
    GenParams p = base;
    p.seed = base.seed + k;
    RoundTripReport r = verify_roundtrip(random_network(p), mode);
    bool good = r.pass && (!require_unique || r.outcome == Outcome::Unique);
    if (good) ++ok;
    else if (first_fail.empty()) first_fail = " (seed " + std::to_string(p.seed) + ": " + r.message + ")";
  }
  return {ok == count, std::to_string(ok) + "/" + std::to_string(count) + first_fail};
}

Verdict sl_roundtrip() {
  GenParams p;
  p.min_leaves = 5;
  p.max_leaves = 20;
  p.seed = 1000;
  return roundtrips(500, RoundTripMode::Sl, p, true);
}

Verdict shortest_roundtrip() {
  GenParams p;
  p.allow_bad_blobs = false;
  p.seed = 2000;
  return roundtrips(300, RoundTripMode::Shortest, p, true);
}

Verdict split_equivalence() {
  int ok = 0;
  for (int k = 0; k < 300; ++k) {
    GenParams p;
    p.seed = 3000 + k;
    p.max_leaves = 16;
    p.min_leaves = 4;
    Network net = random_network(p);
    if (all_splits(shortest_matrix(net)) == cut_edge_splits(net)) ++ok;
  }
  // Figure 6 is level 3: the conditions hold for {a,ap} though no cut-edge
  // induces it.
  Network f6 = l2test::fixture("figure6.net");
  DistanceMatrix m6 = shortest_matrix(f6);
  bool documented = cut_edge_splits(f6).empty() && is_cut_split(m6, {"a", "ap"});
  return {ok == 300 && documented,
          std::to_string(ok) + "/300, figure 6 " + (documented ? "split without cut-edge" : "unexpected")};
}

Verdict longest_oracle() {
  int ok = 0, tried = 0;
  for (std::uint64_t seed = 4000; tried < 200; ++seed) {
    GenParams p;
    p.seed = seed;
    p.max_leaves = 16;
    Network net = random_network(p);
    if (net.vertex_count() > 50) continue;
    ++tried;
    if (longest_matrix(net) == brute_force_longest(net, 50)) ++ok;
  }
  return {ok == 200, std::to_string(ok) + "/200"};
}

Verdict altpath_soundness() {
  int trees_ok = 0;
  for (int k = 0; k < 100; ++k) {
    ColoredTree t = random_colored_tree(2 + k % 7, 5000 + k);
    Network a = build_altpath(t), b = build_altpath(similar(t));
    if (shortest_matrix(a) == shortest_matrix(b) && !(longest_matrix(a) == longest_matrix(b))) ++trees_ok;
  }
  int agree = 0, with_alt = 0;
  for (int k = 0; k < 200; ++k) {
    GenParams p;
    p.seed = 6000 + k;
    p.max_chain = 2;
    p.max_leaves = 14;
    p.min_blobs = 2;
    p.bad_blob_rate = 0.7;
    Network net = random_network(p);
    bool recon = is_shortest_reconstructible(net);
    if (!recon) ++with_alt;
    if (recon == (reconstruct_shortest(shortest_matrix(net)).outcome == Outcome::Unique)) ++agree;
  }
  return {trees_ok == 100 && agree == 200, "trees " + std::to_string(trees_ok) + "/100, networks " +
                                               std::to_string(agree) + "/200 (" + std::to_string(with_alt) +
                                               " with an alt-path)"};
}

Verdict genside_roundtrip() {
  GenParams p;
  p.require_leaf_every_side = true;
  p.max_level = 3;
  p.seed = 7000;
  int ok = 0;
  std::set<int> levels;
  for (int k = 0; k < 200; ++k) {
    p.seed = 7000 + k;
    Network net = random_network(p);
    levels.insert(level(net));
    ReconstructionResult r = reconstruct_genside(shortest_matrix(net));
    if (r.outcome == Outcome::Unique && is_isomorphic(r.networks[0], net)) ++ok;
  }
  GenSideStructure g = extract_triples_and_bulbs(shortest_matrix(l2test::fixture("figure4.net")));
  auto letter = [&](int c) { return g.chains[c].leaves.front()[0]; };
  std::set<std::string> triples;
  for (const auto& t : g.triples) {
    std::string s{letter(t.chain[0]), letter(t.chain[1]), letter(t.chain[2])};
    std::sort(s.begin(), s.end());
    triples.insert(s);
  }
  bool fig4 = triples == std::set<std::string>{"abf", "acd", "bce", "deg", "fgh"} && g.bulbs.size() == 1 &&
              letter(g.bulbs[0].petal) == 'i' && letter(g.bulbs[0].partner) == 'h';
  return {ok == 200 && fig4 && levels == std::set<int>{1, 2, 3},
          std::to_string(ok) + "/200, levels " + std::to_string(levels.size()) + "/3, figure 4 " +
              (fig4 ? "triples and bulb match" : "mismatch")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Verdict()> run;
  };
  const Criterion criteria[] = {
      {"figure 3 golden sl matrix", 1, fig3_golden},
      {"figure 1 shortest-distance ambiguity", 5, fig1_ambiguity},
      {"sl round trip, 500 networks", 300, sl_roundtrip},
      {"shortest round trip without bad blobs, 300 networks", 180, shortest_roundtrip},
      {"split finder equals cut-edge splits, 300 networks", 180, split_equivalence},
      {"longest-path DP equals brute force, 200 networks", 180, longest_oracle},
      {"alt-path soundness", 300, altpath_soundness},
      {"generator-side round trip, 200 networks", 180, genside_roundtrip},
  };
  bool all = true;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) {
      v.pass = false;
      v.detail += ", over time budget";
    }
    all = all && v.pass;
    std::printf("%s %d %s: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", n, c.name, v.detail.c_str(), secs);
  }
  return all ? 0 : 1;
}
