#include <doctest.h>

#include <algorithm>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/pendant.hpp"
#include "l2net/splits.hpp"
#include "l2net/testkit.hpp"
#include "support.hpp"

using namespace l2net;

namespace {

std::vector<PendantForm> sample_forms() {
  return {
      PendantForm::level1({"a1", "a2", "a3"}),
      PendantForm::level2({"a1", "a2"}, {}, {}, {}),
      PendantForm::level2({"a1"}, {"b1", "b2"}, {}, {}),
      PendantForm::level2({"a1", "a2"}, {}, {"c1"}, {}),
      PendantForm::level2({"a1"}, {"b1"}, {"c1", "c2"}, {}),
      PendantForm::level2({"a1"}, {}, {"c1"}, {"d1", "d2"}),
      PendantForm::level2({"a1", "a2"}, {"b1"}, {"c1"}, {"d1"}),
  };
}

// A network made of `form` hanging off a cherry-tree core with leaves x, y, w.
Network host(const PendantForm& form) {
  Network net = form_network(form, "zz");
  VertexId z = net.leaf("zz");
  net.clear_label(z);
  VertexId s = net.add_vertex();
  net.add_edge(z, s);
  for (const char* t : {"x", "y"}) {
    VertexId l = net.add_vertex();
    net.add_edge(s, l);
    net.set_label(l, t);
  }
  return net;
}

// After peeling cherries, each pendant blob with its true form and leaves.
struct Peeled {
  Network net;
  DistanceMatrix m;
};
Peeled peel(Network net) {
  DistanceMatrix m = sl_matrix(net);
  int k = 0;
  while (!find_cherries(m).empty()) {
    auto [x, y] = find_cherries(m).front();
    std::string z = "q" + std::to_string(k++);
    m = reduce_cherry(m, x, y, z);
    net = l2test::replace_part_by_leaf(net, {x, y}, z);
  }
  return {net, m};
}

}  // namespace

TEST_CASE("form networks") {
  for (const auto& f : sample_forms()) {
    Network net = form_network(f, "z");
    CHECK(is_valid(net));
    CHECK(net.taxa().size() == f.leaf_count() + 1);
    FormGeometry g = form_geometry(f);
    CHECK(g.internal.size() == f.leaf_count());
    CHECK(g.shortest_from_u.size() == f.leaf_count());
  }
}

TEST_CASE("reduction offsets agree with the blob geometry and with surgery") {
  for (const auto& f : sample_forms()) {
    Network net = host(f);
    DistanceMatrix m = sl_matrix(net);
    BlobReduction r = reduce_pendant(m, f, "z");
    CHECK(r.matrix == reduce_by_geometry(m, f, "z"));
    CHECK(r.matrix == sl_matrix(l2test::replace_part_by_leaf(net, f.leaves(), "z")));
    CHECK(is_isomorphic(expand_pendant(l2test::replace_part_by_leaf(net, f.leaves(), "z"), "z", f), net));
  }
}

TEST_CASE("identification on figure 3") {
  DistanceMatrix m = reduce_cherry(sl_matrix(l2test::fixture("figure3.net")), "f", "g", "z");
  CHECK(identify_pendant(m, {"a", "b", "c1", "c2"}).to_string() == "Level2((a),(b),(c1,c2),())");
  CHECK(identify_pendant(m, {"d1", "d2"}).to_string() == "Level1(d1,d2)");
  CHECK_THROWS_AS(identify_pendant(m.shortest_only(), {"d1", "d2"}), NoConsistentForm);
}

TEST_CASE("identification on random networks") {
  int blobs_seen = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    GenParams p;
    p.seed = seed;
    p.min_blobs = 1;
    auto [net, m] = peel(random_network(p));
    Decomposition d = decompose(net);
    for (const auto& b : d.blobs) {
      PendantInfo info;
      try {
        info = classify_pendant(net, b);
      } catch (const NotPendant&) {
        continue;
      }
      if (info.form.leaf_count() + 2 > m.size()) continue;
      ++blobs_seen;
      auto part = info.form.leaves();
      std::sort(part.begin(), part.end());
      CHECK(identify_pendant(m, part) == info.form);
      auto cands = pendant_candidates(m, part, false);
      CHECK(std::find(cands.begin(), cands.end(), info.form) != cands.end());
      if (!is_bad_form(info.form)) CHECK(cands.size() == 1);
      CHECK(reduce_pendant(m, info.form, "zz").matrix ==
            sl_matrix(l2test::replace_part_by_leaf(net, part, "zz")));
    }
  }
  CHECK(blobs_seen > 40);
}

TEST_CASE("bad forms") {
  CHECK(is_bad_form(PendantForm::level1({"a", "b"})));
  CHECK(is_bad_form(PendantForm::level1({"a", "b", "c"})));
  CHECK_FALSE(is_bad_form(PendantForm::level1({"a", "b", "c", "d"})));
  CHECK(is_bad_form(PendantForm::level2({"a", "b"}, {}, {}, {})));
  CHECK(is_bad_form(PendantForm::level2({"a", "b", "c"}, {}, {}, {})));
  CHECK_FALSE(is_bad_form(PendantForm::level2({"a"}, {}, {}, {})));
  CHECK_FALSE(is_bad_form(PendantForm::level2({"a", "b"}, {"c"}, {}, {})));
}

TEST_CASE("bad blobs are invisible to shortest distances") {
  Network l1 = host(PendantForm::level1({"a1", "a2"}));
  Network l2 = host(PendantForm::level2({"a1", "a2"}, {}, {}, {}));
  DistanceMatrix m1 = reduce_cherry(shortest_matrix(l1), "x", "y", "w");
  DistanceMatrix m2 = reduce_cherry(shortest_matrix(l2), "x", "y", "w");
  // Only the attachment distance differs, by one, uniformly.
  CHECK(m1.shortest("a1", "a2") == m2.shortest("a1", "a2"));
  CHECK(m2.shortest("a1", "w") - m1.shortest("a1", "w") == 1);
  auto c1 = pendant_candidates(m1, {"a1", "a2"}, false);
  CHECK(c1.size() == 2);
  CHECK(pendant_candidates(reduce_cherry(sl_matrix(l1), "x", "y", "w"), {"a1", "a2"}, true).size() == 1);
}

TEST_CASE("dropping the middle of a bad chain of three") {
  Network net = host(PendantForm::level1({"a1", "a2", "a3"}));
  DistanceMatrix m = shortest_matrix(net);
  DistanceMatrix dropped = drop_middle_of_bad_triple(m, "a1", "a2", "a3");
  CHECK_FALSE(dropped.contains("a2"));
  CHECK(dropped.shortest("a1", "a3") == 3);
  // Same as the network with a2's spine vertex suppressed.
  CHECK(dropped == shortest_matrix(host(PendantForm::level1({"a1", "a3"}))));
  CHECK_THROWS_AS(drop_middle_of_bad_triple(m, "a1", "a3", "a2"), NoConsistentForm);
}

TEST_CASE("expand needs the leaf") {
  CHECK_THROWS_AS(expand_pendant(l2test::fixture("figure3.net"), "nope", PendantForm::level1({"p", "q"})),
                  UnknownLeaf);
}
