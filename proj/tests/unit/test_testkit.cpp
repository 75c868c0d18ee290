#include <doctest.h>

#include "l2net/blobs.hpp"
#include "l2net/errors.hpp"
#include "l2net/pendant.hpp"
#include "l2net/testkit.hpp"
#include "support.hpp"

using namespace l2net;

TEST_CASE("generation is deterministic") {
  GenParams p;
  p.seed = 77;
  CHECK(format_network(random_network(p)) == format_network(random_network(p)));
  p.require_leaf_every_side = true;
  CHECK(format_network(random_network(p)) == format_network(random_network(p)));
}

TEST_CASE("generated networks respect the parameters") {
  for (std::uint64_t seed = 1; seed <= 8000; ++seed) {
    GenParams p;
    p.seed = seed;
    Network net = random_network(p);
    REQUIRE(is_valid(net));
    auto taxa = net.taxa().size();
    CHECK(taxa >= 5);
    CHECK(taxa <= 20);
    CHECK(level(net) <= 2);
    CHECK(decompose(net).blobs.size() <= 4);
  }
}

TEST_CASE("bad shapes can be excluded") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    GenParams p;
    p.seed = seed;
    p.allow_bad_blobs = false;
    Network net = random_network(p);
    Decomposition d = decompose(net);
    for (std::size_t b = 0; b < d.blobs.size(); ++b) {
      REQUIRE_FALSE(is_bad_shape(net, static_cast<int>(b)));
      PendantForm form;
      try {
        form = classify_pendant(net, d.blobs[b]).form;
      } catch (const NotPendant&) {
        continue;
      }
      CHECK_FALSE(is_bad_form(form));
    }
  }
}

TEST_CASE("generator mode puts a leaf on every side") {
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    GenParams p;
    p.seed = seed;
    p.require_leaf_every_side = true;
    p.cherry_rate = 0;
    Network net = random_network(p);
    REQUIRE(is_valid(net));
    Decomposition d = decompose(net);
    REQUIRE(d.blobs.size() == 1);
    GeneratorGraph g = generator(net);
    for (const auto& side : g.sides) CHECK_FALSE(side.chain.empty());
  }
}

TEST_CASE("infeasible parameters") {
  GenParams p;
  p.min_leaves = 10;
  p.max_leaves = 5;
  CHECK_THROWS_AS(random_network(p), InfeasibleParams);
}

TEST_CASE("round trips") {
  CHECK(verify_roundtrip(l2test::fixture("figure3.net"), RoundTripMode::Sl).pass);
  RoundTripReport r = verify_roundtrip(l2test::fixture("figure1_left.net"), RoundTripMode::Shortest);
  CHECK(r.pass);
  CHECK(r.expected == ReconstructionResult::Outcome::Ambiguous);
  CHECK(r.survivors == 2);
  CHECK(verify_roundtrip(l2test::fixture("figure4.net"), RoundTripMode::Genside).pass);
  CHECK(parse_mode(mode_name(RoundTripMode::Genside)) == RoundTripMode::Genside);
}
