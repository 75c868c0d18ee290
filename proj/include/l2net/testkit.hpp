#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "l2net/altpath.hpp"
#include "l2net/network.hpp"
#include "l2net/reconstruct.hpp"

namespace l2net {

struct GenParams {
  int min_leaves = 5;
  int max_leaves = 20;
  int min_blobs = 0;
  int max_blobs = 4;
  // Relative weight of level-1 and level-2 blobs.
  double level1_weight = 1.0;
  double level2_weight = 1.0;
  // Chain length on a blob side or generator side is 1..max_chain.
  int max_chain = 3;
  // Blob shapes that can end up as a bad pendant blob: cycles of length 3
  // or 4 and level-2 blobs with main paths of 0, 1 and 2-3 vertices.
  bool allow_bad_blobs = true;
  // When bad shapes are allowed, the chance that a blob is forced into one.
  double bad_blob_rate = 0.0;
  // Build from a random cubic generator instead, with a leaf chain on every
  // side; the level is drawn from 1..max_level.
  bool require_leaf_every_side = false;
  int max_level = 3;
  // Chance that a leaf is replaced by a cherry in the generator mode.
  double cherry_rate = 0.15;
  std::uint64_t seed = 1;
};

// Valid network honouring `p`; the same parameters give the same network.
// Throws InfeasibleParams.
Network random_network(const GenParams& p);

// True for the blob shapes excluded by allow_bad_blobs = false.
bool is_bad_shape(const Network& net, int blob_index);

// Random binary tree with `leaves` leaves, proper colouring and leaf sizes
// in {2,3}.
ColoredTree random_colored_tree(int leaves, std::uint64_t seed);

enum class RoundTripMode { Sl, Shortest, Genside };
std::string mode_name(RoundTripMode m);
RoundTripMode parse_mode(const std::string& s);

struct RoundTripReport {
  bool pass = false;
  ReconstructionResult::Outcome outcome = ReconstructionResult::Outcome::Unrealizable;
  ReconstructionResult::Outcome expected = ReconstructionResult::Outcome::Unique;
  std::size_t survivors = 0;
  std::string message;
  std::vector<std::string> trace;
};

// Distances of `net`, reconstruction in `mode`, comparison by isomorphism.
// Shortest mode expects Ambiguous (with `net` among the survivors) exactly
// when the network contains an alt-path structure.
RoundTripReport verify_roundtrip(const Network& net, RoundTripMode mode);

}  // namespace l2net
