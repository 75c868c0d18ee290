#pragma once

#include <string>
#include <vector>

#include "l2net/chains.hpp"
#include "l2net/metrics.hpp"
#include "l2net/network.hpp"
#include "l2net/pendant_form.hpp"

namespace l2net {

struct TraceStep {
  enum class Kind { Cherry, Blob, DropMiddle };
  Kind kind = Kind::Cherry;
  std::string z;                  // Cherry/Blob: the new leaf
  std::string x, y;               // Cherry: the merged pair
  PendantForm form;               // Blob
  std::string a1, a2, a3;         // DropMiddle: a2 removed between a1 and a3
  std::string to_string() const;
};
using ReductionTrace = std::vector<TraceStep>;

// Undo every step of `trace`, last step first, starting from `base`.
Network replay(const Network& base, const ReductionTrace& trace);

struct ReconstructionResult {
  enum class Outcome { Unique, Ambiguous, Unrealizable };
  Outcome outcome = Outcome::Unrealizable;
  std::vector<Network> networks;  // sorted by canonical form, pairwise non-isomorphic
  ReductionTrace trace;           // of the first network
  std::string reason;             // why the matrix was judged unrealizable
};
std::string outcome_name(ReconstructionResult::Outcome o);

// Level-2 network with these sl distances. Cherries go first, then the
// lexicographically smallest minimal part; the result is replayed and checked
// against the input.
ReconstructionResult reconstruct_sl(const DistanceMatrix& m);

// All level-2 networks with these shortest distances. Blob shapes the matrix
// cannot settle are branched on; throws BranchBudgetExceeded past
// `branch_cap` explored branches.
ReconstructionResult reconstruct_shortest(const DistanceMatrix& m, std::size_t branch_cap = 4096);

// Cherry-free matrix with no non-trivial split: one edge, one cycle, or one
// level-2 blob. Every layout is tried and checked.
ReconstructionResult reconstruct_single_blob(const DistanceMatrix& m);

// Generator structure read from a matrix whose network has a leaf on every
// generator side. A triple is three chains meeting at one generator vertex;
// a bulb is a petal chain forming a loop at the end of its partner chain.
struct GenSideTriple {
  int chain[3];
  std::string end[3];  // the end-leaf of each chain at the shared vertex
};
struct GenSideBulb {
  int petal = 0;
  int partner = 0;
  std::string partner_end;
};
struct GenSideStructure {
  std::vector<LeafChain> chains;
  std::vector<GenSideTriple> triples;
  std::vector<GenSideBulb> bulbs;
};
GenSideStructure extract_triples_and_bulbs(const DistanceMatrix& m);
GenSideStructure extract_triples_and_bulbs(const DistanceMatrix& m, const std::vector<LeafChain>& chains,
                                           const ChainAdjacency& adjacency);

ReconstructionResult reconstruct_genside(const DistanceMatrix& m);

}  // namespace l2net
