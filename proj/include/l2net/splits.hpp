#pragma once

#include <string>
#include <vector>

#include "l2net/blobs.hpp"
#include "l2net/metrics.hpp"

namespace l2net {

// Four-point test on shortest distances: for a, a' in `side` and b, b' in the
// rest (equal allowed),
//   d(a,b) + d(a',b') == d(a,b') + d(a',b)
//   d(a,a') + d(b,b') <= d(a,b) + d(a',b') - 2.
// Throws EmptySide.
bool is_cut_split(const DistanceMatrix& m, const std::vector<std::string>& side);

enum class SplitSearch {
  Auto,        // structured, falling back to exhaustive when that fails
  Exhaustive,  // every bipartition; limited to `exhaustive_limit` taxa
  Structured,  // peel cherries and pendant blobs, test what they merge
};

// Non-trivial splits (both sides at least two taxa), sorted.
std::vector<Split> all_splits(const DistanceMatrix& m, SplitSearch mode = SplitSearch::Auto,
                              std::size_t exhaustive_limit = 18);

// Inclusion-minimal sides of non-trivial splits in a cherry-free matrix,
// found among connected unions of at most four chains. Sorted. Throws
// NoNontrivialSplit.
std::vector<std::vector<std::string>> minimal_parts(const DistanceMatrix& m);

}  // namespace l2net
