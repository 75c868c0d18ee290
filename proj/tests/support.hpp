#pragma once

#include <string>
#include <vector>

#include "l2net/metrics.hpp"
#include "l2net/network.hpp"

namespace l2test {

std::string fixture_text(const std::string& name);
l2net::Network fixture(const std::string& name);

// Split conditions checked literally over every quadruple a,a' in `side`,
// b,b' outside.
bool literal_cut_split(const l2net::DistanceMatrix& m, const std::vector<std::string>& side);

// The network with the pendant part holding exactly `taxa` cut off at its
// cut-edge and replaced by a single leaf `z` on the other end.
l2net::Network replace_part_by_leaf(const l2net::Network& net, const std::vector<std::string>& taxa,
                                    const std::string& z);

// Same network with fresh vertex ids, edges inserted in shuffled order.
l2net::Network scramble_ids(const l2net::Network& net, unsigned seed);

}  // namespace l2test
