#pragma once

#include <map>
#include <string>
#include <vector>

#include "l2net/metrics.hpp"
#include "l2net/network.hpp"
#include "l2net/pendant_form.hpp"

namespace l2net {

// Distances realised by a pendant blob on its own: from the attachment
// vertex u to each leaf, and between the leaves.
struct FormGeometry {
  std::map<std::string, int> shortest_from_u;
  std::map<std::string, int> longest_from_u;
  DistanceMatrix internal;  // sl matrix over the blob's leaves
};
FormGeometry form_geometry(const PendantForm& form);

// Network made of the blob, its leaves and a pendant leaf `z` on u.
Network form_network(const PendantForm& form, const std::string& z);

// Pendant form of the minimal part `part` read from an sl matrix with the
// chain-count rules, orientation settled against the matrix. Throws
// NoConsistentForm.
PendantForm identify_pendant(const DistanceMatrix& m, const std::vector<std::string>& part);

// Every layout of `part` consistent with the matrix: internal distances
// match and d(x,a) - d(u,a) is the same for every leaf a of the part and
// every outside x. Uses longest distances only when asked and present.
std::vector<PendantForm> pendant_candidates(const DistanceMatrix& m, const std::vector<std::string>& part,
                                            bool use_longest);

struct BlobReduction {
  DistanceMatrix matrix;
  std::string z;
  PendantForm form;
  std::string anchor;  // chain whose set distance gives d(., z): "a" or "c"
};

// Replace the pendant blob by leaf z using the per-form offsets.
BlobReduction reduce_pendant(const DistanceMatrix& m, const PendantForm& form, const std::string& z);
// Same result derived from the blob's own geometry.
DistanceMatrix reduce_by_geometry(const DistanceMatrix& m, const PendantForm& form, const std::string& z);

// Replace leaf z by the pendant blob. Throws UnknownLeaf.
Network expand_pendant(const Network& net, const std::string& z, const PendantForm& form);

// Blob shapes whose shortest distances cannot tell a cycle from a level-2
// blob: level-1 or (a,0,0,0) with two or three leaves.
bool is_bad_form(const PendantForm& form);

// Remove a2 from a bad chain (a1,a2,a3) and set d(a1,a3) = 3.
DistanceMatrix drop_middle_of_bad_triple(const DistanceMatrix& m, const std::string& a1, const std::string& a2,
                                         const std::string& a3);

}  // namespace l2net
